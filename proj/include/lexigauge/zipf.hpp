#pragma once

#include <cstddef>
#include <span>

#include "lexigauge/profile.hpp"

namespace lexigauge {

// Power-law reference f(r) = f_a / r^g over the rank segment [first_rank,
// last_rank]. The anchor is the observed frequency at first_rank.
struct ZipfFit {
  double exponent = 1.0;
  double anchor = 0.0;
  std::size_t first_rank = 1;
  std::size_t last_rank = 1;
};

// Builds a fit over [a, b] anchored at the observed frequency of rank a.
ZipfFit make_zipf_fit(std::span<const double> frequencies, double exponent, std::size_t a, std::size_t b);
ZipfFit make_zipf_fit(const RankedProfile& profile, double exponent, std::size_t a, std::size_t b);

// Reference mass: sum over r in [a, b] of anchor / r^g.
double zipf_reference(std::span<const double> frequencies, const ZipfFit& fit);
double zipf_reference(const RankedProfile& profile, const ZipfFit& fit);

// (observed mass - reference mass) / reference mass over ranks 1..D.
double zipf_deviation(std::span<const double> frequencies, double exponent);
double zipf_deviation(const RankedProfile& profile, double exponent);

// Exponent g minimizing sum_r (log f_r - (log f_1 - g log r))^2, i.e. a
// log-log least-squares line through the first-rank point. Needs D >= 3.
double fit_zipf_exponent(std::span<const double> frequencies);
double fit_zipf_exponent(const RankedProfile& profile);

}  // namespace lexigauge
