#include "lexigauge/zipf.hpp"

#include <cmath>

#include <fmt/core.h>

#include "lexigauge/error.hpp"

namespace lexigauge {

namespace {

void check_segment(std::span<const double> f, std::size_t a, std::size_t b) {
  if (f.empty()) throw UndefinedInputError("Zipf reference of an empty profile");
  if (a < 1 || a > b || b > f.size()) {
    throw ParameterError(fmt::format("rank segment [{}, {}] outside [1, {}]", a, b, f.size()));
  }
}

}  // namespace

ZipfFit make_zipf_fit(std::span<const double> frequencies, double exponent, std::size_t a, std::size_t b) {
  check_segment(frequencies, a, b);
  if (!std::isfinite(exponent) || exponent < 0) {
    throw ParameterError(fmt::format("Zipf exponent must be finite and >= 0, got {}", exponent));
  }
  return ZipfFit{exponent, frequencies[a - 1], a, b};
}

ZipfFit make_zipf_fit(const RankedProfile& profile, double exponent, std::size_t a, std::size_t b) {
  const auto f = profile.frequencies();
  return make_zipf_fit(f, exponent, a, b);
}

double zipf_reference(std::span<const double> frequencies, const ZipfFit& fit) {
  check_segment(frequencies, fit.first_rank, fit.last_rank);
  double z = 0;
  for (std::size_t r = fit.first_rank; r <= fit.last_rank; ++r) {
    z += fit.anchor / std::pow(static_cast<double>(r), fit.exponent);
  }
  return z;
}

double zipf_reference(const RankedProfile& profile, const ZipfFit& fit) {
  const auto f = profile.frequencies();
  return zipf_reference(f, fit);
}

double zipf_deviation(std::span<const double> frequencies, double exponent) {
  if (frequencies.empty()) throw UndefinedInputError("Zipf deviation of an empty profile");
  const auto fit = make_zipf_fit(frequencies, exponent, 1, frequencies.size());
  const double z = zipf_reference(frequencies, fit);
  if (!(z > 0)) throw UndefinedInputError("Zipf reference mass is not positive");
  double mass = 0;
  for (double f : frequencies) mass += f;
  return (mass - z) / z;
}

double zipf_deviation(const RankedProfile& profile, double exponent) {
  const auto f = profile.frequencies();
  return zipf_deviation(f, exponent);
}

double fit_zipf_exponent(std::span<const double> frequencies) {
  if (frequencies.size() < 3) {
    throw InsufficientDataError(
        fmt::format("Zipf exponent fit needs at least 3 ranks, got {}", frequencies.size()));
  }
  const double log_f1 = std::log(frequencies[0]);
  double num = 0;
  double den = 0;
  for (std::size_t r = 2; r <= frequencies.size(); ++r) {
    if (!(frequencies[r - 1] > 0)) throw ParameterError("Zipf fit needs positive frequencies");
    const double lr = std::log(static_cast<double>(r));
    num += (log_f1 - std::log(frequencies[r - 1])) * lr;
    den += lr * lr;
  }
  return num / den;
}

double fit_zipf_exponent(const RankedProfile& profile) {
  const auto f = profile.frequencies();
  return fit_zipf_exponent(f);
}

}  // namespace lexigauge
