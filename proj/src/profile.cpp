#include "lexigauge/profile.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <unordered_map>

#include <fmt/core.h>

#include "lexigauge/csv.hpp"
#include "lexigauge/error.hpp"

namespace lexigauge {

RankedProfile RankedProfile::from_counts(std::vector<std::pair<std::string, std::uint64_t>> counts) {
  std::unordered_map<std::string, std::uint64_t> merged;
  for (auto& [symbol, count] : counts) {
    if (count > 0) merged[std::move(symbol)] += count;
  }
  RankedProfile p;
  p.entries_.reserve(merged.size());
  for (auto& [symbol, count] : merged) {
    p.entries_.push_back({symbol, count});
    p.length_ += count;
  }
  std::sort(p.entries_.begin(), p.entries_.end(), [](const ProfileEntry& a, const ProfileEntry& b) {
    if (a.count != b.count) return a.count > b.count;
    return a.symbol < b.symbol;
  });
  return p;
}

std::vector<double> RankedProfile::frequencies() const {
  std::vector<double> f;
  f.reserve(entries_.size());
  for (const auto& e : entries_) f.push_back(static_cast<double>(e.count));
  return f;
}

RankedProfile build_profile(const TokenizedText& text) {
  std::unordered_map<std::string, std::uint64_t> counts;
  for (const auto& tok : text.symbols) ++counts[tok.text];
  return RankedProfile::from_counts({counts.begin(), counts.end()});
}

double specific_diversity(const RankedProfile& profile) {
  if (profile.length() == 0) throw UndefinedInputError("specific diversity of an empty text");
  return static_cast<double>(profile.diversity()) / static_cast<double>(profile.length());
}

std::uint64_t segment_mass(const RankedProfile& profile, std::size_t a, std::size_t b) {
  if (a < 1 || a > b || b > profile.diversity()) {
    throw ParameterError(fmt::format("rank segment [{}, {}] outside [1, {}]", a, b, profile.diversity()));
  }
  std::uint64_t sum = 0;
  for (std::size_t r = a; r <= b; ++r) sum += profile.frequency(r);
  return sum;
}

double shannon_bits(std::span<const double> frequencies) {
  double total = 0;
  for (double f : frequencies) total += f;
  if (!(total > 0)) throw UndefinedInputError("entropy of an empty distribution");
  double h = 0;
  for (double f : frequencies) {
    if (f > 0) {
      const double p = f / total;
      h -= p * std::log2(p);
    }
  }
  return h;
}

double normalized_entropy(std::span<const double> frequencies) {
  std::size_t diversity = 0;
  for (double f : frequencies) diversity += f > 0;
  const double bits = shannon_bits(frequencies);
  if (diversity < 2) return 0.0;
  // Rounding can push a uniform profile a hair past 1.
  return std::clamp(bits / std::log2(static_cast<double>(diversity)), 0.0, 1.0);
}

double entropy(const RankedProfile& profile) {
  if (profile.length() == 0) throw UndefinedInputError("entropy of an empty text");
  const auto f = profile.frequencies();
  return normalized_entropy(f);
}

void write_profile_csv(std::ostream& out, const RankedProfile& profile) {
  out << "rank,symbol,frequency\n";
  std::size_t rank = 0;
  for (const auto& e : profile.entries()) {
    out << ++rank << ',' << csv::escape(e.symbol) << ',' << e.count << '\n';
  }
}

}  // namespace lexigauge
