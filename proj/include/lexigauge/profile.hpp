#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lexigauge/tokenizer.hpp"

namespace lexigauge {

struct ProfileEntry {
  std::string symbol;
  std::uint64_t count = 0;

  friend bool operator==(const ProfileEntry&, const ProfileEntry&) = default;
};

// Symbols ranked by descending frequency, ties broken by ascending byte
// order of the symbol. Rank r (1-based) is entries()[r - 1].
class RankedProfile {
 public:
  RankedProfile() = default;

  // Builds from arbitrary (symbol, count) pairs; zero counts are dropped and
  // duplicate symbols are merged.
  static RankedProfile from_counts(std::vector<std::pair<std::string, std::uint64_t>> counts);

  const std::vector<ProfileEntry>& entries() const { return entries_; }
  std::size_t diversity() const { return entries_.size(); }
  std::uint64_t length() const { return length_; }
  bool empty() const { return entries_.empty(); }

  // Frequency at 1-based rank.
  std::uint64_t frequency(std::size_t rank) const { return entries_.at(rank - 1).count; }
  std::vector<double> frequencies() const;

 private:
  std::vector<ProfileEntry> entries_;
  std::uint64_t length_ = 0;
};

RankedProfile build_profile(const TokenizedText& text);

// D / L.
double specific_diversity(const RankedProfile& profile);

// Sum of frequencies over ranks a..b inclusive (1-based).
std::uint64_t segment_mass(const RankedProfile& profile, std::size_t a, std::size_t b);

// Shannon entropy in bits of the frequency distribution.
double shannon_bits(std::span<const double> frequencies);

// Entropy with logarithm base D, in [0, 1]. Zero when only one symbol occurs.
double normalized_entropy(std::span<const double> frequencies);
double entropy(const RankedProfile& profile);

// rank,symbol,frequency rows.
void write_profile_csv(std::ostream& out, const RankedProfile& profile);

}  // namespace lexigauge
