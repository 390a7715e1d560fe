#include <doctest.h>

#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "lexigauge/error.hpp"
#include "lexigauge/profile.hpp"

using namespace lexigauge;

namespace {

// Entropy straight from the definition, with long double accumulation.
double oracle_entropy(const std::vector<std::uint64_t>& counts) {
  long double total = 0;
  for (auto c : counts) total += c;
  long double h = 0;
  for (auto c : counts) {
    const long double p = c / total;
    h -= p * std::log(p);
  }
  if (counts.size() < 2) return 0.0;
  return static_cast<double>(h / std::log(static_cast<long double>(counts.size())));
}

RankedProfile profile_of(const std::vector<std::uint64_t>& counts) {
  std::vector<std::pair<std::string, std::uint64_t>> pairs;
  for (std::size_t i = 0; i < counts.size(); ++i) pairs.emplace_back("s" + std::to_string(i), counts[i]);
  return RankedProfile::from_counts(pairs);
}

}  // namespace

TEST_CASE("profile ranks by count, then symbol") {
  const auto p = RankedProfile::from_counts({{"b", 2}, {"a", 2}, {"c", 5}, {"d", 0}, {"a", 1}});
  REQUIRE(p.diversity() == 3);
  CHECK(p.entries()[0] == ProfileEntry{"c", 5});
  CHECK(p.entries()[1] == ProfileEntry{"a", 3});
  CHECK(p.entries()[2] == ProfileEntry{"b", 2});
  CHECK(p.length() == 10);
  CHECK(p.frequency(1) == 5);
  CHECK(segment_mass(p, 2, 3) == 5);
  CHECK_THROWS_AS(segment_mass(p, 0, 2), ParameterError);
  CHECK_THROWS_AS(segment_mass(p, 2, 4), ParameterError);
}

TEST_CASE("build_profile counts symbols of a tokenized text") {
  const auto p = build_profile(tokenize("the cat and the hat. The end.", Language::English));
  CHECK(p.length() == 9);
  CHECK(p.diversity() == 6);
  CHECK(p.entries()[0] == ProfileEntry{"the", 3});
  CHECK(p.entries()[1] == ProfileEntry{".", 2});
  CHECK(specific_diversity(p) == doctest::Approx(6.0 / 9.0));
}

TEST_CASE("specific diversity of an empty profile is undefined") {
  CHECK_THROWS_AS(specific_diversity(RankedProfile{}), UndefinedInputError);
}

TEST_CASE("entropy edge cases") {
  CHECK(entropy(profile_of({7})) == 0.0);
  CHECK(entropy(profile_of({1, 1, 1, 1})) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(entropy(profile_of({3, 1})) == doctest::Approx(0.8112781244591328).epsilon(1e-14));
}

TEST_CASE("entropy matches the definition on random profiles") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> diversity(2, 300);
  std::uniform_int_distribution<std::uint64_t> count(1, 5000);
  for (int i = 0; i < 300; ++i) {
    std::vector<std::uint64_t> counts(diversity(rng));
    for (auto& c : counts) c = count(rng);
    const double h = entropy(profile_of(counts));
    CHECK(h == doctest::Approx(oracle_entropy(counts)).epsilon(1e-12));
    CHECK(h >= 0.0);
    CHECK(h <= 1.0);
  }
}

TEST_CASE("merging two symbols never raises Shannon entropy in bits") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> diversity(3, 100);
  std::uniform_int_distribution<std::uint64_t> count(1, 100);
  for (int i = 0; i < 500; ++i) {
    std::vector<double> f(diversity(rng));
    for (auto& c : f) c = static_cast<double>(count(rng));
    const double before = shannon_bits(f);
    std::uniform_int_distribution<std::size_t> pick(1, f.size() - 1);
    const std::size_t k = pick(rng);
    f[0] += f[k];
    f.erase(f.begin() + static_cast<std::ptrdiff_t>(k));
    CHECK(shannon_bits(f) <= before + 1e-12);
  }
}

TEST_CASE("normalized entropy of a merged profile can rise") {
  // Base-D normalization changes with D, so merging is not monotone here.
  const std::vector<double> before{10, 1, 1};
  const std::vector<double> after{10, 2};
  CHECK(normalized_entropy(after) > normalized_entropy(before));
}

TEST_CASE("profile csv dump") {
  std::ostringstream out;
  write_profile_csv(out, RankedProfile::from_counts({{"a", 2}, {",", 1}}));
  CHECK(out.str() == "rank,symbol,frequency\n1,a,2\n2,\",\",1\n");
}
