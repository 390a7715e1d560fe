#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "lexigauge/error.hpp"
#include "lexigauge/models.hpp"

using namespace lexigauge;

TEST_CASE("preset predictions") {
  // 3.766 * 10^(4 * 0.67) = 3.766 * 10^2.68
  CHECK(heaps_predict(english_params(), 1e4) == doctest::Approx(3.766 * std::pow(10.0, 2.68)));
  CHECK(std::abs(heaps_predict(english_params(), 1e4) - 1802.5) <= 0.5);
  CHECK(std::abs(heaps_predict(spanish_params(), 1e4) - 2300.0) <= 1e-6);
  CHECK(std::abs(entropy_model_predict(english_params(), 0.5) - 0.8998) <= 0.0005);
  CHECK(entropy_model_predict(spanish_params(), 1.0) == 1.0);
  CHECK(heaps_predict(english_params(), 1.0) == doctest::Approx(3.766));
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(heaps_predict(english_params(), 0.5), ParameterError);
  CHECK_THROWS_AS(entropy_model_predict(english_params(), 0.0), ParameterError);
  CHECK_THROWS_AS(entropy_model_predict(english_params(), 1.2), ParameterError);
  CHECK_THROWS_AS(relative_diversity(10, 0), ParameterError);
  CHECK_THROWS_AS(relative_entropy(1.1, 0.5), ParameterError);
  LanguageParams bad = english_params();
  bad.heaps_beta = 1.0;
  CHECK_THROWS_AS(validate(bad), ParameterError);
  CHECK_NOTHROW(validate(english_params()));
  CHECK_NOTHROW(validate(spanish_params()));
}

TEST_CASE("relative deviations") {
  CHECK(relative_diversity(110, 100) == doctest::Approx(0.1));
  CHECK(relative_diversity(90, 100) == doctest::Approx(-0.1));
  CHECK(relative_entropy(0.9, 0.85) == doctest::Approx(0.05));
}

TEST_CASE("alpha from the entropy exponent") {
  // e = (alpha - 2) / (alpha - 1)  <=>  alpha = (2 - e) / (1 - e)
  const double alpha = alpha_from_exponent(0.1523);
  CHECK((alpha - 2) / (alpha - 1) == doctest::Approx(0.1523).epsilon(1e-14));
  CHECK_THROWS_AS(alpha_from_exponent(1.0), ParameterError);
}

TEST_CASE("syllable constant sources") {
  CHECK(chars_per_syllable(Language::English, "gualda-gil") == 3.57);
  CHECK(chars_per_syllable(Language::Spanish, "gualda-gil") == 2.94);
  CHECK_THROWS_AS(chars_per_syllable(Language::English, "other"), ParameterError);
}

TEST_CASE("fit_heaps recovers noiseless parameters") {
  for (auto [c, beta] : {std::pair{3.766, 0.67}, std::pair{2.3, 0.75}, std::pair{10.0, 0.4}}) {
    std::vector<LengthDiversity> pts;
    for (double L = 50; L < 1e6; L *= 1.6) pts.push_back({L, c * std::pow(L, beta)});
    const auto fit = fit_heaps(pts);
    CHECK(fit.c == doctest::Approx(c).epsilon(1e-8));
    CHECK(fit.beta == doctest::Approx(beta).epsilon(1e-8));
    CHECK(fit.residual_sum <= fit.initial_residual_sum);
  }
}

TEST_CASE("fit_heaps on noisy data never ends worse than its start") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> noise(0.0, 0.08);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<LengthDiversity> pts;
    for (double L = 200; L < 3e4; L *= 1.3) pts.push_back({L, 3.0 * std::pow(L, 0.7) * (1 + noise(rng))});
    const auto fit = fit_heaps(pts);
    CHECK(fit.residual_sum <= fit.initial_residual_sum);
    CHECK(fit.residual_sum == doctest::Approx(heaps_residual_sum(pts, fit.c, fit.beta)));
    // Local optimality: small perturbations do not improve the objective.
    for (double dc : {-1e-4, 1e-4}) {
      CHECK(heaps_residual_sum(pts, fit.c * (1 + dc), fit.beta) >= fit.residual_sum * (1 - 1e-12));
    }
    for (double db : {-1e-5, 1e-5}) {
      CHECK(heaps_residual_sum(pts, fit.c, fit.beta + db) >= fit.residual_sum * (1 - 1e-12));
    }
  }
}

TEST_CASE("fit_heaps rejects degenerate input") {
  CHECK_THROWS_AS(fit_heaps({{100, 30}, {200, 50}}), InsufficientDataError);
  CHECK_THROWS_AS(fit_heaps({{100, 30}, {100, 31}, {100, 29}}), InsufficientDataError);
  CHECK_THROWS_AS(fit_heaps({{0, 30}, {100, 31}, {200, 29}}), ParameterError);
}

TEST_CASE("fit_entropy_model recovers noiseless exponents") {
  for (double e : {0.1523, 0.1763, 0.3}) {
    std::vector<DiversityEntropy> pts;
    for (double d = 0.02; d < 0.99; d += 0.03) pts.push_back({d, std::pow(d, e)});
    const auto fit = fit_entropy_model(pts);
    CHECK(fit.exponent == doctest::Approx(e).epsilon(1e-9));
    CHECK(fit.residual_sum <= fit.initial_residual_sum);
  }
  CHECK_THROWS_AS(fit_entropy_model({{0.5, 0.9}}), InsufficientDataError);
  CHECK_THROWS_AS(fit_entropy_model({{0.5, 0.9}, {1.0, 1.0}}), ParameterError);
}

TEST_CASE("language params file round trip") {
  testing::TempDir dir("params");
  LanguageParams en = english_params();
  en.heaps_c = 4.5;
  en.entropy_exponent = 0.2;
  save_language_params(dir / "p.csv", {en, spanish_params()});
  const auto loaded = load_language_params(dir / "p.csv");
  REQUIRE(loaded.size() == 2);
  CHECK(loaded[0].language == Language::English);
  CHECK(loaded[0].heaps_c == 4.5);
  CHECK(loaded[0].entropy_exponent == 0.2);
  CHECK(loaded[1].heaps_beta == 0.75);
}

TEST_CASE("bundled language params match the built-in presets") {
  const auto loaded = load_language_params(testing::data_dir() / "language_params.csv");
  REQUIRE(loaded.size() == 2);
  for (const auto& p : loaded) {
    const auto builtin = default_params(p.language);
    CHECK(p.heaps_c == builtin.heaps_c);
    CHECK(p.heaps_beta == builtin.heaps_beta);
    CHECK(p.entropy_exponent == builtin.entropy_exponent);
    CHECK(p.chars_per_syllable == builtin.chars_per_syllable);
  }
}
