#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "lexigauge/types.hpp"
#include "lexigauge/wqs.hpp"

namespace lexigauge {

// Per-language constants. The entropy model exponent is stored as published,
// i.e. as (alpha - 2) / (alpha - 1); alpha is derived on demand.
struct LanguageParams {
  Language language = Language::English;
  double heaps_c = 0;
  double heaps_beta = 0;
  double entropy_exponent = 0;
  double chars_per_syllable = 0;
  std::vector<std::string> phrase_terminators;
  WqsCoefficients wqs_preset;
};

// Throws ParameterError when any constant is outside its domain.
void validate(const LanguageParams& params);

// D_m = 3.766 L^0.67, h_m = d^0.1523, 3.57 chars/syllable, English WQS preset.
LanguageParams english_params();
// D_m = 2.3 L^0.75, h_m = d^0.1763, 2.94 chars/syllable, Spanish WQS preset.
LanguageParams spanish_params();
LanguageParams default_params(Language language);

// Alternative characters-per-syllable constants: "gualda-gil" (default),
// "eaton", "irest".
double chars_per_syllable(Language language, std::string_view source);

// Preset file: language,heaps_c,heaps_beta,entropy_exponent,c_sy. Rows
// override the built-in values of the matching language.
std::vector<LanguageParams> load_language_params(const std::filesystem::path& path);
void save_language_params(const std::filesystem::path& path, const std::vector<LanguageParams>& params);

double alpha_from_exponent(double exponent);

double heaps_predict(const LanguageParams& params, double length);
double entropy_model_predict(const LanguageParams& params, double specific_diversity);

// (D - D_m) / D_m.
double relative_diversity(double diversity, double model_diversity);
// h - h_m (a difference, unlike relative_diversity).
double relative_entropy(double entropy, double model_entropy);

struct LengthDiversity {
  double length;
  double diversity;
};

struct DiversityEntropy {
  double specific_diversity;
  double entropy;
};

struct HeapsFit {
  double c = 0;
  double beta = 0;
  double residual_sum = 0;          // sum (D - c L^beta)^2 at the solution
  double initial_residual_sum = 0;  // same objective at the log-space start
  int iterations = 0;
};

struct EntropyModelFit {
  double exponent = 0;
  double residual_sum = 0;
  double initial_residual_sum = 0;
  int iterations = 0;
};

// Linear-space least squares, started from the log-log OLS line and refined
// by damped Gauss-Newton until the relative step drops below 1e-10.
HeapsFit fit_heaps(const std::vector<LengthDiversity>& points);
EntropyModelFit fit_entropy_model(const std::vector<DiversityEntropy>& points);

double heaps_residual_sum(const std::vector<LengthDiversity>& points, double c, double beta);
double entropy_residual_sum(const std::vector<DiversityEntropy>& points, double exponent);

}  // namespace lexigauge
