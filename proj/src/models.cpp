#include "lexigauge/models.hpp"

#include <cmath>
#include <fstream>
#include <limits>

#include <fmt/core.h>

#include "lexigauge/csv.hpp"
#include "lexigauge/error.hpp"

namespace lexigauge {

namespace {

constexpr int kMaxIterations = 100;
constexpr double kStepTolerance = 1e-10;

std::vector<std::string> default_terminators() { return {".", ":", ";", "?", "!", "…"}; }

}  // namespace

void validate(const LanguageParams& p) {
  if (!(p.heaps_c > 0)) throw ParameterError(fmt::format("heaps_c must be > 0, got {}", p.heaps_c));
  if (!(p.heaps_beta > 0 && p.heaps_beta < 1)) {
    throw ParameterError(fmt::format("heaps_beta must be in (0, 1), got {}", p.heaps_beta));
  }
  if (!(p.entropy_exponent > 0 && p.entropy_exponent < 1)) {
    throw ParameterError(fmt::format("entropy_exponent must be in (0, 1), got {}", p.entropy_exponent));
  }
  if (!(p.chars_per_syllable > 0)) {
    throw ParameterError(fmt::format("c_sy must be > 0, got {}", p.chars_per_syllable));
  }
}

LanguageParams english_params() {
  return {Language::English, 3.766, 0.67, 0.1523, 3.57, default_terminators(),
          verbatim_preset(Language::English)};
}

LanguageParams spanish_params() {
  return {Language::Spanish, 2.3, 0.75, 0.1763, 2.94, default_terminators(),
          verbatim_preset(Language::Spanish)};
}

LanguageParams default_params(Language language) {
  return language == Language::English ? english_params() : spanish_params();
}

double chars_per_syllable(Language language, std::string_view source) {
  const bool en = language == Language::English;
  if (source == "gualda-gil") return en ? 3.57 : 2.94;
  if (source == "eaton") return en ? 1.69 : 2.67;
  if (source == "irest") return en ? 3.15 : 1.9;
  throw ParameterError(fmt::format("unknown syllable constant source '{}'", source));
}

std::vector<LanguageParams> load_language_params(const std::filesystem::path& path) {
  std::vector<LanguageParams> out;
  for (const auto& rec : csv::read_file(path)) {
    const auto& f = rec.fields;
    if (!f.empty() && f[0] == "language") continue;
    const auto where = fmt::format("{} row {}", path.filename().string(), rec.line);
    if (f.size() != 5) throw ParseError(fmt::format("{}: expected 5 fields, got {}", where, f.size()));
    LanguageParams p = default_params(parse_language(f[0]));
    p.heaps_c = csv::parse_double(f[1], where + " heaps_c");
    p.heaps_beta = csv::parse_double(f[2], where + " heaps_beta");
    p.entropy_exponent = csv::parse_double(f[3], where + " entropy_exponent");
    p.chars_per_syllable = csv::parse_double(f[4], where + " c_sy");
    validate(p);
    out.push_back(std::move(p));
  }
  return out;
}

void save_language_params(const std::filesystem::path& path, const std::vector<LanguageParams>& params) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(fmt::format("cannot write '{}'", path.string()));
  out << "language,heaps_c,heaps_beta,entropy_exponent,c_sy\n";
  for (const auto& p : params) {
    out << fmt::format("{},{:.10g},{:.10g},{:.10g},{:.10g}\n", to_code(p.language), p.heaps_c, p.heaps_beta,
                       p.entropy_exponent, p.chars_per_syllable);
  }
}

double alpha_from_exponent(double exponent) {
  if (exponent == 1.0) throw ParameterError("entropy exponent 1 has no finite alpha");
  return (2.0 - exponent) / (1.0 - exponent);
}

double heaps_predict(const LanguageParams& params, double length) {
  if (!(length >= 1)) throw ParameterError(fmt::format("text length must be >= 1, got {}", length));
  return params.heaps_c * std::pow(length, params.heaps_beta);
}

double entropy_model_predict(const LanguageParams& params, double d) {
  if (!(d > 0 && d <= 1)) throw ParameterError(fmt::format("specific diversity must be in (0, 1], got {}", d));
  return std::pow(d, params.entropy_exponent);
}

double relative_diversity(double diversity, double model_diversity) {
  if (!(model_diversity > 0)) {
    throw ParameterError(fmt::format("model diversity must be > 0, got {}", model_diversity));
  }
  return (diversity - model_diversity) / model_diversity;
}

double relative_entropy(double entropy, double model_entropy) {
  if (!(entropy >= 0 && entropy <= 1) || !(model_entropy >= 0 && model_entropy <= 1)) {
    throw ParameterError(fmt::format("entropies must be in [0, 1], got {} and {}", entropy, model_entropy));
  }
  return entropy - model_entropy;
}

double heaps_residual_sum(const std::vector<LengthDiversity>& points, double c, double beta) {
  double s = 0;
  for (const auto& p : points) {
    const double r = p.diversity - c * std::pow(p.length, beta);
    s += r * r;
  }
  return s;
}

double entropy_residual_sum(const std::vector<DiversityEntropy>& points, double exponent) {
  double s = 0;
  for (const auto& p : points) {
    const double r = p.entropy - std::pow(p.specific_diversity, exponent);
    s += r * r;
  }
  return s;
}

HeapsFit fit_heaps(const std::vector<LengthDiversity>& points) {
  if (points.size() < 3) {
    throw InsufficientDataError(fmt::format("Heaps fit needs at least 3 points, got {}", points.size()));
  }
  // Log-space OLS start.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& p : points) {
    if (!(p.length >= 1) || !(p.diversity > 0)) {
      throw ParameterError(fmt::format("Heaps fit needs L >= 1 and D > 0, got ({}, {})", p.length, p.diversity));
    }
    const double x = std::log(p.length);
    const double y = std::log(p.diversity);
    sx += x, sy += y, sxx += x * x, sxy += x * y;
  }
  const double n = static_cast<double>(points.size());
  const double sxx_c = sxx - sx * sx / n;
  if (!(sxx_c > 1e-12 * std::max(1.0, sxx))) {
    throw InsufficientDataError("Heaps fit needs points with distinct lengths");
  }
  double beta = (sxy - sx * sy / n) / sxx_c;
  double c = std::exp((sy - beta * sx) / n);

  HeapsFit fit;
  double sse = heaps_residual_sum(points, c, beta);
  fit.initial_residual_sum = sse;

  for (int it = 0; it < kMaxIterations; ++it) {
    // Normal equations of the linearized residual D - c L^beta.
    double a11 = 0, a12 = 0, a22 = 0, g1 = 0, g2 = 0;
    for (const auto& p : points) {
      const double lb = std::pow(p.length, beta);
      const double jc = lb;
      const double jb = c * lb * std::log(p.length);
      const double r = p.diversity - c * lb;
      a11 += jc * jc, a12 += jc * jb, a22 += jb * jb;
      g1 += jc * r, g2 += jb * r;
    }
    const double det = a11 * a22 - a12 * a12;
    if (!(std::abs(det) > 0)) break;
    const double dc = (a22 * g1 - a12 * g2) / det;
    const double db = (a11 * g2 - a12 * g1) / det;

    // Halve the step until the objective does not increase.
    double step = 1.0;
    double next_sse = heaps_residual_sum(points, c + dc, beta + db);
    while (next_sse > sse && step > 1e-6) {
      step *= 0.5;
      next_sse = heaps_residual_sum(points, c + step * dc, beta + step * db);
    }
    fit.iterations = it + 1;
    if (next_sse > sse) break;
    c += step * dc;
    beta += step * db;
    sse = next_sse;
    const double rel = std::hypot(step * dc, step * db) / std::hypot(c, beta);
    if (rel < kStepTolerance) break;
  }
  fit.c = c;
  fit.beta = beta;
  fit.residual_sum = sse;
  return fit;
}

EntropyModelFit fit_entropy_model(const std::vector<DiversityEntropy>& points) {
  if (points.size() < 2) {
    throw InsufficientDataError(fmt::format("entropy model fit needs at least 2 points, got {}", points.size()));
  }
  double num = 0, den = 0;
  for (const auto& p : points) {
    if (!(p.specific_diversity > 0 && p.specific_diversity < 1) || !(p.entropy > 0 && p.entropy <= 1)) {
      throw ParameterError(fmt::format("entropy model fit needs 0 < d < 1 and 0 < h <= 1, got ({}, {})",
                                       p.specific_diversity, p.entropy));
    }
    const double x = std::log(p.specific_diversity);
    num += x * std::log(p.entropy);
    den += x * x;
  }
  double e = num / den;

  EntropyModelFit fit;
  double sse = entropy_residual_sum(points, e);
  fit.initial_residual_sum = sse;

  for (int it = 0; it < kMaxIterations; ++it) {
    double a = 0, g = 0;
    for (const auto& p : points) {
      const double m = std::pow(p.specific_diversity, e);
      const double je = m * std::log(p.specific_diversity);
      a += je * je;
      g += je * (p.entropy - m);
    }
    if (!(a > 0)) break;
    const double de = g / a;
    double step = 1.0;
    double next_sse = entropy_residual_sum(points, e + de);
    while (next_sse > sse && step > 1e-6) {
      step *= 0.5;
      next_sse = entropy_residual_sum(points, e + step * de);
    }
    fit.iterations = it + 1;
    if (next_sse > sse) break;
    e += step * de;
    sse = next_sse;
    if (std::abs(step * de) < kStepTolerance * std::max(std::abs(e), std::numeric_limits<double>::min())) break;
  }
  fit.exponent = e;
  fit.residual_sum = sse;
  return fit;
}

}  // namespace lexigauge
