#include "lexigauge/wqs.hpp"

#include <cmath>
#include <fstream>

#include <fmt/core.h>

#include "lexigauge/corpus.hpp"
#include "lexigauge/csv.hpp"
#include "lexigauge/error.hpp"

namespace lexigauge {

namespace {

// Loose enough for direction vectors printed to five decimals.
constexpr double kUnitTolerance = 1e-4;

}  // namespace

double StylePoint::norm() const { return std::sqrt(dot(*this)); }

StylePoint class_center(std::span<const StylePoint> points) {
  if (points.empty()) throw UndefinedInputError("class center of an empty group");
  StylePoint sum;
  for (const auto& p : points) sum = sum + p;
  return sum * (1.0 / static_cast<double>(points.size()));
}

StylePoint direction_vector(const StylePoint& from, const StylePoint& to) {
  const StylePoint diff = to - from;
  const double len = diff.norm();
  if (!(len > 0)) throw UndefinedInputError("direction between identical class centers");
  return diff * (1.0 / len);
}

WqsCoefficients build_scale(const StylePoint& origin, const StylePoint& direction, double scale,
                            std::string label) {
  if (std::abs(direction.norm() - 1.0) > kUnitTolerance) {
    throw ParameterError(fmt::format("direction vector has length {}, expected 1", direction.norm()));
  }
  if (scale == 0 || !std::isfinite(scale)) throw ParameterError("WQS scale must be finite and non-zero");
  return WqsCoefficients{origin, direction * scale, std::move(label)};
}

double wqs(const WqsCoefficients& coeffs, const StylePoint& point) {
  return coeffs.weights.dot(point - coeffs.origin);
}

WqsCoefficients verbatim_preset(Language language) {
  if (language == Language::English) {
    return {{-0.02690, 0.00318, 0.03232}, {5.5082, -0.5782, -5.8871}, std::string(kVerbatimEnglish)};
  }
  return {{-0.02339, 0.00579, 0.10382}, {5.5674, -1.0095, -5.0762}, std::string(kVerbatimSpanish)};
}

WqsCoefficients reconstructed_preset(Language language, const std::vector<ReferenceRow>& rows) {
  auto center_of = [&](bool nobel) {
    std::vector<StylePoint> pts;
    for (const auto& r : select_group(rows, {language, nobel})) pts.push_back({r.d_rel, r.h_rel, r.j});
    return class_center(pts);
  };
  const StylePoint writers = center_of(false);
  const StylePoint nobel = center_of(true);
  const bool en = language == Language::English;
  return build_scale(writers, direction_vector(writers, nobel),
                     en ? published::kEnglishScale : published::kSpanishScale,
                     std::string(en ? kReconstructedEnglish : kReconstructedSpanish));
}

std::vector<WqsCoefficients> load_wqs_presets(const std::filesystem::path& path) {
  std::vector<WqsCoefficients> out;
  for (const auto& rec : csv::read_file(path)) {
    const auto& f = rec.fields;
    if (!f.empty() && f[0] == "label") continue;
    const auto where = fmt::format("{} row {}", path.filename().string(), rec.line);
    if (f.size() != 7) throw ParseError(fmt::format("{}: expected 7 fields, got {}", where, f.size()));
    WqsCoefficients c;
    c.label = f[0];
    c.origin = {csv::parse_double(f[1], where + " origin_d"), csv::parse_double(f[2], where + " origin_h"),
                csv::parse_double(f[3], where + " origin_j")};
    c.weights = {csv::parse_double(f[4], where + " w_d"), csv::parse_double(f[5], where + " w_h"),
                 csv::parse_double(f[6], where + " w_j")};
    if (c.weights == StylePoint{}) throw ParseError(fmt::format("{}: all weights are zero", where));
    out.push_back(std::move(c));
  }
  return out;
}

void save_wqs_presets(const std::filesystem::path& path, const std::vector<WqsCoefficients>& presets) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(fmt::format("cannot write '{}'", path.string()));
  out << "label,origin_d,origin_h,origin_j,w_d,w_h,w_j\n";
  for (const auto& c : presets) {
    out << fmt::format("{},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f}\n", csv::escape(c.label), c.origin.d_rel,
                       c.origin.h_rel, c.origin.j, c.weights.d_rel, c.weights.h_rel, c.weights.j);
  }
}

const WqsCoefficients& find_preset(const std::vector<WqsCoefficients>& presets, std::string_view label) {
  for (const auto& p : presets) {
    if (p.label == label) return p;
  }
  throw ParameterError(fmt::format("no WQS preset labelled '{}'", label));
}

}  // namespace lexigauge
