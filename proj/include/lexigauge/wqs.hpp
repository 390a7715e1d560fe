#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexigauge/types.hpp"

namespace lexigauge {

struct ReferenceRow;

// A text's position in (d_rel, h_rel, J) space.
struct StylePoint {
  double d_rel = 0;
  double h_rel = 0;
  double j = 0;

  StylePoint operator+(const StylePoint& o) const { return {d_rel + o.d_rel, h_rel + o.h_rel, j + o.j}; }
  StylePoint operator-(const StylePoint& o) const { return {d_rel - o.d_rel, h_rel - o.h_rel, j - o.j}; }
  StylePoint operator*(double s) const { return {d_rel * s, h_rel * s, j * s}; }
  double dot(const StylePoint& o) const { return d_rel * o.d_rel + h_rel * o.h_rel + j * o.j; }
  double norm() const;

  friend bool operator==(const StylePoint&, const StylePoint&) = default;
};

// WQS = weights . (point - origin).
struct WqsCoefficients {
  StylePoint origin;
  StylePoint weights;
  std::string label;
};

StylePoint class_center(std::span<const StylePoint> points);

// Unit vector from `from` to `to`.
StylePoint direction_vector(const StylePoint& from, const StylePoint& to);

// weights = scale * direction; `direction` must have unit length (within 1e-4).
WqsCoefficients build_scale(const StylePoint& origin, const StylePoint& direction, double scale,
                            std::string label = {});

double wqs(const WqsCoefficients& coeffs, const StylePoint& point);

// Published class centers and direction vectors.
namespace published {
inline constexpr StylePoint kEnglishWritersCenter{-0.05741, 0.00318, -0.03232};
inline constexpr StylePoint kEnglishNobelCenter{0.0269, -0.00567, -0.05779};
inline constexpr StylePoint kSpanishWritersCenter{-0.02339, 0.00579, -0.08785};
inline constexpr StylePoint kSpanishNobelCenter{0.07296, -0.01168, -0.19167};
inline constexpr StylePoint kEnglishDirection{0.68147, -0.07153, -0.72835};
inline constexpr StylePoint kSpanishDirection{0.73241, -0.13280, -0.66779};
// Ratio between the printed WQS weights and the printed direction vectors.
inline constexpr double kEnglishScale = 8.083;
inline constexpr double kSpanishScale = 7.601;
}  // namespace published

// WQS constants exactly as printed:
//   EN: 5.5082 (d_rel + 0.02690) - 0.5782 (h_rel - 0.00318) - 5.8871 (J - 0.03232)
//   ES: 5.5674 (d_rel + 0.02339) - 1.0095 (h_rel - 0.00579) - 5.0762 (J - 0.10382)
WqsCoefficients verbatim_preset(Language language);

// Origin at the non-Nobel center of the fixture rows, direction toward the
// Nobel center, scaled by the published ratio.
WqsCoefficients reconstructed_preset(Language language, const std::vector<ReferenceRow>& rows);

inline constexpr std::string_view kVerbatimEnglish = "verbatim-en";
inline constexpr std::string_view kVerbatimSpanish = "verbatim-es";
inline constexpr std::string_view kReconstructedEnglish = "reconstructed-en";
inline constexpr std::string_view kReconstructedSpanish = "reconstructed-es";

// label,origin_d,origin_h,origin_j,w_d,w_h,w_j
std::vector<WqsCoefficients> load_wqs_presets(const std::filesystem::path& path);
void save_wqs_presets(const std::filesystem::path& path, const std::vector<WqsCoefficients>& presets);
const WqsCoefficients& find_preset(const std::vector<WqsCoefficients>& presets, std::string_view label);

}  // namespace lexigauge
