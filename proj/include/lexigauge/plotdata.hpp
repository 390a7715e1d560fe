#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexigauge/corpus.hpp"
#include "lexigauge/models.hpp"
#include "lexigauge/report.hpp"

namespace lexigauge {

enum class Figure { Diversity, Entropy, Zipf, WqsPlane, Trend };

Figure parse_figure(std::string_view name);  // throws ParameterError
std::string_view to_string(Figure figure);

inline constexpr int kCurveSamples = 100;

// A point table. The first three columns are always series,group,id; the
// rest are the figure's axes.
struct PlotData {
  Figure figure = Figure::Entropy;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> warnings;
};

// `count` log-spaced values from lo to hi inclusive.
std::vector<double> log_space(double lo, double hi, int count);

// Message length implied by a fixture row: D = d L and D = c L^beta (1 + d_rel).
double inferred_length(const ReferenceRow& row, const LanguageParams& params);

// Points from the appendix fixtures. Lengths for the diversity and zipf
// figures are inferred; the trend figure has no year-sentence data here.
PlotData plot_from_fixtures(Figure figure, const std::vector<ReferenceRow>& rows);

// Points from an analyze report of one language.
PlotData plot_from_report(Figure figure, const std::vector<ReportRow>& rows, Language language);

void write_plot_data(std::ostream& out, const PlotData& data);

}  // namespace lexigauge
