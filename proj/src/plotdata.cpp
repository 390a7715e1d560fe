#include "lexigauge/plotdata.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <fmt/core.h>

#include "lexigauge/csv.hpp"
#include "lexigauge/error.hpp"
#include "lexigauge/stats.hpp"

namespace lexigauge {

namespace {

std::string num(double v) { return fmt::format("{:.6g}", v); }

std::vector<std::string> axes(Figure f) {
  switch (f) {
    case Figure::Diversity:
      return {"L", "D"};
    case Figure::Entropy:
      return {"d", "h"};
    case Figure::Zipf:
      return {"L", "j"};
    case Figure::WqsPlane:
      return {"d_rel", "h_rel", "j", "wqs"};
    case Figure::Trend:
      return {"year", "S"};
  }
  return {};
}

PlotData empty_plot(Figure figure) {
  PlotData data;
  data.figure = figure;
  data.columns = {"series", "group", "id"};
  for (auto& a : axes(figure)) data.columns.push_back(std::move(a));
  return data;
}

std::string row_group(const CorpusEntry& e) {
  for (const auto& key : kAllGroups) {
    if (in_group(e, key)) return group_label(key);
  }
  return std::string(e.language == Language::English ? "en" : "es") + "-other";
}

std::string lang_prefix(Language lang) { return lang == Language::English ? "en" : "es"; }

void add_model_curves(PlotData& data, Language lang) {
  const LanguageParams params = default_params(lang);
  const std::string group = lang_prefix(lang) + "-model";
  if (data.figure == Figure::Diversity) {
    for (double L : log_space(1e2, 1e5, kCurveSamples)) {
      data.rows.push_back({"model", group, "", num(L), num(heaps_predict(params, L))});
    }
  } else if (data.figure == Figure::Entropy) {
    for (double d : log_space(1e-2, 1.0, kCurveSamples)) {
      data.rows.push_back({"model", group, "", num(d), num(entropy_model_predict(params, d))});
    }
  }
}

}  // namespace

Figure parse_figure(std::string_view name) {
  if (name == "diversity") return Figure::Diversity;
  if (name == "entropy") return Figure::Entropy;
  if (name == "zipf") return Figure::Zipf;
  if (name == "wqs-plane") return Figure::WqsPlane;
  if (name == "trend") return Figure::Trend;
  throw ParameterError(fmt::format("unknown figure '{}'", name));
}

std::string_view to_string(Figure figure) {
  switch (figure) {
    case Figure::Diversity:
      return "diversity";
    case Figure::Entropy:
      return "entropy";
    case Figure::Zipf:
      return "zipf";
    case Figure::WqsPlane:
      return "wqs-plane";
    case Figure::Trend:
      return "trend";
  }
  return "";
}

std::vector<double> log_space(double lo, double hi, int count) {
  if (!(lo > 0) || !(hi > lo) || count < 2) throw ParameterError("log_space needs 0 < lo < hi and count >= 2");
  std::vector<double> out(static_cast<std::size_t>(count));
  const double a = std::log10(lo);
  const double step = (std::log10(hi) - a) / (count - 1);
  for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = std::pow(10.0, a + step * i);
  out.front() = lo;
  out.back() = hi;
  return out;
}

double inferred_length(const ReferenceRow& row, const LanguageParams& params) {
  if (!(row.d > 0)) throw UndefinedInputError(fmt::format("{}: d = 0, length cannot be inferred", row.entry.id));
  return std::pow(params.heaps_c * (1.0 + row.d_rel) / row.d, 1.0 / (1.0 - params.heaps_beta));
}

PlotData plot_from_fixtures(Figure figure, const std::vector<ReferenceRow>& rows) {
  PlotData data = empty_plot(figure);
  if (figure == Figure::Trend) {
    data.warnings.push_back("fixtures carry no sentence-length data; trend needs an analyze report (--report)");
    return data;
  }
  if (figure == Figure::Diversity || figure == Figure::Zipf) {
    data.warnings.push_back("L is inferred from d and d_rel through the length-diversity model");
  }
  for (const auto& r : rows) {
    const std::string group = row_group(r.entry);
    const LanguageParams params = default_params(r.entry.language);
    switch (figure) {
      case Figure::Diversity: {
        const double L = inferred_length(r, params);
        data.rows.push_back({"text", group, r.entry.id, num(L), num(r.d * L)});
        break;
      }
      case Figure::Entropy:
        data.rows.push_back({"text", group, r.entry.id, num(r.d), num(r.h)});
        break;
      case Figure::Zipf:
        data.rows.push_back({"text", group, r.entry.id, num(inferred_length(r, params)), num(r.j)});
        break;
      case Figure::WqsPlane:
        data.rows.push_back({"text", group, r.entry.id, num(r.d_rel), num(r.h_rel), num(r.j), num(r.wqs)});
        break;
      case Figure::Trend:
        break;
    }
  }
  add_model_curves(data, Language::English);
  add_model_curves(data, Language::Spanish);
  return data;
}

PlotData plot_from_report(Figure figure, const std::vector<ReportRow>& rows, Language language) {
  PlotData data = empty_plot(figure);
  const std::string group = lang_prefix(language) + "-report";
  std::vector<double> years;
  std::vector<double> lengths;
  for (const auto& r : rows) {
    switch (figure) {
      case Figure::Diversity:
        data.rows.push_back({"text", group, r.id, num(static_cast<double>(r.L)), num(static_cast<double>(r.D))});
        break;
      case Figure::Entropy:
        data.rows.push_back({"text", group, r.id, num(r.d), num(r.h)});
        break;
      case Figure::Zipf:
        data.rows.push_back({"text", group, r.id, num(static_cast<double>(r.L)), num(r.j)});
        break;
      case Figure::WqsPlane:
        data.rows.push_back({"text", group, r.id, num(r.d_rel), num(r.h_rel), num(r.j), num(r.wqs_verbatim)});
        break;
      case Figure::Trend:
        if (const auto year = year_from_name(r.name)) {
          data.rows.push_back({"text", group, r.id, std::to_string(*year), num(r.S)});
          years.push_back(*year);
          lengths.push_back(r.S);
        }
        break;
    }
  }
  if (figure == Figure::Trend) {
    const bool distinct = !years.empty() && std::any_of(years.begin(), years.end(),
                                                        [&](double y) { return y != years.front(); });
    if (years.size() < 2 || !distinct) {
      data.warnings.push_back("fewer than two distinct years in the report; no trend line");
    } else {
      const auto fit = stats::linear_regression(years, lengths);
      const auto [lo, hi] = std::minmax_element(years.begin(), years.end());
      for (double y : {*lo, *hi}) {
        data.rows.push_back({"fit", group, "", num(y), num(fit.slope * y + fit.intercept)});
      }
      data.warnings.push_back(fmt::format("trend slope {:.6g} words per phrase per year (n = {})", fit.slope, fit.n));
    }
  } else {
    add_model_curves(data, language);
  }
  return data;
}

void write_plot_data(std::ostream& out, const PlotData& data) {
  out << "# figure=" << to_string(data.figure) << '\n';
  out << csv::join(data.columns) << '\n';
  for (const auto& row : data.rows) out << csv::join(row) << '\n';
}

}  // namespace lexigauge
