#include "lexigauge/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include <fmt/core.h>

#include "lexigauge/corpus.hpp"
#include "lexigauge/error.hpp"
#include "lexigauge/models.hpp"
#include "lexigauge/paths.hpp"
#include "lexigauge/pipeline.hpp"
#include "lexigauge/profile.hpp"
#include "lexigauge/readability.hpp"
#include "lexigauge/report.hpp"
#include "lexigauge/stats.hpp"
#include "lexigauge/tables.hpp"
#include "lexigauge/wqs.hpp"
#include "lexigauge/zipf.hpp"

namespace lexigauge {

namespace {

using Rng = std::mt19937_64;

Check check(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok, true, std::move(detail)};
}

Check info(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok, false, std::move(detail), true};
}

Check near(std::string name, double got, double want, double tol) {
  return check(std::move(name), std::abs(got - want) <= tol, fmt::format("got {:.10g}, want {:.10g} ± {:g}", got, want, tol));
}

double relative_error(double got, double want) { return std::abs(got - want) / std::abs(want); }

std::string cell_label(const TableCell& c) {
  const auto& p = c.published;
  std::string label = fmt::format("table {} {} {} {}", p.table, p.metric, p.statistic, p.group_a);
  if (!p.group_b.empty()) label += " vs " + p.group_b;
  return label;
}

void add_cells(std::vector<Check>& checks, const std::vector<TableCell>& cells) {
  for (const auto& c : cells) {
    const auto detail = fmt::format("recomputed {:.6g}, printed {:g}, delta {:+.6g}, tolerance {:g}{}", c.recomputed,
                                    c.published.printed, c.recomputed - c.published.printed, c.tolerance,
                                    c.published.mode == ToleranceMode::Relative ? " relative" : "");
    checks.push_back({cell_label(c), c.within, c.published.hard, detail});
  }
}

std::vector<std::pair<std::string, std::uint64_t>> random_counts(Rng& rng, std::size_t diversity) {
  std::uniform_int_distribution<std::uint64_t> count(1, 1000);
  std::vector<std::pair<std::string, std::uint64_t>> out;
  out.reserve(diversity);
  for (std::size_t i = 0; i < diversity; ++i) out.emplace_back(fmt::format("s{}", i), count(rng));
  return out;
}

CriterionResult entropy_properties(Rng& rng) {
  CriterionResult r{1, "entropy bounds, uniform maximum, renaming invariance", {}};
  std::uniform_int_distribution<std::size_t> diversity(2, 500);
  std::size_t bounds_bad = 0;
  std::size_t uniform_bad = 0;
  std::size_t rename_bad = 0;
  double worst_uniform = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t D = diversity(rng);
    auto counts = random_counts(rng, D);
    const double h = entropy(RankedProfile::from_counts(counts));
    if (!(h >= 0.0 && h <= 1.0)) ++bounds_bad;

    auto renamed = counts;
    std::vector<std::size_t> perm(D);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t k = 0; k < D; ++k) renamed[k].first = fmt::format("t{}", perm[k]);
    if (entropy(RankedProfile::from_counts(renamed)) != h) ++rename_bad;

    const std::uint64_t level = counts.front().second;
    for (auto& c : counts) c.second = level;
    const double hu = entropy(RankedProfile::from_counts(counts));
    worst_uniform = std::max(worst_uniform, std::abs(hu - 1.0));
    if (std::abs(hu - 1.0) > 1e-12) ++uniform_bad;
  }
  r.checks.push_back(check("0 <= h <= 1 on 1000 random profiles", bounds_bad == 0, fmt::format("{} violations", bounds_bad)));
  r.checks.push_back(check("uniform profiles give h = 1 within 1e-12", uniform_bad == 0,
                           fmt::format("{} violations, worst |h - 1| = {:.3g}", uniform_bad, worst_uniform)));
  r.checks.push_back(check("symbol renaming leaves h bit-identical", rename_bad == 0, fmt::format("{} violations", rename_bad)));
  return r;
}

CriterionResult zipf_oracle() {
  CriterionResult r{2, "Zipf reference and deviation", {}};
  const std::vector<double> f{8, 4, 2, 1};
  const auto fit = make_zipf_fit(f, 1.0, 1, f.size());
  r.checks.push_back(near("Z of (8,4,2,1), g = 1", zipf_reference(f, fit), 50.0 / 3.0, 1e-4));
  r.checks.push_back(near("J of (8,4,2,1), g = 1", zipf_deviation(f, 1.0), -0.1, 1e-4));
  std::vector<double> exact(300);
  for (std::size_t i = 0; i < exact.size(); ++i) exact[i] = 1000.0 / std::pow(static_cast<double>(i + 1), 1.3);
  r.checks.push_back(near("J of an exact Zipf profile, g = 1.3", zipf_deviation(exact, 1.3), 0.0, 1e-12));
  return r;
}

CriterionResult model_presets() {
  CriterionResult r{3, "length-diversity and entropy model presets", {}};
  r.checks.push_back(near("heaps_predict(English, 1e4)", heaps_predict(english_params(), 1e4), 1802.5, 0.5));
  r.checks.push_back(near("heaps_predict(Spanish, 1e4)", heaps_predict(spanish_params(), 1e4), 2300.0, 1e-6));
  r.checks.push_back(
      near("entropy_model_predict(English, 0.5)", entropy_model_predict(english_params(), 0.5), 0.8998, 0.0005));
  return r;
}

CriterionResult fitter_recovery() {
  CriterionResult r{4, "fitters recover generating parameters", {}};
  const std::pair<double, double> heaps_cases[] = {{3.766, 0.67}, {2.3, 0.75}};
  for (const auto& [c, beta] : heaps_cases) {
    std::vector<LengthDiversity> pts;
    for (double L = 100; L <= 2e5; L *= 1.25) pts.push_back({L, c * std::pow(L, beta)});
    const auto fit = fit_heaps(pts);
    const double err = std::max(relative_error(fit.c, c), relative_error(fit.beta, beta));
    r.checks.push_back(check(fmt::format("fit_heaps recovers ({}, {})", c, beta), err <= 1e-6,
                             fmt::format("c = {:.9g}, beta = {:.9g}, max relative error {:.3g}", fit.c, fit.beta, err)));
  }
  for (double e : {0.1523, 0.1763}) {
    std::vector<DiversityEntropy> pts;
    for (double d = 0.05; d < 0.95; d += 0.01) pts.push_back({d, std::pow(d, e)});
    const auto fit = fit_entropy_model(pts);
    const double err = relative_error(fit.exponent, e);
    r.checks.push_back(check(fmt::format("fit_entropy_model recovers {}", e), err <= 1e-6,
                             fmt::format("exponent = {:.9g}, relative error {:.3g}", fit.exponent, err)));
  }
  for (double g : {1.0, 2.0}) {
    std::vector<std::pair<std::string, std::uint64_t>> counts;
    for (int rank = 1; rank <= 200; ++rank) {
      counts.emplace_back(fmt::format("w{}", rank), static_cast<std::uint64_t>(std::llround(1e6 / std::pow(rank, g))));
    }
    const double fitted = fit_zipf_exponent(RankedProfile::from_counts(counts));
    const double err = relative_error(fitted, g);
    r.checks.push_back(check(fmt::format("fit_zipf_exponent recovers g = {}", g), err <= 0.02,
                             fmt::format("g = {:.6g}, relative error {:.3g}", fitted, err)));
  }
  return r;
}

CriterionResult grouping(const std::vector<ReferenceRow>& rows) {
  CriterionResult r{5, "group sizes from the fixtures", {}};
  const std::size_t want[] = {37, 101, 19, 117};
  for (std::size_t i = 0; i < 4; ++i) {
    const auto n = select_group(rows, kAllGroups[i]).size();
    r.checks.push_back(check(fmt::format("n({})", group_label(kAllGroups[i])), n == want[i],
                             fmt::format("got {}, want {}", n, want[i])));
  }
  return r;
}

CriterionResult table_means(const std::vector<TableCell>& cells) {
  CriterionResult r{6, "d_rel, h_rel and J group means and deviations", {}};
  std::vector<TableCell> picked;
  for (const auto& c : cells) {
    if (c.published.table <= 3 && (c.published.statistic == "mean" || c.published.statistic == "std")) {
      picked.push_back(c);
    }
  }
  add_cells(r.checks, picked);
  return r;
}

CriterionResult table_wqs(const std::vector<TableCell>& cells) {
  CriterionResult r{7, "WQS and readability group means, WQS-readability correlation", {}};
  std::vector<TableCell> picked;
  for (const auto& c : cells) {
    const auto& s = c.published.statistic;
    if (c.published.table == 4 && (s == "mean" || s == "std" || s == "r")) picked.push_back(c);
  }
  add_cells(r.checks, picked);
  return r;
}

CriterionResult t_test_plumbing(const std::vector<TableCell>& cells, Rng& rng) {
  CriterionResult r{8, "t-test p-values, identity and symmetry", {}};
  std::vector<TableCell> picked;
  for (const auto& c : cells) {
    if (c.published.statistic == "p") picked.push_back(c);
  }
  add_cells(r.checks, picked);

  const std::vector<double> a{0.3, 1.7, 2.2, 4.1, 5.0};
  r.checks.push_back(near("identical samples give p = 1", stats::t_test_p(a, a), 1.0, 0.0));
  std::normal_distribution<double> normal(0.0, 1.0);
  std::size_t asymmetric = 0;
  for (int i = 0; i < 200; ++i) {
    std::vector<double> x(2 + static_cast<std::size_t>(i % 30));
    std::vector<double> y(2 + static_cast<std::size_t>((i * 7) % 41));
    for (auto& v : x) v = normal(rng);
    for (auto& v : y) v = normal(rng) + 0.3;
    if (stats::t_test_p(x, y) != stats::t_test_p(y, x)) ++asymmetric;
  }
  r.checks.push_back(check("t_test(a, b) == t_test(b, a) on 200 random pairs", asymmetric == 0,
                           fmt::format("{} asymmetric results", asymmetric)));
  return r;
}

CriterionResult wqs_presets(const std::vector<ReferenceRow>& rows, Rng& rng) {
  CriterionResult r{9, "WQS preset consistency", {}};
  struct Case {
    Language lang;
    StylePoint direction;
    double scale;
  };
  const Case cases[] = {{Language::English, published::kEnglishDirection, published::kEnglishScale},
                        {Language::Spanish, published::kSpanishDirection, published::kSpanishScale}};
  for (const auto& c : cases) {
    const auto w = verbatim_preset(c.lang).weights;
    const double ratios[] = {w.d_rel / c.direction.d_rel, w.h_rel / c.direction.h_rel, w.j / c.direction.j};
    double worst = 0;
    for (double q : ratios) worst = std::max(worst, relative_error(q, c.scale));
    r.checks.push_back(check(fmt::format("{} weight/direction ratios agree with {}", to_string(c.lang), c.scale),
                             worst < 1e-4,
                             fmt::format("ratios {:.5f} {:.5f} {:.5f}, worst relative gap {:.2g}", ratios[0],
                                         ratios[1], ratios[2], worst)));
  }

  std::uniform_real_distribution<double> coord(-0.5, 0.5);
  std::uniform_real_distribution<double> step(1e-6, 0.1);
  std::size_t linear_bad = 0;
  std::size_t sign_bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto& preset = verbatim_preset(i % 2 == 0 ? Language::English : Language::Spanish);
    const StylePoint p{coord(rng), coord(rng), coord(rng)};
    const StylePoint delta{coord(rng), coord(rng), coord(rng)};
    const double lhs = wqs(preset, p + delta) - wqs(preset, p);
    if (std::abs(lhs - preset.weights.dot(delta)) > 1e-12) ++linear_bad;
    const double s = step(rng);
    const double base = wqs(preset, p);
    if (!(wqs(preset, p + StylePoint{s, 0, 0}) > base)) ++sign_bad;
    if (!(wqs(preset, p + StylePoint{0, s, 0}) < base)) ++sign_bad;
    if (!(wqs(preset, p + StylePoint{0, 0, s}) < base)) ++sign_bad;
  }
  r.checks.push_back(check("linearity on 1000 random points (1e-12)", linear_bad == 0, fmt::format("{} violations", linear_bad)));
  r.checks.push_back(check("sign pattern +d_rel, -h_rel, -j on 1000 random points", sign_bad == 0,
                           fmt::format("{} violations", sign_bad)));

  const auto e1 = std::find_if(rows.begin(), rows.end(), [](const ReferenceRow& row) { return row.entry.id == "E1"; });
  if (e1 == rows.end()) {
    r.checks.push_back(check("row E1 present", false, "row E1 missing from fixtures"));
    return r;
  }
  const double value = wqs(verbatim_preset(Language::English), {e1->d_rel, e1->h_rel, e1->j});
  r.checks.push_back(near("verbatim English WQS on row E1", value, 0.0904, 0.0005));
  r.checks.push_back(info("row E1 printed WQS", std::abs(value - e1->wqs) <= 0.0005,
                          fmt::format("known divergence: formula gives {:.4f}, appendix prints {:.4f}", value, e1->wqs)));
  return r;
}

CriterionResult readability_identity(Rng& rng) {
  CriterionResult r{10, "readability identity", {}};
  std::uniform_real_distribution<double> w(0.5, 3.0);
  std::uniform_real_distribution<double> s(1.0, 80.0);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    const ReadabilityInputs in{w(rng), s(rng)};
    worst = std::max(worst, std::abs(ipsz(in) - res(in) - 0.015 * in.words_per_phrase));
  }
  r.checks.push_back(check("ipsz - res = 0.015 S on 1000 random inputs (1e-12)", worst <= 1e-12,
                           fmt::format("worst residual {:.3g}", worst)));
  r.checks.push_back(near("res(1.5, 20)", res({1.5, 20.0}), 59.635, 1e-12));
  return r;
}

CriterionResult trend_regression() {
  CriterionResult r{11, "time-trend regression", {}};
  std::vector<double> x;
  std::vector<double> y;
  for (int year = 1380; year <= 2015; year += 5) {
    x.push_back(year);
    y.push_back(-0.0829 * year + 190.0);
  }
  const auto fit = stats::linear_regression(x, y);
  r.checks.push_back(check("exact recovery on noiseless linear data",
                           relative_error(fit.slope, -0.0829) < 1e-10 && relative_error(fit.intercept, 190.0) < 1e-10,
                           fmt::format("slope {:.12g}, intercept {:.12g}", fit.slope, fit.intercept)));
  r.checks.push_back(info("published words-per-century slopes", true,
                          "not reproducible without the source texts; excluded from acceptance"));
  return r;
}

std::string synthetic_text(Rng& rng, std::size_t words, std::size_t vocabulary) {
  std::vector<double> weights(vocabulary);
  for (std::size_t k = 0; k < vocabulary; ++k) weights[k] = 1.0 / static_cast<double>(k + 1);
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  std::uniform_int_distribution<int> phrase(6, 20);
  std::string text;
  int until_stop = phrase(rng);
  for (std::size_t i = 0; i < words; ++i) {
    text += fmt::format("w{}", pick(rng));
    if (--until_stop == 0) {
      text += ". ";
      until_stop = phrase(rng);
    } else {
      text += i % 9 == 4 ? ", " : " ";
    }
  }
  return text + ".";
}

std::string corpus_report(const std::vector<std::string>& texts, const std::vector<ReferenceRow>& rows) {
  AnalysisOptions en_opts;
  en_opts.reconstructed = reconstructed_preset(Language::English, rows);
  AnalysisOptions es_opts;
  es_opts.reconstructed = reconstructed_preset(Language::Spanish, rows);
  std::vector<ReportRow> report;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    CorpusEntry entry;
    entry.id = fmt::format("T{}", i + 1);
    entry.name = fmt::format("{}.Synthetic{}", 1900 + i, i + 1);
    entry.language = i % 2 == 0 ? Language::English : Language::Spanish;
    const auto params = default_params(entry.language);
    report.push_back(to_report_row(analyze_raw(entry, texts[i], params, i % 2 == 0 ? en_opts : es_opts), true));
  }
  std::ostringstream out;
  write_report(out, report, ReportFormat::Csv, true);
  write_report(out, report, ReportFormat::JsonLines, true);
  return out.str();
}

CriterionResult determinism(const std::vector<ReferenceRow>& rows, Rng& rng) {
  CriterionResult r{12, "determinism", {}};
  std::vector<std::string> texts;
  for (std::size_t i = 0; i < 6; ++i) texts.push_back(synthetic_text(rng, 400 + 150 * i, 60 + 40 * i));
  const std::string first = corpus_report(texts, rows);
  const std::string second = corpus_report(texts, rows);
  r.checks.push_back(check("two runs give byte-identical reports", first == second,
                           fmt::format("{} and {} bytes", first.size(), second.size())));
  return r;
}

}  // namespace

bool CriterionResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed || !c.hard; });
}

VerifyOptions default_verify_options() {
  VerifyOptions o;
  o.reference_dir = reference_dir();
  o.published_tables = preset_dir() / "published_tables.csv";
  return o;
}

std::vector<CriterionResult> run_acceptance(const VerifyOptions& options) {
  const auto rows = load_reference_dir(options.reference_dir);
  const auto published = load_published_tables(options.published_tables);
  const auto cells = reproduce_tables(rows, published, options.tolerance);

  Rng rng(options.seed);
  std::vector<CriterionResult> out;
  out.push_back(entropy_properties(rng));
  out.push_back(zipf_oracle());
  out.push_back(model_presets());
  out.push_back(fitter_recovery());
  out.push_back(grouping(rows));
  out.push_back(table_means(cells));
  out.push_back(table_wqs(cells));
  out.push_back(t_test_plumbing(cells, rng));
  out.push_back(wqs_presets(rows, rng));
  out.push_back(readability_identity(rng));
  out.push_back(trend_regression());
  out.push_back(determinism(rows, rng));
  return out;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.passed(); });
}

void write_verify_report(std::ostream& out, const std::vector<CriterionResult>& results) {
  for (const auto& r : results) {
    std::size_t hard = 0;
    std::size_t hard_ok = 0;
    for (const auto& c : r.checks) {
      if (!c.hard) continue;
      ++hard;
      if (c.passed) ++hard_ok;
    }
    out << fmt::format("{} criterion {:>2}: {} ({}/{} checks)\n", r.passed() ? "PASS" : "FAIL", r.number, r.title,
                       hard_ok, hard);
    for (const auto& c : r.checks) {
      if (c.passed && (c.hard || !c.note)) continue;
      const char* tag = c.hard ? "fail" : (c.passed ? "info" : "info, differs");
      out << fmt::format("    [{}] {}: {}\n", tag, c.name, c.detail);
    }
  }
}

}  // namespace lexigauge
