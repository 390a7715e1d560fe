#include "lexigauge/cli.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/core.h>

#include "lexigauge/corpus.hpp"
#include "lexigauge/csv.hpp"
#include "lexigauge/error.hpp"
#include "lexigauge/models.hpp"
#include "lexigauge/paths.hpp"
#include "lexigauge/pipeline.hpp"
#include "lexigauge/plotdata.hpp"
#include "lexigauge/profile.hpp"
#include "lexigauge/report.hpp"
#include "lexigauge/stats.hpp"
#include "lexigauge/tables.hpp"
#include "lexigauge/verify.hpp"
#include "lexigauge/zipf.hpp"

namespace lexigauge::cli {

namespace {

// Writes `text` to `path`, or to `out` when the path is empty.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError(fmt::format("cannot write '{}'", path));
  file << text;
  if (!file) throw IoError(fmt::format("write to '{}' failed", path));
}

struct AnalyzeArgs {
  std::vector<std::string> paths;
  std::string manifest;
  std::string lang;
  std::string format = "csv";
  std::string out;
  std::optional<double> zipf_g;
  std::string preset = "gualda-gil";
  bool cross = false;
  std::string profile_dir;
};

struct FitArgs {
  std::string manifest;
  std::string model;
  std::string out;
};

struct TablesArgs {
  std::string reference_dir;
  std::string out;
};

struct PlotArgs {
  std::string reference_dir;
  std::string figure;
  std::string report;
  std::string lang;
  std::string out;
};

struct VerifyArgs {
  std::string reference_dir;
  std::optional<double> tolerance;
};

std::filesystem::path fixtures_or_default(const std::string& dir) {
  return dir.empty() ? reference_dir() : std::filesystem::path(dir);
}

LanguageParams params_for(Language lang, const std::string& preset) {
  LanguageParams p = default_params(lang);
  p.chars_per_syllable = chars_per_syllable(lang, preset);
  return p;
}

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<CorpusEntry> entries;
  if (!a.manifest.empty()) entries = load_manifest(a.manifest);
  if (!a.paths.empty()) {
    if (a.lang.empty()) {
      err << "analyze: --lang is required when text paths are given\n";
      return kExitUsage;
    }
    for (const auto& p : a.paths) {
      CorpusEntry e;
      e.id = std::filesystem::path(p).stem().string();
      e.name = e.id;
      e.language = parse_language(a.lang);
      e.year = year_from_name(e.name);
      e.source_path = p;
      entries.push_back(std::move(e));
    }
  }
  if (entries.empty()) {
    err << "analyze: no texts given (pass paths or --manifest)\n";
    return kExitUsage;
  }

  AnalysisOptions options;
  options.zipf_g = a.zipf_g;
  const auto result = analyze_corpus(entries, params_for(Language::English, a.preset),
                                     params_for(Language::Spanish, a.preset), options);
  for (const auto& f : result.failures) err << "analyze: " << f.message << '\n';

  std::vector<ReportRow> rows;
  for (const auto& m : result.records) rows.push_back(to_report_row(m, a.cross));
  std::ostringstream text;
  write_report(text, rows, a.format == "json" ? ReportFormat::JsonLines : ReportFormat::Csv, a.cross);
  if (result.records.empty()) return kExitFailure;
  emit(text.str(), a.out, out);

  if (!a.profile_dir.empty()) {
    std::filesystem::create_directories(a.profile_dir);
    for (const auto& m : result.records) {
      const auto profile = build_profile(tokenize(load_text(m.entry), m.entry.language));
      std::ostringstream csv_text;
      write_profile_csv(csv_text, profile);
      emit(csv_text.str(), (std::filesystem::path(a.profile_dir) / (m.entry.id + ".profile.csv")).string(), out);
    }
  }
  return kExitOk;
}

int cmd_fit(const FitArgs& a, std::ostream& out, std::ostream& err) {
  const auto entries = load_manifest(a.manifest);
  const auto result = analyze_corpus(entries, english_params(), spanish_params());
  for (const auto& f : result.failures) err << "fit: " << f.message << '\n';

  std::map<Language, std::vector<TextMetrics>> by_lang;
  for (const auto& m : result.records) by_lang[m.entry.language].push_back(m);
  if (by_lang.empty()) throw InsufficientDataError("no text could be analyzed");

  std::ostringstream file;
  std::vector<LanguageParams> fitted;
  if (a.model == "zipf") file << "id,language,g\n";
  for (const auto& [lang, records] : by_lang) {
    const auto label = to_string(lang);
    if (records.size() < 2) {
      throw InsufficientDataError(fmt::format("{}: a corpus fit needs at least 2 texts, got {}", label, records.size()));
    }
    if (a.model == "heaps") {
      std::vector<LengthDiversity> pts;
      for (const auto& m : records) pts.push_back({static_cast<double>(m.L), static_cast<double>(m.D)});
      const auto fit = fit_heaps(pts);
      out << fmt::format("{}: heaps c={:.6f} beta={:.6f} residual_sum={:.6g} n={} iterations={}\n", label, fit.c,
                         fit.beta, fit.residual_sum, pts.size(), fit.iterations);
      LanguageParams p = default_params(lang);
      p.heaps_c = fit.c;
      p.heaps_beta = fit.beta;
      fitted.push_back(p);
    } else if (a.model == "entropy") {
      std::vector<DiversityEntropy> pts;
      for (const auto& m : records) pts.push_back({m.d, m.h});
      const auto fit = fit_entropy_model(pts);
      out << fmt::format("{}: entropy exponent={:.6f} alpha={:.6f} residual_sum={:.6g} n={} iterations={}\n", label,
                         fit.exponent, alpha_from_exponent(fit.exponent), fit.residual_sum, pts.size(),
                         fit.iterations);
      LanguageParams p = default_params(lang);
      p.entropy_exponent = fit.exponent;
      fitted.push_back(p);
    } else {
      std::vector<double> gs;
      double residual = 0;
      for (const auto& m : records) {
        gs.push_back(m.g);
        residual += m.j * m.j;
        file << fmt::format("{},{},{:.6f}\n", csv::escape(m.entry.id), to_code(lang), m.g);
      }
      const auto s = stats::summarize(gs);
      out << fmt::format("{}: zipf g mean={:.6f} std={:.6f} residual_sum={:.6g} n={}\n", label, s.mean, s.std_dev,
                         residual, s.n);
    }
  }
  if (!a.out.empty()) {
    if (a.model == "zipf") {
      emit(file.str(), a.out, out);
    } else {
      save_language_params(a.out, fitted);
    }
  }
  return kExitOk;
}

int cmd_tables(const TablesArgs& a, std::ostream& out) {
  const auto rows = load_reference_dir(fixtures_or_default(a.reference_dir));
  const auto published = load_published_tables(preset_dir() / "published_tables.csv");
  std::ostringstream text;
  write_table_report(text, reproduce_tables(rows, published));
  emit(text.str(), a.out, out);
  return kExitOk;
}

int cmd_plot(const PlotArgs& a, std::ostream& out, std::ostream& err) {
  const Figure figure = parse_figure(a.figure);
  PlotData data;
  if (!a.report.empty()) {
    if (a.lang.empty()) {
      err << "plot-data: --lang is required with --report\n";
      return kExitUsage;
    }
    data = plot_from_report(figure, load_report(a.report), parse_language(a.lang));
  } else {
    data = plot_from_fixtures(figure, load_reference_dir(fixtures_or_default(a.reference_dir)));
  }
  for (const auto& w : data.warnings) err << "plot-data: warning: " << w << '\n';
  std::ostringstream text;
  write_plot_data(text, data);
  emit(text.str(), a.out, out);
  return kExitOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  VerifyOptions options = default_verify_options();
  if (!a.reference_dir.empty()) options.reference_dir = a.reference_dir;
  options.tolerance = a.tolerance;
  const auto results = run_acceptance(options);
  write_verify_report(out, results);
  return all_passed(results) ? kExitOk : kExitFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"lexigauge: symbolic diversity, entropy, Zipf deviation, readability and WQS of texts"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* an = app.add_subcommand("analyze", "Analyze text files and write a report");
  an->add_option("paths", analyze.paths, "Text files (UTF-8)");
  an->add_option("--manifest", analyze.manifest, "Corpus manifest instead of, or in addition to, paths");
  an->add_option("--lang", analyze.lang, "Language of the text paths")->check(CLI::IsMember({"en", "es"}));
  an->add_option("--format", analyze.format, "Report format")->check(CLI::IsMember({"csv", "json"}));
  an->add_option("--out", analyze.out, "Output file (default stdout)");
  an->add_option("--zipf-g", analyze.zipf_g, "Fixed Zipf exponent instead of a per-text fit")
      ->check(CLI::NonNegativeNumber);
  an->add_option("--preset", analyze.preset, "Characters-per-syllable constant")
      ->check(CLI::IsMember({"gualda-gil", "eaton", "irest"}));
  an->add_flag("--cross-readability", analyze.cross, "Append both res and ipsz columns");
  an->add_option("--profile-dir", analyze.profile_dir, "Also write each text's ranked profile here");

  FitArgs fit;
  auto* ft = app.add_subcommand("fit", "Fit a corpus model to the texts of a manifest");
  ft->add_option("--manifest", fit.manifest, "Corpus manifest")->required();
  ft->add_option("--model", fit.model, "Model to fit")->required()->check(CLI::IsMember({"heaps", "entropy", "zipf"}));
  ft->add_option("--out", fit.out, "Write fitted parameters to this file");

  TablesArgs tables;
  auto* tb = app.add_subcommand("tables", "Recompute the group statistics tables from the appendix fixtures");
  tb->add_option("--reference-dir", tables.reference_dir, "Directory with appendix_a..d.csv");
  tb->add_option("--out", tables.out, "Output file (default stdout)");

  PlotArgs plot;
  auto* pl = app.add_subcommand("plot-data", "Emit plot-ready points for one figure");
  pl->add_option("--figure", plot.figure, "Figure")
      ->required()
      ->check(CLI::IsMember({"diversity", "entropy", "zipf", "wqs-plane", "trend"}));
  pl->add_option("--reference-dir", plot.reference_dir, "Directory with appendix_a..d.csv");
  pl->add_option("--report", plot.report, "Use an analyze report instead of the fixtures");
  pl->add_option("--lang", plot.lang, "Language of the report")->check(CLI::IsMember({"en", "es"}));
  pl->add_option("--out", plot.out, "Output file (default stdout)");

  VerifyArgs verify;
  auto* vf = app.add_subcommand("verify", "Run the acceptance checks against the fixtures");
  vf->add_option("--reference-dir", verify.reference_dir, "Directory with appendix_a..d.csv");
  vf->add_option("--tolerance", verify.tolerance, "Override the tolerance of the table comparisons")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (an->parsed()) return cmd_analyze(analyze, out, err);
    if (ft->parsed()) return cmd_fit(fit, out, err);
    if (tb->parsed()) return cmd_tables(tables, out);
    if (pl->parsed()) return cmd_plot(plot, out, err);
    if (vf->parsed()) return cmd_verify(verify, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace lexigauge::cli
