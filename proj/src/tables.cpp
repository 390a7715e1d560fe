#include "lexigauge/tables.hpp"

#include <cmath>
#include <ostream>

#include <fmt/core.h>

#include "lexigauge/csv.hpp"
#include "lexigauge/error.hpp"
#include "lexigauge/stats.hpp"

namespace lexigauge {

namespace {

ToleranceMode parse_mode(const std::string& s, const std::string& where) {
  if (s == "abs") return ToleranceMode::Absolute;
  if (s == "rel") return ToleranceMode::Relative;
  if (s == "exact") return ToleranceMode::Exact;
  if (s == "below") return ToleranceMode::Below;
  throw ParseError(fmt::format("{}: unknown mode '{}'", where, s));
}

std::vector<double> column(const std::vector<ReferenceRow>& rows, const std::string& metric) {
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    if (metric == "d_rel") {
      out.push_back(r.d_rel);
    } else if (metric == "h_rel") {
      out.push_back(r.h_rel);
    } else if (metric == "j") {
      out.push_back(r.j);
    } else if (metric == "wqs") {
      out.push_back(r.wqs);
    } else if (metric == "readability") {
      out.push_back(r.readability);
    } else {
      throw ParameterError(fmt::format("unknown table metric '{}'", metric));
    }
  }
  return out;
}

std::string cell_name(const PublishedCell& c) {
  std::string name = fmt::format("table {} {} {} {}", c.table, c.metric, c.statistic, c.group_a);
  if (!c.group_b.empty()) name += " vs " + c.group_b;
  return name;
}

}  // namespace

std::vector<PublishedCell> load_published_tables(const std::filesystem::path& path) {
  std::vector<PublishedCell> out;
  for (const auto& rec : csv::read_file(path)) {
    const auto& f = rec.fields;
    if (!f.empty() && f[0] == "table") continue;
    const auto where = fmt::format("{} row {}", path.filename().string(), rec.line);
    if (f.size() != 9) throw ParseError(fmt::format("{}: expected 9 fields, got {}", where, f.size()));
    PublishedCell c;
    c.table = static_cast<int>(csv::parse_long(f[0], where + " table"));
    c.metric = f[1];
    c.statistic = f[2];
    c.group_a = f[3];
    c.group_b = f[4];
    c.printed = csv::parse_double(f[5], where + " printed");
    c.mode = parse_mode(f[6], where);
    c.tolerance = csv::parse_double(f[7], where + " tolerance");
    if (f[8] != "hard" && f[8] != "info") throw ParseError(fmt::format("{}: check must be hard or info", where));
    c.hard = f[8] == "hard";
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<ReferenceRow> rows_for_label(const std::vector<ReferenceRow>& rows, const std::string& label) {
  for (const auto& key : kAllGroups) {
    if (group_label(key) == label) return select_group(rows, key);
  }
  if (label == "en-all" || label == "es-all") {
    const Language lang = label == "en-all" ? Language::English : Language::Spanish;
    std::vector<ReferenceRow> out;
    for (const auto& r : rows) {
      if (in_group(r.entry, {lang, true}) || in_group(r.entry, {lang, false})) out.push_back(r);
    }
    return out;
  }
  throw ParameterError(fmt::format("unknown group label '{}'", label));
}

double recompute(const std::vector<ReferenceRow>& rows, const PublishedCell& cell) {
  const auto a = rows_for_label(rows, cell.group_a);
  if (cell.statistic == "n") return static_cast<double>(a.size());
  if (cell.statistic == "r") return stats::pearson(column(a, "wqs"), column(a, "readability"));
  const auto va = column(a, cell.metric);
  if (cell.statistic == "mean") return stats::summarize(va).mean;
  if (cell.statistic == "std") return stats::summarize(va).std_dev;
  if (cell.statistic == "p") {
    const auto vb = column(rows_for_label(rows, cell.group_b), cell.metric);
    return stats::t_test_p(va, vb);
  }
  throw ParameterError(fmt::format("unknown statistic '{}'", cell.statistic));
}

std::vector<TableCell> reproduce_tables(const std::vector<ReferenceRow>& rows,
                                        const std::vector<PublishedCell>& published,
                                        std::optional<double> tolerance) {
  std::vector<TableCell> out;
  out.reserve(published.size());
  for (const auto& p : published) {
    TableCell c;
    c.published = p;
    c.tolerance = p.tolerance;
    if (tolerance && (p.mode == ToleranceMode::Absolute || p.mode == ToleranceMode::Relative)) {
      c.tolerance = *tolerance;
    }
    try {
      c.recomputed = recompute(rows, p);
    } catch (const Error& e) {
      throw Error(fmt::format("{}: {}", cell_name(p), e.what()));
    }
    switch (p.mode) {
      case ToleranceMode::Absolute:
        c.within = std::abs(c.recomputed - p.printed) <= c.tolerance;
        break;
      case ToleranceMode::Relative:
        c.within = std::abs(c.recomputed - p.printed) <= c.tolerance * std::abs(p.printed);
        break;
      case ToleranceMode::Exact:
        c.within = c.recomputed == p.printed;
        break;
      case ToleranceMode::Below:
        c.within = c.recomputed < p.printed;
        break;
    }
    out.push_back(std::move(c));
  }
  return out;
}

bool passes(const TableCell& cell) { return cell.within || !cell.published.hard; }

void write_table_report(std::ostream& out, const std::vector<TableCell>& cells) {
  out << "table,metric,statistic,group_a,group_b,printed,recomputed,delta,tolerance,check,status\n";
  for (const auto& c : cells) {
    const auto& p = c.published;
    const char* status = c.within ? "ok" : (p.hard ? "FAIL" : "differs");
    std::string tol;
    switch (p.mode) {
      case ToleranceMode::Absolute:
        tol = fmt::format("{:g}", c.tolerance);
        break;
      case ToleranceMode::Relative:
        tol = fmt::format("{:g}%", c.tolerance * 100);
        break;
      case ToleranceMode::Exact:
        tol = "exact";
        break;
      case ToleranceMode::Below:
        tol = fmt::format("<{:g}", p.printed);
        break;
    }
    out << fmt::format("{},{},{},{},{},{:g},{:.6g},{:+.6g},{},{},{}\n", p.table, p.metric, p.statistic, p.group_a,
                       p.group_b, p.printed, c.recomputed, c.recomputed - p.printed, tol, p.hard ? "hard" : "info",
                       status);
  }
}

}  // namespace lexigauge
