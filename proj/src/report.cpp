#include "lexigauge/report.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/core.h>
#include <json.hpp>

#include "lexigauge/csv.hpp"
#include "lexigauge/error.hpp"

namespace lexigauge {

namespace {

using nlohmann::ordered_json;

std::string real(double v) { return fmt::format("{:.6f}", v); }

void write_csv(std::ostream& out, const std::vector<ReportRow>& rows, bool cross) {
  out << "# schema_version=" << kReportSchemaVersion << '\n';
  out << kReportHeader << (cross ? ",res,ipsz" : "") << '\n';
  for (const auto& r : rows) {
    std::vector<std::string> f{r.id,
                               r.name,
                               std::string(to_code(r.genre)),
                               std::string(to_code(r.origin)),
                               std::to_string(r.L),
                               std::to_string(r.D),
                               real(r.d),
                               real(r.h),
                               real(r.g),
                               real(r.j),
                               real(r.d_rel),
                               real(r.h_rel),
                               real(r.W),
                               real(r.S),
                               real(r.readability),
                               real(r.wqs_verbatim),
                               real(r.wqs_reconstructed)};
    if (cross) {
      f.push_back(real(r.res.value_or(0)));
      f.push_back(real(r.ipsz.value_or(0)));
    }
    out << csv::join(f) << '\n';
  }
}

// Rounded through the same 6-decimal text as the CSV so both formats agree.
double rounded(double v) { return std::stod(real(v)); }

void write_json(std::ostream& out, const std::vector<ReportRow>& rows, bool cross) {
  for (const auto& r : rows) {
    ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["id"] = r.id;
    j["name"] = r.name;
    j["genre"] = to_code(r.genre);
    j["origin"] = to_code(r.origin);
    j["L"] = r.L;
    j["D"] = r.D;
    j["d"] = rounded(r.d);
    j["h"] = rounded(r.h);
    j["g"] = rounded(r.g);
    j["j"] = rounded(r.j);
    j["d_rel"] = rounded(r.d_rel);
    j["h_rel"] = rounded(r.h_rel);
    j["W"] = rounded(r.W);
    j["S"] = rounded(r.S);
    j["readability"] = rounded(r.readability);
    j["wqs_verbatim"] = rounded(r.wqs_verbatim);
    j["wqs_reconstructed"] = rounded(r.wqs_reconstructed);
    if (cross) {
      j["res"] = rounded(r.res.value_or(0));
      j["ipsz"] = rounded(r.ipsz.value_or(0));
    }
    out << j.dump() << '\n';
  }
}

std::vector<ReportRow> parse_csv(std::istream& in) {
  std::vector<ReportRow> rows;
  bool header_seen = false;
  bool cross = false;
  for (const auto& rec : csv::parse(in)) {
    const auto& f = rec.fields;
    if (!header_seen) {
      const std::string header = csv::join(f);
      if (header == kReportHeader) {
        cross = false;
      } else if (header == std::string(kReportHeader) + ",res,ipsz") {
        cross = true;
      } else {
        throw ParseError(fmt::format("report line {}: unexpected header", rec.line));
      }
      header_seen = true;
      continue;
    }
    const std::size_t want = cross ? 19 : 17;
    const auto where = fmt::format("report line {}", rec.line);
    if (f.size() != want) throw ParseError(fmt::format("{}: expected {} fields, got {}", where, want, f.size()));
    ReportRow r;
    r.id = f[0];
    r.name = f[1];
    r.genre = parse_genre(f[2]);
    r.origin = parse_origin(f[3]);
    r.L = static_cast<std::uint64_t>(csv::parse_long(f[4], where + " L"));
    r.D = static_cast<std::uint64_t>(csv::parse_long(f[5], where + " D"));
    r.d = csv::parse_double(f[6], where + " d");
    r.h = csv::parse_double(f[7], where + " h");
    r.g = csv::parse_double(f[8], where + " g");
    r.j = csv::parse_double(f[9], where + " j");
    r.d_rel = csv::parse_double(f[10], where + " d_rel");
    r.h_rel = csv::parse_double(f[11], where + " h_rel");
    r.W = csv::parse_double(f[12], where + " W");
    r.S = csv::parse_double(f[13], where + " S");
    r.readability = csv::parse_double(f[14], where + " readability");
    r.wqs_verbatim = csv::parse_double(f[15], where + " wqs_verbatim");
    r.wqs_reconstructed = csv::parse_double(f[16], where + " wqs_reconstructed");
    if (cross) {
      r.res = csv::parse_double(f[17], where + " res");
      r.ipsz = csv::parse_double(f[18], where + " ipsz");
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<ReportRow> parse_json_lines(std::istream& in) {
  std::vector<ReportRow> rows;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto j = ordered_json::parse(line);
      if (j.at("schema_version").get<int>() != kReportSchemaVersion) {
        throw ParseError(fmt::format("report line {}: unsupported schema_version", n));
      }
      ReportRow r;
      r.id = j.at("id").get<std::string>();
      r.name = j.at("name").get<std::string>();
      r.genre = parse_genre(j.at("genre").get<std::string>());
      r.origin = parse_origin(j.at("origin").get<std::string>());
      r.L = j.at("L").get<std::uint64_t>();
      r.D = j.at("D").get<std::uint64_t>();
      r.d = j.at("d").get<double>();
      r.h = j.at("h").get<double>();
      r.g = j.at("g").get<double>();
      r.j = j.at("j").get<double>();
      r.d_rel = j.at("d_rel").get<double>();
      r.h_rel = j.at("h_rel").get<double>();
      r.W = j.at("W").get<double>();
      r.S = j.at("S").get<double>();
      r.readability = j.at("readability").get<double>();
      r.wqs_verbatim = j.at("wqs_verbatim").get<double>();
      r.wqs_reconstructed = j.at("wqs_reconstructed").get<double>();
      if (j.contains("res")) r.res = j.at("res").get<double>();
      if (j.contains("ipsz")) r.ipsz = j.at("ipsz").get<double>();
      rows.push_back(std::move(r));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(fmt::format("report line {}: {}", n, e.what()));
    }
  }
  return rows;
}

}  // namespace

ReportRow to_report_row(const TextMetrics& m, bool cross_readability) {
  ReportRow r;
  r.id = m.entry.id;
  r.name = m.entry.name;
  r.genre = m.entry.genre;
  r.origin = m.entry.origin;
  r.L = m.L;
  r.D = m.D;
  r.d = m.d;
  r.h = m.h;
  r.g = m.g;
  r.j = m.j;
  r.d_rel = m.d_rel;
  r.h_rel = m.h_rel;
  r.W = m.W;
  r.S = m.S;
  r.readability = m.readability;
  r.wqs_verbatim = m.wqs_verbatim;
  r.wqs_reconstructed = m.wqs_reconstructed;
  if (cross_readability) {
    r.res = m.res;
    r.ipsz = m.ipsz;
  }
  return r;
}

void write_report(std::ostream& out, const std::vector<ReportRow>& rows, ReportFormat format,
                  bool cross_readability) {
  if (format == ReportFormat::Csv) {
    write_csv(out, rows, cross_readability);
  } else {
    write_json(out, rows, cross_readability);
  }
}

std::vector<ReportRow> parse_report(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  const auto first = text.find_first_not_of(" \t\r\n");
  std::istringstream body(text);
  if (first != std::string::npos && text[first] == '{') return parse_json_lines(body);
  return parse_csv(body);
}

std::vector<ReportRow> load_report(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileNotFoundError(fmt::format("cannot open report '{}'", path.string()));
  return parse_report(in);
}

}  // namespace lexigauge
