#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lexigauge/pipeline.hpp"

namespace lexigauge {

inline constexpr int kReportSchemaVersion = 1;

// Report columns, in order. Cross-readability mode appends res,ipsz.
inline constexpr const char* kReportHeader =
    "id,name,genre,origin,L,D,d,h,g,j,d_rel,h_rel,W,S,readability,wqs_verbatim,wqs_reconstructed";

// One report line, as written and as read back.
struct ReportRow {
  std::string id;
  std::string name;
  Genre genre = Genre::Speech;
  Origin origin = Origin::Original;
  std::uint64_t L = 0;
  std::uint64_t D = 0;
  double d = 0;
  double h = 0;
  double g = 0;
  double j = 0;
  double d_rel = 0;
  double h_rel = 0;
  double W = 0;
  double S = 0;
  double readability = 0;
  double wqs_verbatim = 0;
  double wqs_reconstructed = 0;
  std::optional<double> res;
  std::optional<double> ipsz;
};

ReportRow to_report_row(const TextMetrics& m, bool cross_readability = false);

enum class ReportFormat { Csv, JsonLines };

// CSV starts with a "# schema_version=1" line, then the header. JSON lines
// carry a "schema_version" member in every record. Reals use 6 decimals.
void write_report(std::ostream& out, const std::vector<ReportRow>& rows, ReportFormat format,
                  bool cross_readability = false);

// Reads either format back; the format is detected from the first
// non-blank character.
std::vector<ReportRow> parse_report(std::istream& in);
std::vector<ReportRow> load_report(const std::filesystem::path& path);

}  // namespace lexigauge
