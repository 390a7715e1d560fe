#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lexigauge/corpus.hpp"

namespace lexigauge {

enum class ToleranceMode { Absolute, Relative, Exact, Below };

// One printed cell of the comparison tables.
struct PublishedCell {
  int table = 0;
  std::string metric;     // d_rel, h_rel, j, wqs, readability, wqs-readability
  std::string statistic;  // n, mean, std, p, r
  std::string group_a;    // en-nobel, en-non-nobel, es-nobel, es-non-nobel, en-all, es-all
  std::string group_b;    // second sample of a t-test, else empty
  double printed = 0;
  ToleranceMode mode = ToleranceMode::Absolute;
  double tolerance = 0;
  bool hard = true;
};

struct TableCell {
  PublishedCell published;
  double recomputed = 0;
  double tolerance = 0;  // after any override
  bool within = false;
};

std::vector<PublishedCell> load_published_tables(const std::filesystem::path& path);

// Rows of a group label; "en-all" and "es-all" join both Nobel classes.
std::vector<ReferenceRow> rows_for_label(const std::vector<ReferenceRow>& rows, const std::string& label);

double recompute(const std::vector<ReferenceRow>& rows, const PublishedCell& cell);

// `tolerance` replaces the tolerance of absolute and relative cells.
std::vector<TableCell> reproduce_tables(const std::vector<ReferenceRow>& rows,
                                        const std::vector<PublishedCell>& published,
                                        std::optional<double> tolerance = std::nullopt);

bool passes(const TableCell& cell);

// table,metric,statistic,group_a,group_b,printed,recomputed,delta,tolerance,check,status
void write_table_report(std::ostream& out, const std::vector<TableCell>& cells);

}  // namespace lexigauge
