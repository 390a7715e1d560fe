#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lexigauge {

struct Check {
  std::string name;
  bool passed = false;
  bool hard = true;  // informational checks never fail a criterion
  std::string detail;
  bool note = false;  // reported even when it passes
};

struct CriterionResult {
  int number = 0;
  std::string title;
  std::vector<Check> checks;

  bool passed() const;
};

struct VerifyOptions {
  std::filesystem::path reference_dir;    // appendix fixtures
  std::filesystem::path published_tables; // printed table cells
  // Replaces the tolerance of every absolute or relative table comparison.
  std::optional<double> tolerance;
  std::uint64_t seed = 20240611;
};

// Defaults: reference_dir() and preset_dir() / published_tables.csv.
VerifyOptions default_verify_options();

// Runs the twelve acceptance criteria. Fixture and preset loading errors
// propagate; everything else is reported as a check.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& options);

bool all_passed(const std::vector<CriterionResult>& results);

// One "PASS"/"FAIL" line per criterion, then indented lines for failing
// and informational checks.
void write_verify_report(std::ostream& out, const std::vector<CriterionResult>& results);

}  // namespace lexigauge
