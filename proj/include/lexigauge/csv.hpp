#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace lexigauge::csv {

struct Record {
  std::size_t line = 0;  // 1-based line number where the record starts
  std::vector<std::string> fields;
};

// Comma-separated values with RFC 4180 quoting. Blank lines and lines whose
// first character is '#' are skipped.
std::vector<Record> parse(std::istream& in);
std::vector<Record> read_file(const std::filesystem::path& path);

// Quotes the field only when it contains a comma, quote, or line break.
std::string escape(std::string_view field);

std::string join(const std::vector<std::string>& fields);

// Strict decimal parse of a whole field; throws ParseError naming `what`.
double parse_double(std::string_view field, std::string_view what);
long parse_long(std::string_view field, std::string_view what);

}  // namespace lexigauge::csv
