#include "lexigauge/csv.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <fmt/core.h>

#include "lexigauge/error.hpp"

namespace lexigauge::csv {

std::vector<Record> parse(std::istream& in) {
  std::vector<Record> records;
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;

    Record rec;
    rec.line = line_no;
    std::string field;
    bool quoted = false;
    std::size_t i = 0;
    while (true) {
      if (i == line.size()) {
        if (!quoted) break;
        // Quoted field spans a line break.
        std::string next;
        if (!std::getline(in, next)) {
          throw ParseError(fmt::format("line {}: unterminated quoted field", rec.line));
        }
        ++line_no;
        if (!next.empty() && next.back() == '\r') next.pop_back();
        field += '\n';
        line = std::move(next);
        i = 0;
        continue;
      }
      const char c = line[i++];
      if (quoted) {
        if (c == '"') {
          if (i < line.size() && line[i] == '"') {
            field += '"';
            ++i;
          } else {
            quoted = false;
          }
        } else {
          field += c;
        }
      } else if (c == '"' && field.empty()) {
        quoted = true;
      } else if (c == ',') {
        rec.fields.push_back(std::move(field));
        field.clear();
      } else {
        field += c;
      }
    }
    rec.fields.push_back(std::move(field));
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<Record> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot open '{}'", path.string()));
  return parse(in);
}

std::string escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string join(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += escape(fields[i]);
  }
  return out;
}

double parse_double(std::string_view field, std::string_view what) {
  const std::string s(field);
  if (s.empty()) throw ParseError(fmt::format("{}: empty numeric field", what));
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) {
    throw ParseError(fmt::format("{}: '{}' is not a finite number", what, s));
  }
  return v;
}

long parse_long(std::string_view field, std::string_view what) {
  const std::string s(field);
  if (s.empty()) throw ParseError(fmt::format("{}: empty integer field", what));
  char* end = nullptr;
  errno = 0;
  const long v = std::strtol(s.c_str(), &end, 10);
  if (end != s.c_str() + s.size() || errno == ERANGE) {
    throw ParseError(fmt::format("{}: '{}' is not an integer", what, s));
  }
  return v;
}

}  // namespace lexigauge::csv
