#include "lexigauge/corpus.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <ostream>
#include <set>
#include <sstream>

#include <fmt/core.h>

#include "lexigauge/csv.hpp"
#include "lexigauge/error.hpp"
#include "lexigauge/utf8.hpp"

namespace lexigauge {

namespace {

const char* const kManifestHeader[] = {"id", "name", "genre", "origin",
                                       "language", "nobel", "year", "source_path"};
const char* const kReferenceHeader[] = {"id", "name", "genre", "origin", "d", "h",
                                        "d_rel", "h_rel", "j", "readability", "wqs"};

template <std::size_t N>
bool is_header(const csv::Record& rec, const char* const (&names)[N]) {
  return !rec.fields.empty() && rec.fields[0] == names[0];
}

struct PrefixClass {
  Language language;
  bool nobel;
};

PrefixClass classify_id(const std::string& id, const std::string& where) {
  std::string prefix;
  for (char c : id) {
    if (!std::isalpha(static_cast<unsigned char>(c))) break;
    prefix += c;
  }
  if (prefix == "E" || prefix == "ET") return {Language::English, false};
  if (prefix == "EN" || prefix == "ENT") return {Language::English, true};
  if (prefix == "S" || prefix == "ST") return {Language::Spanish, false};
  if (prefix == "SN" || prefix == "SNT") return {Language::Spanish, true};
  throw ParseError(fmt::format("{}: field 'id': unknown id prefix in '{}'", where, id));
}

}  // namespace

std::string group_label(const GroupKey& key) {
  return fmt::format("{}-{}", key.language == Language::English ? "en" : "es",
                     key.nobel ? "nobel" : "non-nobel");
}

std::optional<int> year_from_name(const std::string& name) {
  if (name.size() < 5 || name[4] != '.') return std::nullopt;
  int year = 0;
  for (int i = 0; i < 4; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    year = year * 10 + (name[i] - '0');
  }
  if (year < kMinYear || year > kMaxYear) return std::nullopt;
  return year;
}

std::vector<CorpusEntry> parse_manifest(std::istream& in, const std::filesystem::path& base_dir) {
  const auto records = csv::parse(in);
  std::vector<CorpusEntry> entries;
  std::set<std::string> seen;

  for (const auto& rec : records) {
    if (is_header(rec, kManifestHeader)) continue;
    const auto where = fmt::format("manifest row {}", rec.line);
    const auto& f = rec.fields;
    if (f.size() < 6 || f.size() > 8) {
      throw ParseError(fmt::format("{}: expected 6 to 8 fields, got {}", where, f.size()));
    }
    auto field_error = [&](const char* name, const std::exception& e) {
      return ParseError(fmt::format("{}: field '{}': {}", where, name, e.what()));
    };

    CorpusEntry e;
    e.id = f[0];
    if (e.id.empty()) throw ParseError(fmt::format("{}: field 'id': empty", where));
    e.name = f[1];
    try { e.genre = parse_genre(f[2]); } catch (const Error& ex) { throw field_error("genre", ex); }
    try { e.origin = parse_origin(f[3]); } catch (const Error& ex) { throw field_error("origin", ex); }
    try { e.language = parse_language(f[4]); } catch (const Error& ex) { throw field_error("language", ex); }
    try { e.nobel = parse_bool(f[5]); } catch (const Error& ex) { throw field_error("nobel", ex); }

    if (f.size() > 6 && !f[6].empty()) {
      long year;
      try { year = csv::parse_long(f[6], "year"); } catch (const Error& ex) { throw field_error("year", ex); }
      if (year < kMinYear || year > kMaxYear) {
        throw ParseError(fmt::format("{}: field 'year': {} outside [{}, {}]", where, year,
                                     kMinYear, kMaxYear));
      }
      e.year = static_cast<int>(year);
    } else {
      e.year = year_from_name(e.name);
    }
    if (f.size() > 7 && !f[7].empty()) {
      std::filesystem::path p(f[7]);
      e.source_path = (p.is_relative() && !base_dir.empty()) ? base_dir / p : p;
    }

    if (!seen.insert(e.id).second) {
      throw ParseError(fmt::format("{}: duplicate id '{}'", where, e.id));
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

std::vector<CorpusEntry> load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot open manifest '{}'", path.string()));
  return parse_manifest(in, path.parent_path());
}

void write_manifest(std::ostream& out, const std::vector<CorpusEntry>& entries) {
  out << "id,name,genre,origin,language,nobel,year,source_path\n";
  for (const auto& e : entries) {
    out << csv::join({e.id, e.name, std::string(to_code(e.genre)), std::string(to_code(e.origin)),
                      std::string(to_code(e.language)), e.nobel ? "true" : "false",
                      e.year ? std::to_string(*e.year) : std::string(),
                      e.source_path ? e.source_path->generic_string() : std::string()})
        << '\n';
  }
}

void save_manifest(const std::filesystem::path& path, const std::vector<CorpusEntry>& entries) {
  // Paths are stored relative to the manifest so the file can move with its texts.
  const auto base = path.parent_path();
  std::vector<CorpusEntry> rel = entries;
  for (auto& e : rel) {
    if (e.source_path && e.source_path->is_absolute() && !base.empty()) {
      auto r = e.source_path->lexically_relative(std::filesystem::absolute(base));
      if (!r.empty()) e.source_path = r;
    }
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(fmt::format("cannot write manifest '{}'", path.string()));
  write_manifest(out, rel);
}

std::vector<ReferenceRow> parse_reference_table(std::istream& in, const std::string& source) {
  const auto records = csv::parse(in);
  std::vector<ReferenceRow> rows;
  std::set<std::string> seen;

  for (const auto& rec : records) {
    if (is_header(rec, kReferenceHeader)) continue;
    const auto where = fmt::format("{} row {}", source, rec.line);
    const auto& f = rec.fields;
    if (f.size() != 11) {
      throw ParseError(fmt::format("{}: expected 11 fields, got {}", where, f.size()));
    }

    ReferenceRow row;
    auto& e = row.entry;
    e.id = f[0];
    e.name = f[1];
    const auto cls = classify_id(e.id, where);
    e.language = cls.language;
    e.nobel = cls.nobel;
    try {
      e.genre = parse_genre(f[2]);
      e.origin = parse_origin(f[3]);
    } catch (const Error& ex) {
      throw ParseError(fmt::format("{} ({}): {}", where, e.id, ex.what()));
    }
    e.year = year_from_name(e.name);

    double* targets[] = {&row.d, &row.h, &row.d_rel, &row.h_rel, &row.j, &row.readability, &row.wqs};
    for (int k = 0; k < 7; ++k) {
      const auto field = fmt::format("{} ({}): field '{}'", where, e.id, kReferenceHeader[4 + k]);
      *targets[k] = csv::parse_double(f[4 + k], field);
    }
    if (row.d < 0 || row.d > 1) {
      throw ParseError(fmt::format("{} ({}): field 'd': {} outside [0, 1]", where, e.id, row.d));
    }
    if (row.h < 0 || row.h > 1) {
      throw ParseError(fmt::format("{} ({}): field 'h': {} outside [0, 1]", where, e.id, row.h));
    }
    if (!seen.insert(e.id).second) {
      throw ParseError(fmt::format("{}: duplicate id '{}'", where, e.id));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ReferenceRow> load_reference_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot open reference table '{}'", path.string()));
  return parse_reference_table(in, path.filename().string());
}

std::vector<ReferenceRow> load_reference_dir(const std::filesystem::path& dir) {
  std::vector<ReferenceRow> all;
  for (const char* name : kReferenceFiles) {
    auto part = load_reference_table(dir / name);
    all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return all;
}

bool in_group(const CorpusEntry& e, const GroupKey& key) {
  if (e.genre != Genre::Speech) return false;
  if (e.language != key.language || e.nobel != key.nobel) return false;
  return !key.nobel || e.origin == Origin::Original;
}

std::vector<ReferenceRow> select_group(const std::vector<ReferenceRow>& rows, const GroupKey& key) {
  std::vector<ReferenceRow> out;
  for (const auto& r : rows) {
    if (in_group(r.entry, key)) out.push_back(r);
  }
  return out;
}

std::string load_text(const CorpusEntry& entry) {
  if (!entry.source_path) {
    throw MissingSourceError(fmt::format("{}: no source text", entry.id));
  }
  const auto& path = *entry.source_path;
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) {
    throw FileNotFoundError(fmt::format("{}: source text '{}' not found", entry.id, path.string()));
  }
  if (std::filesystem::is_directory(path, ec)) {
    throw IoError(fmt::format("{}: '{}' is a directory", entry.id, path.string()));
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("{}: cannot read '{}'", entry.id, path.string()));
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError(fmt::format("{}: read error on '{}'", entry.id, path.string()));
  if (!utf8::is_valid(text)) {
    throw EncodingError(fmt::format("{}: '{}' is not valid UTF-8", entry.id, path.string()));
  }
  return text;
}

}  // namespace lexigauge
