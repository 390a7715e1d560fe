#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lexigauge/types.hpp"

namespace lexigauge {

struct CorpusEntry {
  std::string id;
  std::string name;
  Genre genre = Genre::Speech;
  Language language = Language::English;
  Origin origin = Origin::Original;
  bool nobel = false;
  std::optional<int> year;
  std::optional<std::filesystem::path> source_path;

  friend bool operator==(const CorpusEntry&, const CorpusEntry&) = default;
};

// One appendix row. `readability` is RES for English rows and IPSZ for
// Spanish rows.
struct ReferenceRow {
  CorpusEntry entry;
  double d = 0;
  double h = 0;
  double d_rel = 0;
  double h_rel = 0;
  double j = 0;
  double readability = 0;
  double wqs = 0;
};

struct GroupKey {
  Language language;
  bool nobel;

  friend bool operator==(const GroupKey&, const GroupKey&) = default;
};

// English Nobel, English non-Nobel, Spanish Nobel, Spanish non-Nobel.
inline constexpr GroupKey kAllGroups[] = {
    {Language::English, true},
    {Language::English, false},
    {Language::Spanish, true},
    {Language::Spanish, false},
};

std::string group_label(const GroupKey& key);

inline constexpr int kMinYear = 1300;
inline constexpr int kMaxYear = 2100;

// Year from a leading "YYYY." prefix of a text name, when it is in range.
std::optional<int> year_from_name(const std::string& name);

// Manifest columns: id,name,genre,origin,language,nobel,year,source_path.
// The last two may be empty or omitted. Relative source paths resolve
// against `base_dir`.
std::vector<CorpusEntry> parse_manifest(std::istream& in,
                                        const std::filesystem::path& base_dir = {});
std::vector<CorpusEntry> load_manifest(const std::filesystem::path& path);

void write_manifest(std::ostream& out, const std::vector<CorpusEntry>& entries);
void save_manifest(const std::filesystem::path& path, const std::vector<CorpusEntry>& entries);

// Appendix fixture: id,name,genre,origin,d,h,d_rel,h_rel,j,readability,wqs.
// Language and Nobel status come from the id prefix (E/ET, EN/ENT, S/ST,
// SN/SNT).
std::vector<ReferenceRow> parse_reference_table(std::istream& in, const std::string& source = "<stream>");
std::vector<ReferenceRow> load_reference_table(const std::filesystem::path& path);

inline constexpr const char* kReferenceFiles[] = {
    "appendix_a.csv", "appendix_b.csv", "appendix_c.csv", "appendix_d.csv"};

// Concatenation of the four appendix fixtures found in `dir`.
std::vector<ReferenceRow> load_reference_dir(const std::filesystem::path& dir);

// Grouping used for every group statistic: speeches only; Nobel groups keep
// original-language texts, non-Nobel groups keep originals and translations.
bool in_group(const CorpusEntry& entry, const GroupKey& key);
std::vector<ReferenceRow> select_group(const std::vector<ReferenceRow>& rows, const GroupKey& key);

// Reads the whole source file and checks that it is UTF-8.
std::string load_text(const CorpusEntry& entry);

}  // namespace lexigauge
