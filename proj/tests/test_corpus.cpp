#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "helpers.hpp"
#include "lexigauge/corpus.hpp"
#include "lexigauge/error.hpp"

using namespace lexigauge;

namespace {

const char* kHeader = "id,name,genre,origin,language,nobel,year,source_path\n";

std::vector<CorpusEntry> manifest_of(const std::string& body) {
  std::istringstream in(std::string(kHeader) + body);
  return parse_manifest(in, "/base");
}

const ReferenceRow& row_by_id(const std::vector<ReferenceRow>& rows, const std::string& id) {
  const auto it = std::find_if(rows.begin(), rows.end(), [&](const ReferenceRow& r) { return r.entry.id == id; });
  REQUIRE(it != rows.end());
  return *it;
}

}  // namespace

TEST_CASE("manifest rows parse with a year taken from the name") {
  const auto entries = manifest_of("E11,1863.AbrahamLincoln,S,O,EN,false\n");
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].id == "E11");
  CHECK(entries[0].genre == Genre::Speech);
  CHECK(entries[0].origin == Origin::Original);
  CHECK(entries[0].language == Language::English);
  CHECK_FALSE(entries[0].nobel);
  CHECK(entries[0].year == 1863);
  CHECK_FALSE(entries[0].source_path.has_value());
}

TEST_CASE("manifest names without a year prefix have no year") {
  const auto entries = manifest_of("E90,IsaacAsimov.IRobot.Cap2,N,O,EN,false,,\n");
  REQUIRE(entries.size() == 1);
  CHECK_FALSE(entries[0].year.has_value());
  CHECK(entries[0].genre == Genre::NovelSegment);
}

TEST_CASE("manifest with only a header is empty") { CHECK(manifest_of("").empty()); }

TEST_CASE("manifest year column and relative source path") {
  const auto entries = manifest_of("S1,Discurso,S,T,ES,true,1950,texts/s1.txt\n");
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].year == 1950);
  CHECK(entries[0].nobel);
  CHECK(entries[0].origin == Origin::Translation);
  CHECK(*entries[0].source_path == std::filesystem::path("/base/texts/s1.txt"));
}

TEST_CASE("manifest errors name the row and field") {
  try {
    manifest_of("E1,a,S,O,EN,false\nE2,b,X,O,EN,false\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("row 3") != std::string::npos);
    CHECK(msg.find("genre") != std::string::npos);
  }
  CHECK_THROWS_AS(manifest_of("E1,a,S,O,EN,false\nE1,b,S,O,EN,false\n"), ParseError);
  CHECK_THROWS_AS(manifest_of("E1,a,S,O,EN,false,1200\n"), ParseError);
  CHECK_THROWS_AS(manifest_of("E1,a,S,O\n"), ParseError);
}

TEST_CASE("year_from_name") {
  CHECK(year_from_name("1381.JohnBall") == 1381);
  CHECK(year_from_name("2010.NL.Esp.MarioVargasLlosa") == 2010);
  CHECK_FALSE(year_from_name("IsaacAsimov.IRobot.Cap2").has_value());
  CHECK_FALSE(year_from_name("1863AbrahamLincoln").has_value());
  CHECK_FALSE(year_from_name("0999.Old").has_value());
}

TEST_CASE("manifest save/load round trip") {
  testing::TempDir dir("manifest");
  std::vector<CorpusEntry> entries(3);
  entries[0] = {"E1", "1381.JohnBall", Genre::Speech, Language::English, Origin::Original, false, 1381,
                dir.path() / "e1.txt"};
  entries[1] = {"SN3", "Name, with comma", Genre::NovelSegment, Language::Spanish, Origin::Translation, true,
                std::nullopt, std::nullopt};
  entries[2] = {"EN2", "1950.Someone", Genre::Speech, Language::English, Origin::Original, true, 1951,
                dir.path() / "sub" / "en2.txt"};
  const auto path = dir / "manifest.csv";
  save_manifest(path, entries);
  CHECK(load_manifest(path) == entries);
}

TEST_CASE("fixture row E1 and SN14 values") {
  const auto rows = load_reference_dir(testing::reference_dir());
  const auto& e1 = row_by_id(rows, "E1");
  CHECK(e1.entry.name == "1381.JohnBall");
  CHECK(e1.entry.language == Language::English);
  CHECK_FALSE(e1.entry.nobel);
  CHECK(e1.d == doctest::Approx(0.515).epsilon(1e-12));
  CHECK(e1.h == doctest::Approx(0.914).epsilon(1e-12));
  CHECK(e1.d_rel == doctest::Approx(-0.1684).epsilon(1e-12));
  CHECK(e1.h_rel == doctest::Approx(0.0049).epsilon(1e-12));
  CHECK(e1.j == doctest::Approx(-0.1156).epsilon(1e-12));
  CHECK(e1.readability == doctest::Approx(59.9047).epsilon(1e-12));
  CHECK(e1.wqs == doctest::Approx(0.6114).epsilon(1e-12));

  const auto& sn14 = row_by_id(rows, "SN14");
  CHECK(sn14.entry.name == "2010.NL.Esp.MarioVargasLlosa");
  CHECK(sn14.entry.language == Language::Spanish);
  CHECK(sn14.entry.nobel);
  CHECK(sn14.d == doctest::Approx(0.315));
  CHECK(sn14.h == doctest::Approx(0.763));
  CHECK(sn14.j == doctest::Approx(-0.3184));
  CHECK(sn14.wqs == doctest::Approx(1.6440));
}

TEST_CASE("fixture row counts per appendix") {
  CHECK(load_reference_table(testing::reference_dir() / "appendix_a.csv").size() == 103);
  CHECK(load_reference_table(testing::reference_dir() / "appendix_b.csv").size() == 53);
  CHECK(load_reference_table(testing::reference_dir() / "appendix_c.csv").size() == 123);
  CHECK(load_reference_table(testing::reference_dir() / "appendix_d.csv").size() == 35);
}

TEST_CASE("SN15-SN17 are novel segments, SN18 stays a speech") {
  const auto rows = load_reference_dir(testing::reference_dir());
  for (const char* id : {"SN15", "SN16", "SN17"}) CHECK(row_by_id(rows, id).entry.genre == Genre::NovelSegment);
  CHECK(row_by_id(rows, "SN18").entry.genre == Genre::Speech);
}

TEST_CASE("select_group sizes and disjointness") {
  const auto rows = load_reference_dir(testing::reference_dir());
  const std::size_t want[] = {37, 101, 19, 117};
  std::set<std::string> seen;
  std::size_t total = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto group = select_group(rows, kAllGroups[i]);
    CHECK(group.size() == want[i]);
    for (const auto& r : group) {
      seen.insert(r.entry.id);
      CHECK(r.entry.genre == Genre::Speech);
      if (kAllGroups[i].nobel) CHECK(r.entry.origin == Origin::Original);
    }
    total += group.size();
  }
  CHECK(seen.size() == total);
  CHECK(select_group({}, kAllGroups[0]).empty());
}

TEST_CASE("reference table validation") {
  const std::string header = "id,name,genre,origin,d,h,d_rel,h_rel,j,readability,wqs\n";
  {
    std::istringstream in(header);
    CHECK(parse_reference_table(in).empty());
  }
  {
    std::istringstream in(header + "E1,x,S,O,1.2,0.9,0,0,0,50,0\n");
    try {
      parse_reference_table(in, "t.csv");
      FAIL("expected an error");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("E1") != std::string::npos);
    }
  }
  {
    std::istringstream in(header + "E1,x,S,O,0.5,abc,0,0,0,50,0\n");
    CHECK_THROWS_AS(parse_reference_table(in), ParseError);
  }
  {
    std::istringstream in(header + "Q1,x,S,O,0.5,0.5,0,0,0,50,0\n");
    CHECK_THROWS_AS(parse_reference_table(in), ParseError);
  }
}

TEST_CASE("load_text errors are distinct") {
  testing::TempDir dir("text");
  CorpusEntry e;
  e.id = "T1";
  CHECK_THROWS_AS(load_text(e), MissingSourceError);
  try {
    load_text(e);
  } catch (const MissingSourceError& err) {
    CHECK(std::string(err.what()).find("no source text") != std::string::npos);
  }

  e.source_path = dir / "three.txt";
  testing::write_file(*e.source_path, "three little words");
  CHECK(load_text(e) == "three little words");

  e.source_path = dir / "absent.txt";
  CHECK_THROWS_AS(load_text(e), FileNotFoundError);

  e.source_path = dir / "latin1.txt";
  testing::write_file(*e.source_path, std::string("ca\xF1on"));
  CHECK_THROWS_AS(load_text(e), EncodingError);

  e.source_path = dir.path();
  CHECK_THROWS_AS(load_text(e), IoError);
}
