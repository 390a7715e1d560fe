#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "helpers.hpp"
#include "lexigauge/error.hpp"
#include "lexigauge/pipeline.hpp"
#include "lexigauge/zipf.hpp"

using namespace lexigauge;

namespace {

CorpusEntry entry(const std::string& id, Language lang = Language::English) {
  CorpusEntry e;
  e.id = id;
  e.name = id;
  e.language = lang;
  return e;
}

bool same(const TextMetrics& a, const TextMetrics& b) {
  return a.entry == b.entry && a.L == b.L && a.D == b.D && a.d == b.d && a.h == b.h && a.g == b.g && a.j == b.j &&
         a.d_rel == b.d_rel && a.h_rel == b.h_rel && a.W == b.W && a.S == b.S && a.readability == b.readability &&
         a.res == b.res && a.ipsz == b.ipsz && a.wqs_verbatim == b.wqs_verbatim &&
         a.wqs_reconstructed == b.wqs_reconstructed;
}

}  // namespace

TEST_CASE("all-distinct text") {
  const auto m = analyze_raw(entry("t"), "a b c d", english_params());
  CHECK(m.L == 4);
  CHECK(m.D == 4);
  CHECK(m.d == 1.0);
  CHECK(m.h == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(m.S == 4.0);
}

TEST_CASE("one word repeated") {
  std::string text;
  for (int i = 0; i < 100; ++i) text += "word ";
  const auto m = analyze_raw(entry("t"), text, english_params());
  CHECK(m.D == 1);
  CHECK(m.L == 100);
  CHECK(m.d == 0.01);
  CHECK(m.h == 0.0);
  CHECK(m.g == 1.0);
  CHECK(m.j == 0.0);
}

TEST_CASE("Gettysburg Address") {
  CorpusEntry e = entry("E11");
  e.name = "1863.AbrahamLincoln";
  e.source_path = testing::test_data("gettysburg.txt");
  const auto m = analyze_text(e, english_params());
  CHECK(std::abs(m.d - 0.490) <= 0.05);
  CHECK(m.h > 0.85);
  CHECK(m.h < 0.95);
}

TEST_CASE("record composition") {
  const std::string text = "It was the best of times, it was the worst of times; it was the age of wisdom. "
                           "It was the age of foolishness! Was it? It was.";
  for (auto lang : {Language::English, Language::Spanish}) {
    const auto params = default_params(lang);
    const auto m = analyze_raw(entry("t", lang), text, params);
    CHECK(std::abs(m.d - static_cast<double>(m.D) / static_cast<double>(m.L)) <= 1e-15 * m.d);
    CHECK(m.h >= 0.0);
    CHECK(m.h <= 1.0);
    CHECK(m.d_rel == doctest::Approx(relative_diversity(m.D, heaps_predict(params, m.L))));
    CHECK(m.h_rel == doctest::Approx(m.h - entropy_model_predict(params, m.d)));
    CHECK(m.j == doctest::Approx(zipf_deviation(build_profile(tokenize(text, lang)), m.g)));
    CHECK(std::abs(m.ipsz - m.res - 0.015 * m.S) <= 1e-12);
    CHECK(m.readability == (lang == Language::English ? m.res : m.ipsz));
    CHECK(m.wqs_verbatim == doctest::Approx(wqs(params.wqs_preset, {m.d_rel, m.h_rel, m.j})));
    CHECK(m.wqs_reconstructed == doctest::Approx(wqs(bundled_reconstructed_preset(lang), {m.d_rel, m.h_rel, m.j})));
  }
}

TEST_CASE("fixed Zipf exponent") {
  AnalysisOptions opts;
  opts.zipf_g = 1.0;
  const auto m = analyze_raw(entry("t"), "a a a a b b c d. a b", english_params(), opts);
  CHECK(m.g == 1.0);
}

TEST_CASE("analysis is deterministic") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> word(0, 80);
  std::string text;
  for (int i = 0; i < 2000; ++i) text += "w" + std::to_string(word(rng)) + (i % 13 == 0 ? ". " : " ");
  const auto a = analyze_raw(entry("t"), text, spanish_params());
  const auto b = analyze_raw(entry("t"), text, spanish_params());
  CHECK(same(a, b));
}

TEST_CASE("text without words is rejected with its id") {
  testing::TempDir dir("nowords");
  CorpusEntry e = entry("EMPTY1");
  e.source_path = dir / "p.txt";
  testing::write_file(*e.source_path, "... ?! ,");
  try {
    analyze_text(e, english_params());
    FAIL("expected an error");
  } catch (const UndefinedInputError& err) {
    CHECK(std::string(err.what()).find("EMPTY1") != std::string::npos);
  }
}

TEST_CASE("corpus analysis collects failures and keeps manifest order") {
  testing::TempDir dir("corpus");
  std::vector<CorpusEntry> manifest;
  for (int i = 0; i < 3; ++i) {
    CorpusEntry e = entry("T" + std::to_string(i), i == 1 ? Language::Spanish : Language::English);
    e.source_path = dir / ("t" + std::to_string(i) + ".txt");
    testing::write_file(*e.source_path, testing::text_with(200 + 50 * i, 40 + 10 * i) + ".");
    manifest.push_back(e);
  }
  const auto ok = analyze_corpus(manifest, english_params(), spanish_params(), {}, 3);
  REQUIRE(ok.records.size() == 3);
  CHECK(ok.failures.empty());
  for (int i = 0; i < 3; ++i) CHECK(ok.records[i].entry.id == "T" + std::to_string(i));

  auto broken = manifest;
  broken[1].source_path = dir / "missing.txt";
  const auto partial = analyze_corpus(broken, english_params(), spanish_params(), {}, 2);
  CHECK(partial.records.size() == 2);
  REQUIRE(partial.failures.size() == 1);
  CHECK(partial.failures[0].id == "T1");

  const auto none = analyze_corpus({}, english_params(), spanish_params());
  CHECK(none.records.empty());
  CHECK(none.failures.empty());

  auto permuted = manifest;
  std::reverse(permuted.begin(), permuted.end());
  const auto rev = analyze_corpus(permuted, english_params(), spanish_params(), {}, 1);
  REQUIRE(rev.records.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(same(rev.records[2 - i], ok.records[i]));
}
