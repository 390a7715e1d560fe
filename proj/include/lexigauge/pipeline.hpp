#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexigauge/corpus.hpp"
#include "lexigauge/models.hpp"
#include "lexigauge/profile.hpp"
#include "lexigauge/wqs.hpp"

namespace lexigauge {

struct TextMetrics {
  CorpusEntry entry;
  std::uint64_t L = 0;
  std::uint64_t D = 0;
  double d = 0;
  double h = 0;
  double g = 1;  // Zipf exponent used for j
  double j = 0;
  double d_rel = 0;
  double h_rel = 0;
  double W = 0;
  double S = 0;
  double readability = 0;  // res or ipsz, by language
  double res = 0;
  double ipsz = 0;
  double wqs_verbatim = 0;
  double wqs_reconstructed = 0;
};

struct AnalysisOptions {
  // Fixed Zipf exponent. When absent the exponent is fitted, falling back to
  // 1 for profiles with fewer than three distinct symbols.
  std::optional<double> zipf_g;
  // Defaults to the bundled reconstructed preset of the text's language.
  std::optional<WqsCoefficients> reconstructed;
};

// Reconstructed preset for `language` from wqs_presets.csv in preset_dir().
WqsCoefficients bundled_reconstructed_preset(Language language);

TextMetrics analyze_raw(const CorpusEntry& entry, std::string_view raw, const LanguageParams& params,
                        const AnalysisOptions& options = {});

// Loads the entry's source and analyzes it. Errors carry the entry id.
TextMetrics analyze_text(const CorpusEntry& entry, const LanguageParams& params,
                         const AnalysisOptions& options = {});

struct TextFailure {
  std::string id;
  std::string message;
};

struct CorpusResult {
  std::vector<TextMetrics> records;  // manifest order, failures skipped
  std::vector<TextFailure> failures;
};

// Analyzes every entry, on up to `threads` workers (0 = hardware
// concurrency). Per-text errors are collected, never thrown.
CorpusResult analyze_corpus(const std::vector<CorpusEntry>& manifest, const LanguageParams& english,
                            const LanguageParams& spanish, const AnalysisOptions& options = {},
                            unsigned threads = 0);

}  // namespace lexigauge
