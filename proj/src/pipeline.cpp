#include "lexigauge/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <thread>

#include <fmt/core.h>

#include "lexigauge/error.hpp"
#include "lexigauge/paths.hpp"
#include "lexigauge/readability.hpp"
#include "lexigauge/tokenizer.hpp"
#include "lexigauge/zipf.hpp"

namespace lexigauge {

namespace {

std::string tagged(const CorpusEntry& entry, const std::exception& e) {
  return fmt::format("{}: {}", entry.id, e.what());
}

}  // namespace

WqsCoefficients bundled_reconstructed_preset(Language language) {
  const auto presets = load_wqs_presets(preset_dir() / "wqs_presets.csv");
  return find_preset(presets, language == Language::English ? kReconstructedEnglish : kReconstructedSpanish);
}

TextMetrics analyze_raw(const CorpusEntry& entry, std::string_view raw, const LanguageParams& params,
                        const AnalysisOptions& options) {
  const TokenizedText tokens = tokenize(raw, params.language);
  if (tokens.word_count == 0) throw UndefinedInputError("text contains no words");
  const RankedProfile profile = build_profile(tokens);

  TextMetrics m;
  m.entry = entry;
  m.L = profile.length();
  m.D = profile.diversity();
  m.d = specific_diversity(profile);
  m.h = entropy(profile);
  if (options.zipf_g) {
    m.g = *options.zipf_g;
  } else {
    m.g = m.D >= 3 ? fit_zipf_exponent(profile) : 1.0;
  }
  m.j = zipf_deviation(profile, m.g);
  m.d_rel = relative_diversity(static_cast<double>(m.D), heaps_predict(params, static_cast<double>(m.L)));
  m.h_rel = relative_entropy(m.h, entropy_model_predict(params, m.d));

  const ReadabilityInputs in = readability_inputs(tokens, params);
  m.W = in.syllables_per_word;
  m.S = in.words_per_phrase;
  m.res = res(in);
  m.ipsz = ipsz(in);
  m.readability = params.language == Language::English ? m.res : m.ipsz;

  const StylePoint point{m.d_rel, m.h_rel, m.j};
  m.wqs_verbatim = wqs(params.wqs_preset, point);
  const WqsCoefficients reconstructed =
      options.reconstructed ? *options.reconstructed : bundled_reconstructed_preset(params.language);
  m.wqs_reconstructed = wqs(reconstructed, point);
  return m;
}

TextMetrics analyze_text(const CorpusEntry& entry, const LanguageParams& params, const AnalysisOptions& options) {
  const std::string raw = load_text(entry);  // its errors already name the entry
  try {
    return analyze_raw(entry, raw, params, options);
  } catch (const UndefinedInputError& e) {
    throw UndefinedInputError(tagged(entry, e));
  } catch (const ParameterError& e) {
    throw ParameterError(tagged(entry, e));
  } catch (const InsufficientDataError& e) {
    throw InsufficientDataError(tagged(entry, e));
  } catch (const ParseError& e) {
    throw ParseError(tagged(entry, e));
  } catch (const Error& e) {
    throw Error(tagged(entry, e));
  }
}

CorpusResult analyze_corpus(const std::vector<CorpusEntry>& manifest, const LanguageParams& english,
                            const LanguageParams& spanish, const AnalysisOptions& options, unsigned threads) {
  CorpusResult result;
  if (manifest.empty()) return result;

  // Resolve the reconstructed presets once, before any worker starts.
  AnalysisOptions en_options = options;
  AnalysisOptions es_options = options;
  const auto uses = [&](Language lang) {
    return std::any_of(manifest.begin(), manifest.end(), [&](const CorpusEntry& e) { return e.language == lang; });
  };
  if (!options.reconstructed) {
    if (uses(Language::English)) en_options.reconstructed = bundled_reconstructed_preset(Language::English);
    if (uses(Language::Spanish)) es_options.reconstructed = bundled_reconstructed_preset(Language::Spanish);
  }

  std::vector<std::optional<TextMetrics>> slots(manifest.size());
  std::vector<std::string> errors(manifest.size());
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < manifest.size(); i = next++) {
      const CorpusEntry& entry = manifest[i];
      const bool en = entry.language == Language::English;
      try {
        slots[i] = analyze_text(entry, en ? english : spanish, en ? en_options : es_options);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, manifest.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  for (std::size_t i = 0; i < manifest.size(); ++i) {
    if (slots[i]) {
      result.records.push_back(std::move(*slots[i]));
    } else {
      result.failures.push_back({manifest[i].id, errors[i]});
    }
  }
  return result;
}

}  // namespace lexigauge
