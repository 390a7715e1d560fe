#include "lexigauge/readability.hpp"

#include <algorithm>

#include "lexigauge/error.hpp"

namespace lexigauge {

ReadabilityInputs readability_inputs(std::size_t letter_count, std::size_t word_count,
                                     std::size_t terminator_count, double chars_per_syllable) {
  if (word_count == 0) throw UndefinedInputError("readability of a text without words");
  const double words = static_cast<double>(word_count);
  const double syllables = estimate_syllables(letter_count, chars_per_syllable);
  const double phrases = static_cast<double>(std::max<std::size_t>(terminator_count, 1));
  return {syllables / words, words / phrases};
}

ReadabilityInputs readability_inputs(const TokenizedText& text, const LanguageParams& params) {
  return readability_inputs(text.letter_count, text.word_count, text.terminator_count,
                            params.chars_per_syllable);
}

double res(const ReadabilityInputs& in) {
  return 206.835 - 84.6 * in.syllables_per_word - 1.015 * in.words_per_phrase;
}

double ipsz(const ReadabilityInputs& in) {
  return 206.835 - 84.6 * in.syllables_per_word - in.words_per_phrase;
}

double readability(Language language, const ReadabilityInputs& in) {
  return language == Language::English ? res(in) : ipsz(in);
}

}  // namespace lexigauge
