#pragma once

#include "lexigauge/models.hpp"
#include "lexigauge/tokenizer.hpp"

namespace lexigauge {

struct ReadabilityInputs {
  double syllables_per_word = 0;  // W
  double words_per_phrase = 0;    // S
};

// W = (letters / c_sy) / words, S = words / max(terminators, 1).
ReadabilityInputs readability_inputs(const TokenizedText& text, const LanguageParams& params);
ReadabilityInputs readability_inputs(std::size_t letter_count, std::size_t word_count,
                                     std::size_t terminator_count, double chars_per_syllable);

// Flesch reading ease: 206.835 - 84.6 W - 1.015 S. Not clamped.
double res(const ReadabilityInputs& in);

// Szigriszt perspicuity: 206.835 - 84.6 W - S. Not clamped.
double ipsz(const ReadabilityInputs& in);

// RES for English, IPSZ for Spanish.
double readability(Language language, const ReadabilityInputs& in);

}  // namespace lexigauge
