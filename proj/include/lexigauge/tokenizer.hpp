#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lexigauge/types.hpp"

namespace lexigauge {

enum class TokenKind { Word, Punctuation };

struct SymbolToken {
  std::string text;  // lower-cased word, or a normalized punctuation mark
  TokenKind kind = TokenKind::Word;

  friend bool operator==(const SymbolToken&, const SymbolToken&) = default;
};

// Symbol stream of a text plus the counts the readability formulas need.
struct TokenizedText {
  std::vector<SymbolToken> symbols;
  std::size_t symbol_count = 0;      // words + punctuation marks
  std::size_t word_count = 0;
  std::size_t terminator_count = 0;  // phrase terminators, no floor applied
  std::size_t letter_count = 0;      // characters inside words, apostrophes excluded
};

// Phrase terminators: . : ; ? ! and the ellipsis.
bool is_phrase_terminator(std::string_view mark);

// Splits on whitespace and punctuation. Words are case-folded, digits count
// as words, an apostrophe between two word characters stays in the word,
// hyphens and dashes split. Emitted marks: . , ; : ? ! … ( ) " ' — - ¡ ¿
// ("..." and "…" both become one "…", "--" becomes "—"). Other symbols are
// separators and are dropped. `raw` must be valid UTF-8.
TokenizedText tokenize(std::string_view raw, Language language);

// Number of phrases, with a floor of one for any text that has words.
std::size_t count_phrases(const TokenizedText& text);

// Syllable estimate from the character count: letters / chars_per_syllable.
double estimate_syllables(const TokenizedText& text, double chars_per_syllable);
double estimate_syllables(std::size_t letter_count, double chars_per_syllable);

}  // namespace lexigauge
