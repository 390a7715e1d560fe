#include "lexigauge/tokenizer.hpp"

#include <optional>

#include <fmt/core.h>

#include "lexigauge/error.hpp"
#include "lexigauge/utf8.hpp"

namespace lexigauge {

namespace {

constexpr std::string_view kEllipsis = "…";
constexpr std::string_view kDash = "—";

bool is_word_char(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z') || (cp >= U'0' && cp <= U'9');
  }
  if (cp == 0xAA || cp == 0xB5 || cp == 0xBA) return true;  // ª µ º
  if (cp < 0xC0 || cp == 0xD7 || cp == 0xF7) return false;
  if (cp >= 0x2000 && cp <= 0x2BFF) return false;  // punctuation, symbols, arrows, math
  if (cp >= 0x3000 && cp <= 0x303F) return false;  // CJK punctuation
  if (cp >= 0xFE30 && cp <= 0xFE4F) return false;
  return !utf8::is_space(cp);
}

bool is_apostrophe(char32_t cp) { return cp == U'\'' || cp == 0x2019 || cp == 0x2018; }

// Normalized mark for a punctuation code point, or nothing when the code
// point is a plain separator. Periods are handled by the caller.
std::optional<std::string_view> punctuation_mark(char32_t cp) {
  switch (cp) {
    case U',': return ",";
    case U';': return ";";
    case U':': return ":";
    case U'?': return "?";
    case U'!': return "!";
    case U'(': return "(";
    case U')': return ")";
    case U'"': case 0x201C: case 0x201D: case 0x201E: case 0xAB: case 0xBB:
      return "\"";
    case U'\'': case 0x2018: case 0x2019:
      return "'";
    case 0x2014: case 0x2013: case 0x2015:
      return kDash;
    case U'-': case 0x2010: case 0x2011:
      return "-";
    case 0x2026: return kEllipsis;
    case 0xA1: return "¡";
    case 0xBF: return "¿";
    default: return std::nullopt;
  }
}

}  // namespace

bool is_phrase_terminator(std::string_view mark) {
  return mark == "." || mark == ":" || mark == ";" || mark == "?" || mark == "!" || mark == kEllipsis;
}

TokenizedText tokenize(std::string_view raw, Language /*language*/) {
  // Both languages share the terminator set and boundary rules today.
  std::vector<char32_t> cps;
  cps.reserve(raw.size());
  for (std::size_t pos = 0; pos < raw.size();) cps.push_back(utf8::next(raw, pos));

  TokenizedText out;
  auto emit_mark = [&](std::string_view mark) {
    out.symbols.push_back({std::string(mark), TokenKind::Punctuation});
    if (is_phrase_terminator(mark)) ++out.terminator_count;
  };

  std::size_t i = 0;
  const std::size_t n = cps.size();
  while (i < n) {
    const char32_t cp = cps[i];
    if (is_word_char(cp)) {
      std::string word;
      std::size_t letters = 0;
      while (i < n) {
        if (is_word_char(cps[i])) {
          utf8::append(word, utf8::to_lower(cps[i]));
          ++letters;
          ++i;
        } else if (is_apostrophe(cps[i]) && i + 1 < n && is_word_char(cps[i + 1])) {
          word += '\'';
          ++i;
        } else {
          break;
        }
      }
      out.symbols.push_back({std::move(word), TokenKind::Word});
      ++out.word_count;
      out.letter_count += letters;
      continue;
    }
    if (cp == U'.') {
      std::size_t run = 0;
      while (i < n && cps[i] == U'.') ++run, ++i;
      if (run >= 3) {
        emit_mark(kEllipsis);
      } else {
        for (std::size_t k = 0; k < run; ++k) emit_mark(".");
      }
      continue;
    }
    if (cp == U'-' && i + 1 < n && cps[i + 1] == U'-') {
      while (i < n && cps[i] == U'-') ++i;
      emit_mark(kDash);
      continue;
    }
    if (auto mark = punctuation_mark(cp)) emit_mark(*mark);
    ++i;
  }
  out.symbol_count = out.symbols.size();
  return out;
}

std::size_t count_phrases(const TokenizedText& text) {
  if (text.word_count == 0) return text.terminator_count;
  return text.terminator_count > 0 ? text.terminator_count : 1;
}

double estimate_syllables(std::size_t letter_count, double chars_per_syllable) {
  if (!(chars_per_syllable > 0)) {
    throw ParameterError(fmt::format("characters per syllable must be > 0, got {}", chars_per_syllable));
  }
  return static_cast<double>(letter_count) / chars_per_syllable;
}

double estimate_syllables(const TokenizedText& text, double chars_per_syllable) {
  return estimate_syllables(text.letter_count, chars_per_syllable);
}

}  // namespace lexigauge
