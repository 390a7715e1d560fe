#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace lexigauge::utf8 {

// Well-formed UTF-8: no overlongs, no surrogates, nothing above U+10FFFF.
bool is_valid(std::string_view bytes);

// Decodes the code point starting at `pos` and advances `pos` past it.
// Input must be valid UTF-8.
char32_t next(std::string_view bytes, std::size_t& pos);

void append(std::string& out, char32_t cp);

// Simple lower-case mapping for Latin, Greek and Cyrillic letters. Code
// points outside those blocks are returned unchanged.
char32_t to_lower(char32_t cp);

bool is_space(char32_t cp);

}  // namespace lexigauge::utf8
