#include "lexigauge/types.hpp"

#include <algorithm>
#include <cctype>

#include <fmt/core.h>

#include "lexigauge/error.hpp"

namespace lexigauge {

namespace {

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

std::string_view to_code(Language lang) {
  return lang == Language::English ? "EN" : "ES";
}

std::string_view to_code(Genre genre) {
  return genre == Genre::Speech ? "S" : "N";
}

std::string_view to_code(Origin origin) {
  return origin == Origin::Original ? "O" : "T";
}

std::string_view to_string(Language lang) {
  return lang == Language::English ? "english" : "spanish";
}

Language parse_language(std::string_view text) {
  const auto s = lower(text);
  if (s == "en" || s == "english" || s == "eng") return Language::English;
  if (s == "es" || s == "spanish" || s == "esp") return Language::Spanish;
  throw ParseError(fmt::format("unknown language '{}'", text));
}

Genre parse_genre(std::string_view text) {
  const auto s = lower(text);
  if (s == "s" || s == "speech") return Genre::Speech;
  if (s == "n" || s == "novel" || s == "novelsegment") return Genre::NovelSegment;
  throw ParseError(fmt::format("unknown genre '{}'", text));
}

Origin parse_origin(std::string_view text) {
  const auto s = lower(text);
  if (s == "o" || s == "original") return Origin::Original;
  if (s == "t" || s == "translation") return Origin::Translation;
  throw ParseError(fmt::format("unknown origin '{}'", text));
}

bool parse_bool(std::string_view text) {
  const auto s = lower(text);
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw ParseError(fmt::format("expected true/false, got '{}'", text));
}

}  // namespace lexigauge
