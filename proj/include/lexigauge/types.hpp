#pragma once

#include <string>
#include <string_view>

namespace lexigauge {

enum class Language { English, Spanish };
enum class Genre { Speech, NovelSegment };
enum class Origin { Original, Translation };

// Short codes used in manifests and fixtures: EN/ES, S/N, O/T.
std::string_view to_code(Language lang);
std::string_view to_code(Genre genre);
std::string_view to_code(Origin origin);

std::string_view to_string(Language lang);

// Accepts the short codes plus the long names ("english", "speech", ...),
// case-insensitively. Throws ParseError otherwise.
Language parse_language(std::string_view text);
Genre parse_genre(std::string_view text);
Origin parse_origin(std::string_view text);
bool parse_bool(std::string_view text);

}  // namespace lexigauge
