#include "lexigauge/paths.hpp"

#include <cstdlib>

namespace lexigauge {

std::filesystem::path preset_dir() {
  if (const char* env = std::getenv("LEXIGAUGE_PRESET_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  return LEXIGAUGE_DATA_DIR;
}

std::filesystem::path reference_dir() {
  const auto base = preset_dir();
  std::error_code ec;
  if (std::filesystem::is_directory(base / "reference", ec)) return base / "reference";
  return base;
}

}  // namespace lexigauge
