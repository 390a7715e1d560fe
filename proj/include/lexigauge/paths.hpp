#pragma once

#include <filesystem>

namespace lexigauge {

// Directory holding the bundled presets: $LEXIGAUGE_PRESET_DIR when set,
// otherwise the data/ directory of the source tree.
std::filesystem::path preset_dir();

// Appendix fixtures: `<preset_dir>/reference` when it exists, else
// preset_dir() itself.
std::filesystem::path reference_dir();

}  // namespace lexigauge
