#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <fmt/core.h>

#include "lexigauge/cli.hpp"

namespace testing {

inline std::filesystem::path data_dir() { return LEXIGAUGE_DATA_DIR; }
inline std::filesystem::path reference_dir() { return data_dir() / "reference"; }
inline std::filesystem::path test_data(const std::string& name) {
  return std::filesystem::path(LEXIGAUGE_TEST_DIR) / "data" / name;
}

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            fmt::format("lexigauge-{}-{}-{}", tag, static_cast<long>(::getpid()), counter++);
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

inline CliResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "lexigauge");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = lexigauge::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// Text of `length` words over exactly `diversity` distinct words: every
// word once, the remainder filled with the first word. No punctuation.
inline std::string text_with(std::size_t length, std::size_t diversity) {
  std::string text;
  text.reserve(length * 7);
  for (std::size_t i = 0; i < length; ++i) {
    text += i < diversity ? fmt::format("w{}", i) : std::string("w0");
    text += ' ';
  }
  return text;
}

// Text whose counts are given per word.
inline std::string text_from_counts(const std::vector<std::uint64_t>& counts) {
  std::string text;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    for (std::uint64_t c = 0; c < counts[k]; ++c) {
      text += fmt::format("w{} ", k);
    }
  }
  return text;
}

}  // namespace testing
