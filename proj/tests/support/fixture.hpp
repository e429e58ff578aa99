#pragma once

#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <unistd.h>

#include "scout/scout.hpp"

namespace testing_support {

namespace fs = std::filesystem;

inline fs::path fixture_dir() { return fs::path(SCOUT_FIXTURE_DIR); }

inline std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const fs::path& p, const std::string& bytes) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << bytes;
}

inline std::string problem_text() { return read_file(fixture_dir() / "problem.txt"); }

inline scout::RunConfig fixture_config() { return scout::RunConfig::load(fixture_dir() / "config.json"); }

/// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    path_ = fs::temp_directory_path() /
            ("scout-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter.fetch_add(1)));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const fs::path& path() const { return path_; }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

/// Resources as the fixture config would load them.
inline scout::RunResources fixture_resources() { return scout::load_resources(fixture_config()); }

/// Semantic problem for the fixture statement with centroids computed.
inline scout::SemanticProblem fixture_problem(scout::RunResources& res) {
  scout::compute_centroids(res.taxonomy, *res.embedder);
  const auto profiles = scout::category_profiles(res.taxonomy);
  return res.llm->interpret(scout::make_problem(problem_text(), "fixture"),
                            scout::InterpretContext{*res.embedder, profiles});
}

}  // namespace testing_support
