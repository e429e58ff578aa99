#pragma once

// Run directory: one canonical JSON file per artifact, each written to a
// temporary name and renamed into place.

#include <array>
#include <filesystem>
#include <fstream>
#include <string>
#include <system_error>

#include "scout/core/error.hpp"
#include "scout/core/serialization.hpp"

namespace scout {

inline constexpr std::array<std::string_view, 10> kArtifactNames = {
    "config",    "semantic_problem", "patents_raw", "patents_curated",   "dedup_report",
    "commercial_kb", "fragments",    "clusters",    "structured_output", "run_state"};

inline std::string artifact_file(std::string_view name) { return std::string(name) + ".json"; }

class RunDirectory {
 public:
  /// Creates `root/run_id`; an existing directory is a RunIdConflict.
  static RunDirectory create(const std::filesystem::path& root, const std::string& run_id) {
    if (run_id.empty() || run_id.find('/') != std::string::npos || run_id == "." || run_id == "..") {
      throw Error(ErrorCode::invalid_input, "invalid run id '" + run_id + "'");
    }
    std::error_code ec;
    std::filesystem::create_directories(root, ec);
    if (ec) throw Error(ErrorCode::persist, "cannot create " + root.string() + ": " + ec.message());
    const auto dir = root / run_id;
    if (!std::filesystem::create_directory(dir, ec)) {
      if (!ec) throw Error(ErrorCode::run_id_conflict, "run directory already exists: " + dir.string());
      throw Error(ErrorCode::persist, "cannot create " + dir.string() + ": " + ec.message());
    }
    return RunDirectory(dir);
  }

  /// Opens an existing run directory for reading.
  static RunDirectory open(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) throw Error(ErrorCode::persist, "no run directory at " + dir.string());
    return RunDirectory(dir);
  }

  const std::filesystem::path& path() const { return dir_; }
  std::filesystem::path file(std::string_view name) const { return dir_ / artifact_file(name); }
  bool has(std::string_view name) const { return std::filesystem::exists(file(name)); }

  void write(std::string_view name, const Json& payload) const { write_bytes(name, canonical_dump(payload)); }

  void write_bytes(std::string_view name, const std::string& bytes) const {
    const auto target = file(name);
    auto tmp = target;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
      out.flush();
      if (!out) throw Error(ErrorCode::persist, "cannot write " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) throw Error(ErrorCode::persist, "cannot move " + tmp.string() + " into place: " + ec.message());
  }

  std::string read_bytes(std::string_view name) const {
    std::ifstream in(file(name), std::ios::binary);
    if (!in) throw Error(ErrorCode::persist, "missing artifact " + file(name).string());
    return std::string(std::istreambuf_iterator<char>(in), {});
  }

  Json read(std::string_view name) const {
    try {
      return Json::parse(read_bytes(name));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::parse, "artifact " + file(name).string() + ": " + e.what());
    }
  }

 private:
  explicit RunDirectory(std::filesystem::path dir) : dir_(std::move(dir)) {}
  std::filesystem::path dir_;
};

}  // namespace scout
