#pragma once

// Human-readable summary of a run directory.

#include <cstdio>
#include <sstream>
#include <string>

#include "scout/core/serialization.hpp"
#include "scout/pipeline/persist.hpp"
#include "scout/pipeline/run_state.hpp"

namespace scout {

struct RunReport {
  int exit_code = 0;
  std::string text;
};

inline constexpr std::size_t kReportTopN = 10;

inline RunReport report_run(const std::filesystem::path& run_dir) {
  const RunDirectory dir = RunDirectory::open(run_dir);
  const RunState state = RunState::from_json(dir.read("run_state"));
  std::ostringstream out;
  out << "run " << state.run_id() << ": " << to_string(state.phase()) << "\n";
  if (state.phase() == Phase::failed) {
    const auto& e = *state.error();
    out << "failed at stage " << e.stage << " (" << e.code << "): " << e.message << "\n";
    return {1, out.str()};
  }
  if (state.phase() != Phase::complete) {
    out << "run has not finished\n";
    return {1, out.str()};
  }

  const Json output = dir.read("structured_output");
  const Json fragments = dir.read("fragments");
  char line[512];
  out << "\nbuckets\n";
  std::snprintf(line, sizeof line, "  %-28s %6s\n", "bucket", "count");
  out << line;
  for (BucketKey key : kAllBuckets) {
    const auto name = bucket_name(key);
    std::snprintf(line, sizeof line, "  %-28s %6zu\n", name.c_str(), output.at("buckets").at(name).size());
    out << line;
  }

  out << "\ntop solutions\n";
  std::snprintf(line, sizeof line, "  %4s  %-28s %7s  %-12s %-14s %s\n", "rank", "fragment", "score", "flag",
                "commercial", "subcategory");
  out << line;
  std::size_t rank = 0;
  for (const auto& f : fragments.at("retained")) {
    if (rank == kReportTopN) break;
    const auto& path = f.at("category_path");
    const std::string sub = path.is_null() ? "-" : path.at(1).get<std::string>();
    std::snprintf(line, sizeof line, "  %4zu  %-28s %7.4f  %-12s %-14s %s\n", ++rank,
                  f.at("id").get<std::string>().c_str(), f.at("rank_score").get<double>(),
                  f.at("sustainability").at("flag").get<std::string>().c_str(),
                  f.at("validation").empty() ? "Non-Commercial" : "Commercial", sub.c_str());
    out << line;
  }
  if (rank == 0) out << "  (none)\n";
  return {0, out.str()};
}

}  // namespace scout
