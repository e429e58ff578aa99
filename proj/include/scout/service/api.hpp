#pragma once

// HTTP surface for run lifecycle and results. Request handling is a plain
// function of (method, path, body) so it can be exercised without sockets;
// bind() wires it onto an httplib server.
//
// Error payloads: {"schema_version", "error": {"code", "message", "detail"?}}
// with code from kApiErrorCodes.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <future>
#include <map>
#include <mutex>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include <httplib.h>

#include "scout/core/error.hpp"
#include "scout/core/serialization.hpp"
#include "scout/pipeline/config.hpp"
#include "scout/pipeline/persist.hpp"
#include "scout/pipeline/run.hpp"
#include "scout/pipeline/run_state.hpp"

namespace scout {

inline constexpr std::string_view kApiErrorCodes[] = {
    "invalid_problem", "malformed_body",     "run_not_found",    "run_in_progress", "run_failed",
    "fragment_not_found", "entity_not_found", "route_not_found", "internal_error"};

inline constexpr const char* kJsonContentType = "application/json; charset=utf-8";

struct ApiResponse {
  int status = 200;
  std::string body;
  std::string content_type = kJsonContentType;
};

inline ApiResponse api_json(int status, const Json& payload) { return {status, canonical_dump(payload)}; }

inline ApiResponse api_error(int status, std::string_view code, const std::string& message,
                             std::optional<Json> detail = std::nullopt) {
  Json err{{"code", code}, {"message", message}};
  if (detail) err["detail"] = *detail;
  ApiResponse r = api_json(status, Json{{"schema_version", kSchemaVersion}, {"error", err}});
  return r;
}

inline std::string format_run_id(std::size_t n) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "run-%06zu", n);
  return buf;
}

/// Builds payloads for a finished run from its persisted artifacts.
class RunView {
 public:
  explicit RunView(RunDirectory dir) : dir_(std::move(dir)) {}

  Json taxonomy(const std::string& run_id) const {
    return Json{{"schema_version", kSchemaVersion}, {"run_id", run_id},
                {"taxonomy", dir_.read("structured_output").at("taxonomy")}};
  }

  Json chart(const std::string& run_id) const {
    return Json{{"schema_version", kSchemaVersion}, {"run_id", run_id},
                {"rows", dir_.read("structured_output").at("player_chart")}};
  }

  std::optional<Json> solution_card(const std::string& run_id, const std::string& fragment_id) const {
    const Json fragments = dir_.read("fragments");
    const Json* frag = nullptr;
    for (const auto& f : fragments.at("retained")) {
      if (f.at("id") == fragment_id) frag = &f;
    }
    if (!frag) return std::nullopt;
    const auto records = records_by_id();

    Json patents = Json::array();
    for (const auto& p : frag->at("provenance")) {
      if (p.at("source_kind") == "patent") patents.push_back(p.at("source_id"));
    }
    Json players = Json::array();
    for (const auto& e : frag->at("validation")) {
      const auto it = records.find(e.at("record_id").get<std::string>());
      if (it == records.end()) continue;
      const Json& r = it->second;
      players.push_back(Json{{"record_id", r.at("id")},
                             {"company_name", r.at("company_name")},
                             {"product_name", r.at("product_name")},
                             {"link_kind", e.at("link_kind")},
                             {"link_score", e.at("link_score")},
                             {"adoption_signals", e.at("adoption_signals")}});
    }
    const bool patent_backed = !patents.empty();
    const bool validated = !frag->at("validation").empty();
    return Json{{"schema_version", kSchemaVersion},
                {"run_id", run_id},
                {"fragment_id", fragment_id},
                {"description", frag->at("text")},
                {"patent_validation",
                 {{"patent_backed", patent_backed},
                  {"label", patent_backed ? "Patent-Backed" : "No Patent"},
                  {"patents", patents}}},
                {"commercial_validation",
                 {{"validated", validated},
                  {"label", validated ? "Commercial" : "Non-Commercial"},
                  {"evidence", frag->at("validation")}}},
                {"major_players", players},
                {"category_path", frag->at("category_path")},
                {"sustainability", frag->at("sustainability")},
                {"rank_score", frag->at("rank_score")}};
  }

  std::optional<Json> entity(const std::string& run_id, const std::string& record_id) const {
    const auto records = records_by_id();
    const auto it = records.find(record_id);
    if (it == records.end()) return std::nullopt;
    const Json& r = it->second;
    Json linked = Json::array();
    const Json fragments = dir_.read("fragments");
    for (const auto& f : fragments.at("retained")) {
      for (const auto& e : f.at("validation")) {
        if (e.at("record_id") != record_id) continue;
        linked.push_back(Json{{"fragment_id", f.at("id")},
                              {"category_path", f.at("category_path")},
                              {"link_kind", e.at("link_kind")},
                              {"link_score", e.at("link_score")}});
      }
    }
    return Json{{"schema_version", kSchemaVersion},
                {"run_id", run_id},
                {"record_id", record_id},
                {"overview",
                 {{"name", r.at("company_name")},
                  {"founding_year", r.at("founding_year")},
                  {"country", r.at("country")},
                  {"funding_status", r.at("funding_status")}}},
                {"product_name", r.at("product_name")},
                {"launch_year", r.at("launch_year")},
                {"solution_relevance", {{"description", r.at("description")}, {"linked_fragments", linked}}},
                {"key_features", r.at("specs")},
                {"source_refs", r.at("source_refs")}};
  }

 private:
  std::map<std::string, Json> records_by_id() const {
    std::map<std::string, Json> out;
    const Json kb = dir_.read("commercial_kb");
    for (const auto& r : kb.at("records")) out.emplace(r.at("id").get<std::string>(), r);
    return out;
  }

  RunDirectory dir_;
};

struct ServiceOptions {
  std::filesystem::path data_dir;
  RunConfig base_config;
  /// Optional resource override used by tests; defaults to the config paths.
  std::function<RunResources()> resources_factory;
};

class ScoutService {
 public:
  explicit ScoutService(ServiceOptions options) : options_(std::move(options)) {
    std::error_code ec;
    std::filesystem::create_directories(options_.data_dir, ec);
    if (ec) throw Error(ErrorCode::persist, "cannot create data dir " + options_.data_dir.string());
    load_existing();
  }

  ~ScoutService() { wait_all(); }
  ScoutService(const ScoutService&) = delete;
  ScoutService& operator=(const ScoutService&) = delete;

  /// Blocks until every submitted run has finished.
  void wait_all() {
    std::vector<std::shared_future<void>> pending;
    {
      std::lock_guard lock(mutex_);
      for (auto& [id, entry] : runs_) {
        if (entry.task.valid()) pending.push_back(entry.task);
      }
    }
    for (auto& f : pending) f.wait();
  }

  std::optional<RunState> state(const std::string& run_id) const {
    std::lock_guard lock(mutex_);
    const auto it = runs_.find(run_id);
    if (it == runs_.end()) return std::nullopt;
    return it->second.state;
  }

  /// Starts a run; returns its id.
  std::string submit(const std::string& text, std::optional<std::uint64_t> seed = std::nullopt) {
    ProblemStatement problem = make_problem(text);
    RunConfig config = options_.base_config;
    if (seed) config.seed = *seed;
    std::lock_guard lock(mutex_);
    const std::string run_id = format_run_id(next_id_++);
    auto& entry = runs_[run_id];
    entry.state = RunState(run_id);
    entry.task = std::async(std::launch::async, [this, problem, config, run_id] {
                   try {
                     execute_run(problem, config, options_.data_dir, run_id, options_.resources_factory,
                                 [this, run_id](const RunState& s) {
                                   std::lock_guard inner(mutex_);
                                   runs_[run_id].state = s;
                                 });
                   } catch (const std::exception& e) {
                     std::lock_guard inner(mutex_);
                     RunState failed(run_id);
                     failed.fail("persist", "PersistError", e.what());
                     runs_[run_id].state = failed;
                   }
                 }).share();
    return run_id;
  }

  ApiResponse handle(const std::string& method, const std::string& path, const std::string& body) {
    try {
      return route(method, path, body);
    } catch (const std::exception& e) {
      return api_error(500, "internal_error", e.what());
    }
  }

  /// Registers every route on `server`.
  void bind(httplib::Server& server) {
    auto adapt = [this](const httplib::Request& req, httplib::Response& res) {
      const ApiResponse r = handle(req.method, req.path, req.body);
      res.status = r.status;
      res.set_content(r.body, r.content_type);
    };
    server.Get(R"(/.*)", adapt);
    server.Post(R"(/.*)", adapt);
  }

 private:
  struct Entry {
    RunState state;
    std::shared_future<void> task;
  };

  void load_existing() {
    std::size_t max_seen = 0;
    static const std::regex pattern(R"(run-(\d{6,}))");
    for (const auto& e : std::filesystem::directory_iterator(options_.data_dir)) {
      std::smatch m;
      const std::string name = e.path().filename().string();
      if (!e.is_directory() || !std::regex_match(name, m, pattern)) continue;
      max_seen = std::max<std::size_t>(max_seen, std::stoull(m[1].str()));
      RunState s(name);
      try {
        s = RunState::from_json(RunDirectory::open(e.path()).read("run_state"));
      } catch (const std::exception&) {
        s.fail("load", "ParseError", "unreadable run_state artifact");
      }
      if (!s.terminal()) s.fail(std::string(to_string(s.phase())), "Interrupted", "service stopped during the run");
      runs_[name].state = s;
    }
    next_id_ = max_seen + 1;
  }

  /// Returns an error response unless the run exists and completed.
  std::optional<ApiResponse> require_complete(const std::string& run_id) const {
    const auto s = state(run_id);
    if (!s) return api_error(404, "run_not_found", "no run " + run_id);
    if (s->phase() == Phase::failed) {
      return api_error(409, "run_failed", "run " + run_id + " failed", s->error() ? Json{{"stage", s->error()->stage},
                                                                                         {"message", s->error()->message}}
                                                                                   : Json());
    }
    if (s->phase() != Phase::complete) {
      return api_error(409, "run_in_progress", "run " + run_id + " is in phase " + std::string(to_string(s->phase())),
                       Json{{"phase", to_string(s->phase())}});
    }
    return std::nullopt;
  }

  RunView view(const std::string& run_id) const { return RunView(RunDirectory::open(options_.data_dir / run_id)); }

  ApiResponse route(const std::string& method, const std::string& path, const std::string& body) {
    static const std::regex run_re(R"(/v1/runs/([A-Za-z0-9_-]+))");
    static const std::regex sub_re(R"(/v1/runs/([A-Za-z0-9_-]+)/(output|taxonomy|chart))");
    static const std::regex card_re(R"(/v1/runs/([A-Za-z0-9_-]+)/solutions/([^/]+))");
    static const std::regex entity_re(R"(/v1/entities/([^/]+))");
    std::smatch m;

    if (method == "POST" && path == "/v1/problems") return post_problem(body);
    if (method != "GET") return api_error(404, "route_not_found", method + " " + path);

    if (std::regex_match(path, m, run_re)) {
      const auto s = state(m[1].str());
      if (!s) return api_error(404, "run_not_found", "no run " + m[1].str());
      return api_json(200, s->to_json());
    }
    if (std::regex_match(path, m, sub_re)) {
      const std::string run_id = m[1].str();
      if (auto err = require_complete(run_id)) return *err;
      const std::string what = m[2].str();
      if (what == "output") {
        return {200, RunDirectory::open(options_.data_dir / run_id).read_bytes("structured_output")};
      }
      if (what == "taxonomy") return api_json(200, view(run_id).taxonomy(run_id));
      return api_json(200, view(run_id).chart(run_id));
    }
    if (std::regex_match(path, m, card_re)) {
      const std::string run_id = m[1].str();
      if (auto err = require_complete(run_id)) return *err;
      auto card = view(run_id).solution_card(run_id, m[2].str());
      if (!card) return api_error(404, "fragment_not_found", "no retained fragment " + m[2].str() + " in " + run_id);
      return api_json(200, *card);
    }
    if (std::regex_match(path, m, entity_re)) return get_entity(m[1].str());
    return api_error(404, "route_not_found", method + " " + path);
  }

  ApiResponse post_problem(const std::string& body) {
    Json j;
    try {
      j = Json::parse(body);
    } catch (const nlohmann::json::exception& e) {
      return api_error(400, "malformed_body", std::string("body is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("text") || !j.at("text").is_string()) {
      return api_error(400, "malformed_body", "expected an object with a string field 'text'");
    }
    std::optional<std::uint64_t> seed;
    if (j.contains("seed")) {
      if (!j.at("seed").is_number_unsigned()) return api_error(400, "malformed_body", "'seed' must be a non-negative integer");
      seed = j.at("seed").get<std::uint64_t>();
    }
    std::string run_id;
    try {
      run_id = submit(j.at("text").get<std::string>(), seed);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::invalid_input) return api_error(400, "invalid_problem", e.what());
      throw;
    }
    return api_json(202, Json{{"schema_version", kSchemaVersion}, {"run_id", run_id},
                              {"status_url", "/v1/runs/" + run_id}});
  }

  /// Looks the record up in completed runs, newest first.
  ApiResponse get_entity(const std::string& record_id) {
    std::vector<std::string> complete;
    {
      std::lock_guard lock(mutex_);
      for (const auto& [id, entry] : runs_) {
        if (entry.state.phase() == Phase::complete) complete.push_back(id);
      }
    }
    for (auto it = complete.rbegin(); it != complete.rend(); ++it) {
      if (auto profile = view(*it).entity(*it, record_id)) return api_json(200, *profile);
    }
    return api_error(404, "entity_not_found", "no commercial record " + record_id);
  }

  ServiceOptions options_;
  mutable std::mutex mutex_;
  std::map<std::string, Entry> runs_;
  std::size_t next_id_ = 1;
};

}  // namespace scout
