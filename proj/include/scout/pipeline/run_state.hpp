#pragma once

#include <map>
#include <optional>
#include <string>

#include "scout/core/error.hpp"
#include "scout/core/serialization.hpp"

namespace scout {

enum class Phase { pending, intake, patent, commercial, intelligence, complete, failed };

inline constexpr Phase kPhases[] = {Phase::pending,    Phase::intake,   Phase::patent, Phase::commercial,
                                    Phase::intelligence, Phase::complete, Phase::failed};

constexpr std::string_view to_string(Phase p) noexcept {
  switch (p) {
    case Phase::pending: return "pending";
    case Phase::intake: return "intake";
    case Phase::patent: return "patent";
    case Phase::commercial: return "commercial";
    case Phase::intelligence: return "intelligence";
    case Phase::complete: return "complete";
    case Phase::failed: return "failed";
  }
  return "";
}

struct RunError {
  std::string stage;
  std::string code;
  std::string message;

  friend bool operator==(const RunError&, const RunError&) = default;
};

/// Lifecycle of one run. Phases only move forward; failed is terminal and
/// always carries an error.
class RunState {
 public:
  RunState() = default;
  explicit RunState(std::string run_id) : run_id_(std::move(run_id)) {}

  const std::string& run_id() const { return run_id_; }
  Phase phase() const { return phase_; }
  const std::map<std::string, double>& timings() const { return timings_; }
  const std::optional<RunError>& error() const { return error_; }
  bool terminal() const { return phase_ == Phase::complete || phase_ == Phase::failed; }

  void advance(Phase next) {
    if (next == Phase::failed) throw Error(ErrorCode::pipeline_invariant, "use fail() to enter the failed phase");
    if (terminal() || static_cast<int>(next) <= static_cast<int>(phase_)) {
      throw Error(ErrorCode::pipeline_invariant, "illegal phase transition " + std::string(to_string(phase_)) +
                                                     " -> " + std::string(to_string(next)));
    }
    phase_ = next;
  }

  void fail(std::string stage, std::string code, std::string message) {
    if (terminal()) throw Error(ErrorCode::pipeline_invariant, "run already finished");
    if (message.empty()) message = "unknown failure";
    error_ = RunError{std::move(stage), std::move(code), std::move(message)};
    phase_ = Phase::failed;
  }

  void record_timing(const std::string& phase, double seconds) { timings_[phase] = seconds; }

  Json to_json() const {
    Json timings = Json::object();
    for (const auto& [k, v] : timings_) timings[k] = v;
    Json error = nullptr;
    if (error_) error = Json{{"stage", error_->stage}, {"code", error_->code}, {"message", error_->message}};
    return Json{{"schema_version", kSchemaVersion},
                {"run_id", run_id_},
                {"phase", std::string(to_string(phase_))},
                {"timings", timings},
                {"error", error}};
  }

  static RunState from_json(const Json& j) {
    RunState s(j.at("run_id").get<std::string>());
    s.phase_ = enum_from_string(j.at("phase").get<std::string>(), kPhases, "phase");
    for (auto it = j.at("timings").begin(); it != j.at("timings").end(); ++it) {
      s.timings_[it.key()] = it.value().get<double>();
    }
    if (!j.at("error").is_null()) {
      const auto& e = j.at("error");
      s.error_ = RunError{e.at("stage").get<std::string>(), e.at("code").get<std::string>(),
                          e.at("message").get<std::string>()};
    }
    if (s.phase_ == Phase::failed && !s.error_) throw Error(ErrorCode::parse, "failed run state without error");
    return s;
  }

  friend bool operator==(const RunState&, const RunState&) = default;

 private:
  std::string run_id_;
  Phase phase_ = Phase::pending;
  std::map<std::string, double> timings_;
  std::optional<RunError> error_;
};

}  // namespace scout
