#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace scout {

enum class ErrorCode {
  invalid_id,
  invalid_input,
  dimension,
  config,
  retrieval,
  agent,
  invalid_k,
  empty_pipeline,
  pipeline_invariant,
  persist,
  run_id_conflict,
  provider,
  parse,
  run_failed,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_id: return "InvalidId";
    case ErrorCode::invalid_input: return "InvalidInput";
    case ErrorCode::dimension: return "DimensionError";
    case ErrorCode::config: return "ConfigError";
    case ErrorCode::retrieval: return "RetrievalError";
    case ErrorCode::agent: return "AgentError";
    case ErrorCode::invalid_k: return "InvalidK";
    case ErrorCode::empty_pipeline: return "EmptyPipeline";
    case ErrorCode::pipeline_invariant: return "PipelineInvariantError";
    case ErrorCode::persist: return "PersistError";
    case ErrorCode::run_id_conflict: return "RunIdConflict";
    case ErrorCode::provider: return "ProviderError";
    case ErrorCode::parse: return "ParseError";
    case ErrorCode::run_failed: return "RunFailed";
  }
  return "Error";
}

/// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace scout
