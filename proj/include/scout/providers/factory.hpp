#pragma once

#include <cstdlib>
#include <memory>
#include <string>

#include "scout/core/error.hpp"
#include "scout/providers/embedding.hpp"
#include "scout/providers/llm.hpp"
#include "scout/providers/remote.hpp"

namespace scout {

/// Which providers a run uses. "stub" is the offline default.
struct ProviderSelection {
  std::string llm = "stub";
  std::string embedding = "stub";
  std::string endpoint;
  std::string api_key;

  friend bool operator==(const ProviderSelection&, const ProviderSelection&) = default;
};

/// Overlays SCOUT_LLM_PROVIDER, SCOUT_EMBED_PROVIDER, SCOUT_LLM_ENDPOINT and
/// SCOUT_LLM_API_KEY on top of `base`.
inline ProviderSelection selection_from_env(ProviderSelection base = {}) {
  auto read = [](const char* name, std::string& target) {
    if (const char* v = std::getenv(name); v != nullptr && *v != '\0') target = v;
  };
  read("SCOUT_LLM_PROVIDER", base.llm);
  read("SCOUT_EMBED_PROVIDER", base.embedding);
  read("SCOUT_LLM_ENDPOINT", base.endpoint);
  read("SCOUT_LLM_API_KEY", base.api_key);
  return base;
}

inline std::unique_ptr<EmbeddingProvider> make_embedding_provider(const ProviderSelection& sel) {
  if (sel.embedding == "stub") return std::make_unique<StubEmbeddingProvider>();
  if (sel.embedding == "http") {
    if (sel.endpoint.empty()) throw Error(ErrorCode::config, "http embedding provider needs an endpoint");
    return std::make_unique<remote::HttpEmbeddingProvider>(sel.endpoint, sel.api_key);
  }
  throw Error(ErrorCode::config, "unknown embedding provider '" + sel.embedding + "'");
}

inline std::unique_ptr<LlmProvider> make_llm_provider(const ProviderSelection& sel, StubLlmOptions stub_options) {
  if (sel.llm == "stub") return std::make_unique<StubLlmProvider>(std::move(stub_options));
  if (sel.llm == "http") {
    if (sel.endpoint.empty()) throw Error(ErrorCode::config, "http LLM provider needs an endpoint");
    return std::make_unique<remote::HttpLlmProvider>(sel.endpoint, sel.api_key);
  }
  throw Error(ErrorCode::config, "unknown LLM provider '" + sel.llm + "'");
}

}  // namespace scout
