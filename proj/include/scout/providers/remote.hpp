#pragma once

// HTTP-backed providers. Wire contract (JSON, UTF-8), version "scout.llm.v1":
//
//   request:  {"schema_version": "scout.llm.v1", "capability": <name>, "input": <object>}
//   response: {"schema_version": "scout.llm.v1", "capability": <name>, "output": <value>}
//
// See docs/llm_wire.md for the per-capability input/output shapes. Remote
// providers declare themselves non-deterministic, and any transport or
// schema failure raises ProviderError; there is no fallback to the stub.

#include <atomic>
#include <mutex>
#include <string>
#include <string_view>

#include <httplib.h>

#include "scout/core/error.hpp"
#include "scout/core/serialization.hpp"
#include "scout/providers/embedding.hpp"
#include "scout/providers/llm.hpp"

namespace scout::remote {

inline constexpr std::string_view kWireVersion = "scout.llm.v1";

/// Number of outbound provider requests made by this process.
inline std::atomic<std::size_t>& call_counter() {
  static std::atomic<std::size_t> counter{0};
  return counter;
}
inline std::size_t remote_call_count() { return call_counter().load(); }

struct Endpoint {
  std::string base;  // scheme://host[:port]
  std::string path;

  static Endpoint parse(std::string_view url) {
    const auto scheme_end = url.find("://");
    if (scheme_end == std::string_view::npos || url.substr(0, scheme_end) != "http") {
      throw Error(ErrorCode::config, "provider endpoint must be an http:// URL: '" + std::string(url) + "'");
    }
    const auto path_start = url.find('/', scheme_end + 3);
    Endpoint e;
    e.base = std::string(url.substr(0, path_start));
    e.path = path_start == std::string_view::npos ? "/" : std::string(url.substr(path_start));
    return e;
  }
};

inline Json make_request(std::string_view capability, Json input) {
  return Json{{"schema_version", kWireVersion}, {"capability", capability}, {"input", std::move(input)}};
}

/// Validates a response body and returns its "output" member.
inline Json parse_response(std::string_view capability, std::string_view body) {
  Json j;
  try {
    j = Json::parse(body);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::provider, std::string("malformed provider response: ") + e.what());
  }
  if (!j.is_object() || j.value("schema_version", std::string()) != kWireVersion ||
      j.value("capability", std::string()) != capability || !j.contains("output")) {
    throw Error(ErrorCode::provider, "provider response does not match wire contract for '" +
                                         std::string(capability) + "'");
  }
  return j.at("output");
}

class HttpTransport {
 public:
  HttpTransport(std::string endpoint_url, std::string api_key)
      : endpoint_(Endpoint::parse(endpoint_url)), api_key_(std::move(api_key)) {}

  Json call(std::string_view capability, Json input) const {
    const std::string body = make_request(capability, std::move(input)).dump();
    call_counter().fetch_add(1);
    httplib::Result result;
    {
      std::lock_guard lock(mutex_);
      httplib::Client client(endpoint_.base);
      client.set_connection_timeout(10);
      client.set_read_timeout(120);
      httplib::Headers headers;
      if (!api_key_.empty()) headers.emplace("Authorization", "Bearer " + api_key_);
      result = client.Post(endpoint_.path, headers, body, "application/json");
    }
    if (!result) {
      throw Error(ErrorCode::provider, "provider request failed: " + httplib::to_string(result.error()));
    }
    if (result->status != 200) {
      throw Error(ErrorCode::provider, "provider returned HTTP " + std::to_string(result->status));
    }
    return parse_response(capability, result->body);
  }

 private:
  Endpoint endpoint_;
  std::string api_key_;
  mutable std::mutex mutex_;
};

class HttpLlmProvider final : public LlmProvider {
 public:
  HttpLlmProvider(std::string endpoint_url, std::string api_key)
      : transport_(std::move(endpoint_url), std::move(api_key)) {}

  std::string name() const override { return "http"; }
  std::set<Capability> capabilities() const override {
    return {Capability::interpret, Capability::variants, Capability::fragments, Capability::normalize};
  }
  bool deterministic() const override { return false; }

  SemanticProblem interpret(const ProblemStatement& problem,
                            const InterpretContext& context) const override {
    Json categories = Json::array();
    for (const auto& c : context.categories) categories.push_back(c.label);
    const Json out = transport_.call("interpret", Json{{"text", problem.text}, {"categories", categories}});
    SemanticProblem sp;
    sp.source_id = problem.id;
    try {
      sp.intent = out.at("intent").get<std::string>();
      for (const auto& k : out.at("keywords")) sp.keywords.push_back(text::to_lower(k.get<std::string>()));
      sp.keywords = dedupe_terms(std::move(sp.keywords));
      sp.functional_requirements = out.at("functional_requirements").get<std::vector<std::string>>();
      sp.domain_context = out.at("domain_context").get<std::string>();
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::provider, std::string("interpret output: ") + e.what());
    }
    sp.embedding = context.embedder.embed(problem.text);
    return sp;
  }

  std::vector<QuerySpec> variants(const SemanticProblem& problem, std::size_t count) const override {
    const Json out = transport_.call(
        "variants", Json{{"keywords", problem.keywords}, {"domain_context", problem.domain_context},
                         {"intent", problem.intent}, {"count", count}});
    std::vector<QuerySpec> specs;
    try {
      for (const auto& v : out) {
        QuerySpec q;
        for (const auto& t : v.at("terms")) q.terms.push_back(text::to_lower(t.get<std::string>()));
        q.terms = dedupe_terms(std::move(q.terms));
        q.rationale = v.value("rationale", std::string("provider variant"));
        q.variant_index = specs.size() + 1;
        if (!q.terms.empty()) specs.push_back(std::move(q));
      }
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::provider, std::string("variants output: ") + e.what());
    }
    return specs;
  }

  std::vector<std::string> fragments(const PatentDocument& doc) const override {
    const Json out = transport_.call(
        "fragments", Json{{"canonical_id", doc.canonical_id}, {"title", doc.title},
                          {"claims", doc.claims}, {"description", doc.description}});
    try {
      return out.get<std::vector<std::string>>();
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::provider, std::string("fragments output: ") + e.what());
    }
  }

  NormalizedCompany normalize(const CompanyEvidence& evidence, int current_year) const override {
    const Json out = transport_.call(
        "normalize", Json{{"company_name", evidence.company_name},
                          {"product_name", opt_to_json(evidence.product_name)},
                          {"snippet", evidence.snippet},
                          {"product_summary", evidence.product_summary},
                          {"specs", specs_to_json(evidence.specs)},
                          {"caption", evidence.caption},
                          {"current_year", current_year}});
    NormalizedCompany n;
    try {
      n.company_name = out.at("company_name").get<std::string>();
      n.product_name = opt_from_json<std::string>(out, "product_name");
      n.country = opt_from_json<std::string>(out, "country");
      n.founding_year = opt_from_json<int>(out, "founding_year");
      n.funding_status = opt_from_json<std::string>(out, "funding_status");
      n.launch_year = opt_from_json<int>(out, "launch_year");
      n.description = out.at("description").get<std::string>();
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::provider, std::string("normalize output: ") + e.what());
    }
    return n;
  }

 private:
  HttpTransport transport_;
};

class HttpEmbeddingProvider final : public EmbeddingProvider {
 public:
  HttpEmbeddingProvider(std::string endpoint_url, std::string api_key)
      : transport_(std::move(endpoint_url), std::move(api_key)) {}

  std::string name() const override { return "http"; }
  std::size_t dimension() const override { return kEmbeddingDim; }
  bool deterministic() const override { return false; }

  Vector embed(std::string_view input) const override {
    const Json out = transport_.call("embed", Json{{"text", std::string(input)}, {"dimension", kEmbeddingDim}});
    Vector v;
    try {
      v = out.get<Vector>();
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::provider, std::string("embed output: ") + e.what());
    }
    if (v.size() != kEmbeddingDim) {
      throw Error(ErrorCode::dimension, "remote embedding has dimension " + std::to_string(v.size()));
    }
    return normalized(v);
  }

 private:
  HttpTransport transport_;
};

}  // namespace scout::remote
