#pragma once

// Run configuration. JSON file format (every field optional, defaults shown
// in docs/formats.md); relative paths resolve against the file's directory.

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include <json.hpp>

#include "scout/core/error.hpp"
#include "scout/core/serialization.hpp"
#include "scout/core/types.hpp"
#include "scout/intelligence/categorize.hpp"
#include "scout/intelligence/cluster.hpp"
#include "scout/intelligence/filter.hpp"
#include "scout/intelligence/fragmentation.hpp"
#include "scout/intelligence/integrate.hpp"
#include "scout/intelligence/rank.hpp"
#include "scout/intelligence/validate.hpp"
#include "scout/patent/curate.hpp"
#include "scout/patent/dedup.hpp"
#include "scout/providers/factory.hpp"

namespace scout {

inline constexpr std::string_view kDefaultReferenceDate = "2025-06-30";
inline constexpr std::size_t kDefaultVariantCount = 12;

struct Thresholds {
  double retrieval = kDefaultRetrievalThreshold;
  double relevance = kDefaultRelevanceThreshold;
  double category = kDefaultCategoryThreshold;
  double validation = kDefaultValidationThreshold;
};

struct FixturePaths {
  std::filesystem::path corpus;
  std::filesystem::path web_fixtures;
  std::filesystem::path taxonomy;
  std::filesystem::path gazetteer;
  std::filesystem::path lexicon;
  std::filesystem::path synonyms;
  std::filesystem::path stopwords;  // empty: built-in list
};

struct RunConfig {
  std::uint64_t seed = 0;
  Date reference_date = parse_date(kDefaultReferenceDate);
  Thresholds thresholds;
  RankWeights weights;
  DedupParams dedup;
  double merge_threshold = kDefaultMergeThreshold;
  ClusterPolicy clustering;
  std::size_t variant_count = kDefaultVariantCount;
  std::size_t min_fragment_length = kMinFragmentLength;
  ProviderSelection providers;
  FixturePaths paths;

  void check() const {
    auto unit = [](double v, const char* name) {
      if (!(v >= 0.0 && v <= 1.0)) throw Error(ErrorCode::config, std::string(name) + " must lie in [0, 1]");
    };
    unit(thresholds.retrieval, "thresholds.retrieval");
    unit(thresholds.relevance, "thresholds.relevance");
    unit(thresholds.category, "thresholds.category");
    unit(thresholds.validation, "thresholds.validation");
    unit(dedup.jaccard_threshold, "dedup.jaccard_threshold");
    unit(merge_threshold, "integration.merge_threshold");
    try {
      weights.check();
    } catch (const Error& e) {
      throw Error(ErrorCode::config, e.what());
    }
    if (dedup.shingle_k < 1) throw Error(ErrorCode::config, "dedup.shingle_k must be >= 1");
    if (variant_count < 1) throw Error(ErrorCode::config, "variant_count must be >= 1");
    if (clustering.max_iter < 1) throw Error(ErrorCode::config, "clustering.max_iter must be >= 1");
    if (!(clustering.tol > 0.0)) throw Error(ErrorCode::config, "clustering.tol must be > 0");
    if (clustering.k && *clustering.k < 1) throw Error(ErrorCode::config, "clustering.k must be >= 1");
  }

  /// Everything that determines results. Paths and credentials are left out
  /// so the same run digests identically wherever the fixtures live.
  Json digest_json() const {
    return Json{{"seed", seed},
                {"reference_date", format_date(reference_date)},
                {"thresholds",
                 {{"retrieval", thresholds.retrieval},
                  {"relevance", thresholds.relevance},
                  {"category", thresholds.category},
                  {"validation", thresholds.validation}}},
                {"weights",
                 {{"novelty", weights.novelty}, {"readiness", weights.readiness}, {"adaptability", weights.adaptability}}},
                {"dedup", {{"shingle_k", dedup.shingle_k}, {"jaccard_threshold", dedup.jaccard_threshold}}},
                {"integration", {{"merge_threshold", merge_threshold}}},
                {"clustering",
                 {{"k", opt_to_json(clustering.k)}, {"max_iter", clustering.max_iter}, {"tol", clustering.tol}}},
                {"variant_count", variant_count},
                {"min_fragment_length", min_fragment_length},
                {"providers", {{"llm", providers.llm}, {"embedding", providers.embedding}}}};
  }

  std::string digest() const { return hex64(fnv1a64(canonical_dump(digest_json()))); }

  Json to_json() const {
    Json j = digest_json();
    j["providers"]["endpoint"] = providers.endpoint;  // the API key is never written out
    j["paths"] = {{"corpus", paths.corpus.string()},       {"web_fixtures", paths.web_fixtures.string()},
                  {"taxonomy", paths.taxonomy.string()},   {"gazetteer", paths.gazetteer.string()},
                  {"lexicon", paths.lexicon.string()},     {"synonyms", paths.synonyms.string()},
                  {"stopwords", paths.stopwords.string()}};
    return j;
  }

  static RunConfig from_json(const Json& j, const std::filesystem::path& base_dir = {}) {
    RunConfig c;
    try {
      c.seed = j.value("seed", c.seed);
      if (j.contains("reference_date")) c.reference_date = parse_date(j.at("reference_date").get<std::string>());
      if (j.contains("thresholds")) {
        const auto& t = j.at("thresholds");
        c.thresholds.retrieval = t.value("retrieval", c.thresholds.retrieval);
        c.thresholds.relevance = t.value("relevance", c.thresholds.relevance);
        c.thresholds.category = t.value("category", c.thresholds.category);
        c.thresholds.validation = t.value("validation", c.thresholds.validation);
      }
      if (j.contains("weights")) {
        const auto& w = j.at("weights");
        c.weights.novelty = w.value("novelty", c.weights.novelty);
        c.weights.readiness = w.value("readiness", c.weights.readiness);
        c.weights.adaptability = w.value("adaptability", c.weights.adaptability);
      }
      if (j.contains("dedup")) {
        c.dedup.shingle_k = j.at("dedup").value("shingle_k", c.dedup.shingle_k);
        c.dedup.jaccard_threshold = j.at("dedup").value("jaccard_threshold", c.dedup.jaccard_threshold);
      }
      if (j.contains("integration")) c.merge_threshold = j.at("integration").value("merge_threshold", c.merge_threshold);
      if (j.contains("clustering")) {
        const auto& k = j.at("clustering");
        c.clustering.k = opt_from_json<std::size_t>(k, "k");
        c.clustering.max_iter = k.value("max_iter", c.clustering.max_iter);
        c.clustering.tol = k.value("tol", c.clustering.tol);
      }
      c.variant_count = j.value("variant_count", c.variant_count);
      c.min_fragment_length = j.value("min_fragment_length", c.min_fragment_length);
      if (j.contains("providers")) {
        const auto& p = j.at("providers");
        c.providers.llm = p.value("llm", c.providers.llm);
        c.providers.embedding = p.value("embedding", c.providers.embedding);
        c.providers.endpoint = p.value("endpoint", c.providers.endpoint);
      }
      if (j.contains("paths")) {
        const auto& p = j.at("paths");
        auto path = [&](const char* key, std::filesystem::path& target) {
          const std::string v = p.value(key, std::string());
          if (v.empty()) return;
          const std::filesystem::path raw(v);
          target = raw.is_absolute() || base_dir.empty() ? raw : base_dir / raw;
        };
        path("corpus", c.paths.corpus);
        path("web_fixtures", c.paths.web_fixtures);
        path("taxonomy", c.paths.taxonomy);
        path("gazetteer", c.paths.gazetteer);
        path("lexicon", c.paths.lexicon);
        path("synonyms", c.paths.synonyms);
        path("stopwords", c.paths.stopwords);
      }
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::config, std::string("run config: ") + e.what());
    } catch (const Error& e) {
      if (e.code() == ErrorCode::config) throw;
      throw Error(ErrorCode::config, e.what());
    }
    c.check();
    return c;
  }

  static RunConfig load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::config, "cannot open run config " + path.string());
    Json j;
    try {
      j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::config, "run config " + path.string() + ": " + e.what());
    }
    return from_json(j, path.parent_path());
  }
};

}  // namespace scout
