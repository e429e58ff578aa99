#pragma once

// End-to-end run: intake, then the patent and commercial branches in
// parallel, then the core intelligence models in their fixed order. Every
// intermediate artifact lands in the run directory as soon as it exists.

#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "scout/commercial/agents.hpp"
#include "scout/commercial/knowledge_base.hpp"
#include "scout/commercial/web_client.hpp"
#include "scout/core/error.hpp"
#include "scout/core/serialization.hpp"
#include "scout/core/taxonomy.hpp"
#include "scout/intelligence/categorize.hpp"
#include "scout/intelligence/cluster.hpp"
#include "scout/intelligence/filter.hpp"
#include "scout/intelligence/fragmentation.hpp"
#include "scout/intelligence/integrate.hpp"
#include "scout/intelligence/rank.hpp"
#include "scout/intelligence/structure.hpp"
#include "scout/intelligence/sustainability.hpp"
#include "scout/intelligence/validate.hpp"
#include "scout/patent/connector.hpp"
#include "scout/patent/curate.hpp"
#include "scout/patent/dedup.hpp"
#include "scout/patent/ner.hpp"
#include "scout/patent/query.hpp"
#include "scout/pipeline/config.hpp"
#include "scout/pipeline/persist.hpp"
#include "scout/pipeline/run_state.hpp"
#include "scout/providers/factory.hpp"

namespace scout {

/// Everything a run reads besides the problem and the numeric config.
struct RunResources {
  Taxonomy taxonomy;
  Gazetteer gazetteer;
  SustainabilityLexicon lexicon;
  SynonymGraph synonyms;
  StopwordList stopwords = StopwordList::builtin();
  std::shared_ptr<const PatentConnector> connector;
  std::shared_ptr<const WebClient> web;
  std::shared_ptr<const EmbeddingProvider> embedder;
  std::shared_ptr<const LlmProvider> llm;
};

inline RunResources load_resources(const RunConfig& config) {
  const auto& p = config.paths;
  auto require = [](const std::filesystem::path& path, const char* what) {
    if (path.empty()) throw Error(ErrorCode::config, std::string("no ") + what + " path configured");
    if (!std::filesystem::exists(path)) throw Error(ErrorCode::config, std::string(what) + " not found: " + path.string());
  };
  require(p.corpus, "corpus");
  require(p.web_fixtures, "web fixture directory");
  require(p.taxonomy, "taxonomy");

  RunResources r;
  r.taxonomy = Taxonomy::load(p.taxonomy);
  if (!p.gazetteer.empty()) r.gazetteer = Gazetteer::load(p.gazetteer);
  if (!p.lexicon.empty()) r.lexicon = SustainabilityLexicon::load(p.lexicon);
  if (!p.synonyms.empty()) r.synonyms = SynonymGraph::load(p.synonyms);
  if (!p.stopwords.empty()) r.stopwords = StopwordList::load(p.stopwords);
  r.connector = std::make_shared<FixtureConnector>(FixtureConnector::from_file(p.corpus, r.synonyms));
  r.web = std::make_shared<FixtureWebClient>(FixtureWebClient::from_directory(p.web_fixtures));
  r.embedder = make_embedding_provider(config.providers);
  r.llm = make_llm_provider(config.providers, StubLlmOptions{r.synonyms, r.stopwords});
  return r;
}

/// Fine-grained stage names, in execution order.
inline const std::vector<std::string>& pipeline_stages() {
  static const std::vector<std::string> stages = {
      "intake",         "query_expansion", "retrieval",     "deduplication", "entity_tagging",
      "curation",       "market_agent",    "product_agent", "competitor_agent", "knowledge_base",
      "fragmentation",  "integration",     "clustering",    "filtering",     "categorization",
      "scoring",        "validation",      "ranking",       "structuring"};
  return stages;
}

struct StageFailure : std::runtime_error {
  StageFailure(std::string stage_name, std::string error_code, const std::string& message)
      : std::runtime_error(message), stage(std::move(stage_name)), code(std::move(error_code)) {}
  std::string stage;
  std::string code;
};

namespace detail {

template <class F>
auto run_stage(const std::string& stage, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const StageFailure&) {
    throw;
  } catch (const Error& e) {
    throw StageFailure(stage, std::string(to_string(e.code())), e.what());
  } catch (const std::exception& e) {
    throw StageFailure(stage, "internal", e.what());
  }
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline Json with_schema(Json j) {
  j["schema_version"] = kSchemaVersion;
  return j;
}

}  // namespace detail

struct PatentBranch {
  std::vector<QuerySpec> queries;
  std::vector<PatentDocument> raw;
  DedupResult dedup;
  std::vector<PatentDocument> curated;
  double seconds = 0.0;
};

struct CommercialBranch {
  MarketFindings market;
  ProductFindings product;
  CompetitorFindings competitor;
  std::vector<CommercialRecord> kb;
  double seconds = 0.0;
};

inline PatentBranch run_patent_branch(const SemanticProblem& sp, const RunConfig& config, const RunResources& res) {
  detail::Stopwatch clock;
  PatentBranch b;
  b.queries = detail::run_stage("query_expansion",
                                [&] { return generate_query_variants(sp, config.variant_count, *res.llm); });
  b.raw = detail::run_stage("retrieval", [&] { return retrieve(b.queries, *res.connector); });
  b.dedup = detail::run_stage("deduplication", [&] { return deduplicate(b.raw, config.dedup); });
  auto tagged = detail::run_stage("entity_tagging", [&] {
    auto docs = b.dedup.documents;
    for (auto& d : docs) d.entity_tags = tag_entities(d, res.gazetteer);
    return docs;
  });
  b.curated = detail::run_stage("curation", [&] {
    auto kept = curate(tagged, sp, config.thresholds.retrieval, *res.embedder);
    if (kept.empty()) throw Error(ErrorCode::empty_pipeline, "no patents survived retrieval and curation");
    return kept;
  });
  b.seconds = clock.seconds();
  return b;
}

inline CommercialBranch run_commercial_branch(const SemanticProblem& sp, const RunConfig& config,
                                              const RunResources& res) {
  detail::Stopwatch clock;
  CommercialBranch b;
  b.market = detail::run_stage("market_agent", [&] { return run_market_agent(sp, *res.web); });
  b.product = detail::run_stage("product_agent", [&] { return run_product_agent(sp, b.market, *res.web); });
  b.competitor = detail::run_stage("competitor_agent", [&] { return run_competitor_agent(sp, b.market, b.product); });
  const int current_year = static_cast<int>(config.reference_date.year());
  b.kb = detail::run_stage("knowledge_base", [&] {
    return build_commercial_kb(b.market, b.product, b.competitor, *res.llm, *res.embedder, current_year);
  });
  b.seconds = clock.seconds();
  return b;
}

struct RunResult {
  RunState state;
  std::optional<StructuredOutput> output;
  std::filesystem::path directory;
};

using StateObserver = std::function<void(const RunState&)>;

/// Runs the pipeline into `root/run_id`. Stage failures are reported through
/// the returned state (and the persisted run_state artifact), not thrown;
/// only a conflicting or unwritable run directory throws.
inline RunResult execute_run(const ProblemStatement& problem, const RunConfig& config,
                             const std::filesystem::path& root, const std::string& run_id,
                             const std::function<RunResources()>& resources_factory = {},
                             const StateObserver& observer = {}) {
  const RunDirectory dir = RunDirectory::create(root, run_id);
  RunResult result{RunState(run_id), std::nullopt, dir.path()};
  RunState& state = result.state;
  auto publish = [&] {
    dir.write("run_state", state.to_json());
    if (observer) observer(state);
  };
  publish();

  try {
    detail::Stopwatch intake_clock;
    state.advance(Phase::intake);
    publish();
    dir.write("config", detail::with_schema(config.to_json()));
    RunResources res = detail::run_stage("intake", [&] {
      config.check();
      RunResources r = resources_factory ? resources_factory() : load_resources(config);
      compute_centroids(r.taxonomy, *r.embedder);
      return r;
    });
    const SemanticProblem sp = detail::run_stage("intake", [&] {
      const auto profiles = category_profiles(res.taxonomy);
      return res.llm->interpret(problem, InterpretContext{*res.embedder, profiles});
    });
    dir.write("semantic_problem", detail::with_schema(Json(sp)));
    state.record_timing("intake", intake_clock.seconds());

    state.advance(Phase::patent);
    publish();
    auto patent_future = std::async(std::launch::async, [&] { return run_patent_branch(sp, config, res); });
    auto commercial_future = std::async(std::launch::async, [&] { return run_commercial_branch(sp, config, res); });
    std::optional<PatentBranch> patent;
    std::optional<CommercialBranch> commercial;
    std::exception_ptr patent_error;
    std::exception_ptr commercial_error;
    try {
      patent = patent_future.get();
    } catch (...) {
      patent_error = std::current_exception();
    }
    try {
      commercial = commercial_future.get();
    } catch (...) {
      commercial_error = std::current_exception();
    }
    if (patent_error) std::rethrow_exception(patent_error);
    dir.write("patents_raw", Json{{"schema_version", kSchemaVersion},
                                  {"queries", patent->queries},
                                  {"documents", patent->raw}});
    dir.write("dedup_report", detail::with_schema(Json(patent->dedup.report)));
    dir.write("patents_curated", Json{{"schema_version", kSchemaVersion}, {"documents", patent->curated}});
    state.record_timing("patent", patent->seconds);

    state.advance(Phase::commercial);
    publish();
    if (commercial_error) std::rethrow_exception(commercial_error);
    std::vector<std::string> warnings = commercial->market.warnings;
    warnings.insert(warnings.end(), commercial->product.warnings.begin(), commercial->product.warnings.end());
    dir.write("commercial_kb",
              Json{{"schema_version", kSchemaVersion}, {"records", commercial->kb}, {"warnings", warnings}});
    state.record_timing("commercial", commercial->seconds);

    detail::Stopwatch intelligence_clock;
    state.advance(Phase::intelligence);
    publish();

    std::map<std::string, PatentDocument> patents;
    for (const auto& d : patent->curated) patents.emplace(d.canonical_id, d);

    auto fragments = detail::run_stage("fragmentation", [&] {
      auto p = fragment_solutions(patent->curated, *res.llm, config.min_fragment_length);
      auto c = commercial_fragments(commercial->kb, config.min_fragment_length);
      return std::make_pair(std::move(p), std::move(c));
    });
    auto integrated = detail::run_stage("integration", [&] {
      return integrate(fragments.first, fragments.second, res.synonyms, *res.embedder, config.merge_threshold);
    });
    const ClusterResult clusters = detail::run_stage("clustering", [&] { return cluster_fragments(integrated, config.clustering); });
    {
      Json assignments = Json::object();
      for (std::size_t i = 0; i < integrated.size(); ++i) assignments[integrated[i].id] = clusters.assignments[i];
      dir.write("clusters", Json{{"schema_version", kSchemaVersion},
                                 {"k", clusters.k},
                                 {"assignments", assignments},
                                 {"centroids", clusters.centroids},
                                 {"objective", clusters.objective},
                                 {"objective_history", clusters.objective_history},
                                 {"iterations", clusters.iterations}});
    }
    FilterResult filtered = detail::run_stage(
        "filtering", [&] { return filter_fragments(std::move(integrated), sp, config.thresholds.relevance); });
    detail::run_stage("categorization", [&] {
      for (auto& f : filtered.retained) f.category = categorize(f, res.taxonomy, config.thresholds.category);
      return 0;
    });
    detail::run_stage("scoring", [&] {
      for (auto& f : filtered.retained) f.sustainability = score_sustainability(f, res.lexicon);
      return 0;
    });
    detail::run_stage("validation", [&] {
      const Validator validator(commercial->kb, config.thresholds.validation);
      for (auto& f : filtered.retained) f.validation = validator(f);
      return 0;
    });
    auto ranked = detail::run_stage("ranking", [&] {
      RankContext ctx;
      ctx.patents = &patents;
      ctx.now = config.reference_date;
      ctx.category_count = res.taxonomy.category_count();
      return rank(std::move(filtered.retained), config.weights, ctx);
    });
    dir.write("fragments",
              Json{{"schema_version", kSchemaVersion}, {"retained", ranked}, {"discarded", filtered.discarded}});
    StructuredOutput output = detail::run_stage("structuring", [&] {
      RunMetadata meta{config.seed, config.digest(), pipeline_stages()};
      return structure_outputs(ranked, res.taxonomy, commercial->kb, patents, std::move(meta));
    });
    dir.write("structured_output", Json(output));
    state.record_timing("intelligence", intelligence_clock.seconds());
    state.advance(Phase::complete);
    result.output = std::move(output);
  } catch (const StageFailure& f) {
    state.fail(f.stage, f.code, f.what());
  } catch (const Error& e) {
    state.fail(std::string(to_string(state.phase())), std::string(to_string(e.code())), e.what());
  } catch (const std::exception& e) {
    state.fail(std::string(to_string(state.phase())), "internal", e.what());
  }
  publish();
  return result;
}

/// Throwing convenience wrapper: returns the structured output or raises an
/// Error naming the failed stage.
inline StructuredOutput run_pipeline(const ProblemStatement& problem, const RunConfig& config,
                                     const std::filesystem::path& root, const std::string& run_id) {
  RunResult r = execute_run(problem, config, root, run_id);
  if (!r.output) {
    const auto& e = *r.state.error();
    throw Error(ErrorCode::run_failed, "stage " + e.stage + ": " + e.message);
  }
  return std::move(*r.output);
}

}  // namespace scout
