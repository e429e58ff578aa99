#pragma once

// JSON mapping for domain types plus the canonical writer used for every
// persisted artifact and API payload: keys sorted, two-space indentation,
// reals printed with exactly 9 significant digits ("%.9g").

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "scout/core/error.hpp"
#include "scout/core/types.hpp"
#include "scout/providers/vector.hpp"

namespace scout {

using Json = nlohmann::json;

inline constexpr std::string_view kSchemaVersion = "scout.v1";

namespace detail {

inline void write_real(std::string& out, double v) {
  if (!std::isfinite(v)) throw Error(ErrorCode::persist, "non-finite real in canonical output");
  if (v == 0.0) v = 0.0;  // folds -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  out.append(buf);
}

inline void write_canonical(std::string& out, const Json& j, int depth) {
  const auto indent = [&](int d) { out.append(static_cast<std::size_t>(2 * d), ' '); };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out.append("{}");
        return;
      }
      out.append("{\n");
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out.append(",\n");
        first = false;
        indent(depth + 1);
        out.append(Json(it.key()).dump(-1, ' ', false, Json::error_handler_t::strict));
        out.append(": ");
        write_canonical(out, it.value(), depth + 1);
      }
      out.push_back('\n');
      indent(depth);
      out.push_back('}');
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out.append("[]");
        return;
      }
      const bool scalars = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_number(); });
      if (scalars) {
        out.push_back('[');
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out.append(", ");
          write_canonical(out, j[i], depth + 1);
        }
        out.push_back(']');
        return;
      }
      out.append("[\n");
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out.append(",\n");
        indent(depth + 1);
        write_canonical(out, j[i], depth + 1);
      }
      out.push_back('\n');
      indent(depth);
      out.push_back(']');
      return;
    }
    case Json::value_t::number_float:
      write_real(out, j.get<double>());
      return;
    default:
      out.append(j.dump(-1, ' ', false, Json::error_handler_t::strict));
      return;
  }
}

}  // namespace detail

/// Canonical, byte-stable serialization (trailing newline included).
inline std::string canonical_dump(const Json& j) {
  std::string out;
  detail::write_canonical(out, j, 0);
  out.push_back('\n');
  return out;
}

template <class T>
Json opt_to_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <class T>
std::optional<T> opt_from_json(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

// ---------------------------------------------------------------------------
// Enums

template <class E, std::size_t N>
E enum_from_string(std::string_view s, const E (&values)[N], const char* what) {
  for (E v : values) {
    if (to_string(v) == s) return v;
  }
  throw Error(ErrorCode::parse, std::string("unknown ") + what + " '" + std::string(s) + "'");
}

inline constexpr AgentKind kAgentKinds[] = {AgentKind::market, AgentKind::product, AgentKind::competitor};
inline constexpr SourceKind kSourceKinds[] = {SourceKind::patent, SourceKind::commercial, SourceKind::web};
inline constexpr SustainabilityFlag kSustainabilityFlags[] = {SustainabilityFlag::sustainable,
                                                              SustainabilityFlag::traditional};
inline constexpr LinkKind kLinkKinds[] = {LinkKind::name_match, LinkKind::similarity};
inline constexpr SignalKind kSignalKinds[] = {SignalKind::launch_year, SignalKind::funding_round};

// ---------------------------------------------------------------------------
// Value types

inline void to_json(Json& j, const Vector& v) { j = v.values(); }
inline void from_json(const Json& j, Vector& v) { v = Vector(j.get<std::vector<double>>()); }

inline void to_json(Json& j, const SemanticProblem& sp) {
  j = Json{{"source_id", sp.source_id},
           {"intent", sp.intent},
           {"keywords", sp.keywords},
           {"functional_requirements", sp.functional_requirements},
           {"domain_context", sp.domain_context},
           {"embedding", sp.embedding}};
}
inline void from_json(const Json& j, SemanticProblem& sp) {
  sp.source_id = j.at("source_id").get<std::string>();
  sp.intent = j.at("intent").get<std::string>();
  sp.keywords = j.at("keywords").get<std::vector<std::string>>();
  sp.functional_requirements = j.at("functional_requirements").get<std::vector<std::string>>();
  sp.domain_context = j.at("domain_context").get<std::string>();
  sp.embedding = j.at("embedding").get<Vector>();
}

inline void to_json(Json& j, const EntityTag& t) {
  j = Json{{"surface", t.surface},
           {"category", std::string(to_string(t.category))},
           {"span", {t.begin, t.end}},
           {"field", t.field}};
}
inline void from_json(const Json& j, EntityTag& t) {
  t.surface = j.at("surface").get<std::string>();
  t.category = entity_category_from_string(j.at("category").get<std::string>());
  t.begin = j.at("span").at(0).get<std::size_t>();
  t.end = j.at("span").at(1).get<std::size_t>();
  t.field = j.at("field").get<std::string>();
}

inline void to_json(Json& j, const PatentDocument& d) {
  j = Json{{"raw_id", d.raw_id},
           {"canonical_id", d.canonical_id},
           {"title", d.title},
           {"abstract", d.abstract},
           {"claims", d.claims},
           {"description", d.description},
           {"inventors", d.inventors},
           {"applicants", d.applicants},
           {"filing_date", format_date(d.filing_date)},
           {"forward_citations", d.forward_citations},
           {"cited_ids", d.cited_ids},
           {"entity_tags", d.entity_tags},
           {"source", d.source}};
}
inline void from_json(const Json& j, PatentDocument& d) {
  d.raw_id = j.at("raw_id").get<std::string>();
  d.canonical_id = j.at("canonical_id").get<std::string>();
  d.title = j.at("title").get<std::string>();
  d.abstract = j.at("abstract").get<std::string>();
  d.claims = j.at("claims").get<std::string>();
  d.description = j.at("description").get<std::string>();
  d.inventors = j.at("inventors").get<std::vector<std::string>>();
  d.applicants = j.at("applicants").get<std::vector<std::string>>();
  d.filing_date = parse_date(j.at("filing_date").get<std::string>());
  d.forward_citations = j.at("forward_citations").get<std::int64_t>();
  d.cited_ids = j.at("cited_ids").get<std::vector<std::string>>();
  d.entity_tags = j.at("entity_tags").get<std::vector<EntityTag>>();
  d.source = j.at("source").get<std::string>();
}

inline void to_json(Json& j, const QuerySpec& q) {
  j = Json{{"terms", q.terms}, {"variant_index", q.variant_index}, {"rationale", q.rationale}};
}
inline void from_json(const Json& j, QuerySpec& q) {
  q.terms = j.at("terms").get<std::vector<std::string>>();
  q.variant_index = j.value("variant_index", std::size_t{0});
  q.rationale = j.value("rationale", std::string());
}

inline Json specs_to_json(const std::vector<std::pair<std::string, std::string>>& specs) {
  Json arr = Json::array();
  for (const auto& [k, v] : specs) arr.push_back(Json{{"key", k}, {"value", v}});
  return arr;
}
inline std::vector<std::pair<std::string, std::string>> specs_from_json(const Json& j) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& e : j) out.emplace_back(e.at("key").get<std::string>(), e.at("value").get<std::string>());
  return out;
}

inline void to_json(Json& j, const CommercialRecord& r) {
  j = Json{{"id", r.id},
           {"company_name", r.company_name},
           {"country", opt_to_json(r.country)},
           {"founding_year", opt_to_json(r.founding_year)},
           {"funding_status", opt_to_json(r.funding_status)},
           {"product_name", opt_to_json(r.product_name)},
           {"description", r.description},
           {"specs", specs_to_json(r.specs)},
           {"launch_year", opt_to_json(r.launch_year)},
           {"source_agent", std::string(to_string(r.source_agent))},
           {"source_refs", r.source_refs},
           {"embedding", r.embedding}};
}
inline void from_json(const Json& j, CommercialRecord& r) {
  r.id = j.at("id").get<std::string>();
  r.company_name = j.at("company_name").get<std::string>();
  r.country = opt_from_json<std::string>(j, "country");
  r.founding_year = opt_from_json<int>(j, "founding_year");
  r.funding_status = opt_from_json<std::string>(j, "funding_status");
  r.product_name = opt_from_json<std::string>(j, "product_name");
  r.description = j.at("description").get<std::string>();
  r.specs = specs_from_json(j.at("specs"));
  r.launch_year = opt_from_json<int>(j, "launch_year");
  r.source_agent = enum_from_string(j.at("source_agent").get<std::string>(), kAgentKinds, "agent");
  r.source_refs = j.at("source_refs").get<std::vector<std::string>>();
  r.embedding = j.at("embedding").get<Vector>();
}

inline void to_json(Json& j, const Provenance& p) {
  j = Json{{"source_kind", std::string(to_string(p.kind))}, {"source_id", p.source_id}};
}
inline void from_json(const Json& j, Provenance& p) {
  p.kind = enum_from_string(j.at("source_kind").get<std::string>(), kSourceKinds, "source kind");
  p.source_id = j.at("source_id").get<std::string>();
}

inline void to_json(Json& j, const SustainabilityScore& s) {
  j = Json{{"material_origin", s.material_origin},
           {"resource_intensity", s.resource_intensity},
           {"waste_generation", s.waste_generation},
           {"recyclability", s.recyclability},
           {"aggregate", s.aggregate},
           {"flag", std::string(to_string(s.flag))}};
}
inline void from_json(const Json& j, SustainabilityScore& s) {
  s.material_origin = j.at("material_origin").get<double>();
  s.resource_intensity = j.at("resource_intensity").get<double>();
  s.waste_generation = j.at("waste_generation").get<double>();
  s.recyclability = j.at("recyclability").get<double>();
  s.aggregate = j.at("aggregate").get<double>();
  s.flag = enum_from_string(j.at("flag").get<std::string>(), kSustainabilityFlags, "sustainability flag");
}

inline void to_json(Json& j, const AdoptionSignal& s) {
  j = Json{{"signal_kind", std::string(to_string(s.kind))}, {"value", s.value}};
}
inline void from_json(const Json& j, AdoptionSignal& s) {
  s.kind = enum_from_string(j.at("signal_kind").get<std::string>(), kSignalKinds, "signal kind");
  s.value = j.at("value").get<std::string>();
}

inline void to_json(Json& j, const ValidationEvidence& e) {
  j = Json{{"record_id", e.record_id},
           {"link_kind", std::string(to_string(e.link_kind))},
           {"link_score", e.link_score},
           {"adoption_signals", e.adoption_signals}};
}
inline void from_json(const Json& j, ValidationEvidence& e) {
  e.record_id = j.at("record_id").get<std::string>();
  e.link_kind = enum_from_string(j.at("link_kind").get<std::string>(), kLinkKinds, "link kind");
  e.link_score = j.at("link_score").get<double>();
  e.adoption_signals = j.at("adoption_signals").get<std::vector<AdoptionSignal>>();
}

inline void to_json(Json& j, const SolutionFragment& f) {
  j = Json{{"id", f.id},
           {"text", f.text},
           {"provenance", f.provenance},
           {"embedding", f.embedding},
           {"relevance", opt_to_json(f.relevance)},
           {"cluster_id", opt_to_json(f.cluster_id)},
           {"category_path", f.category ? Json{f.category->category, f.category->subcategory} : Json(nullptr)},
           {"sustainability", opt_to_json(f.sustainability)},
           {"validation", f.validation},
           {"rank_score", opt_to_json(f.rank_score)}};
}
inline void from_json(const Json& j, SolutionFragment& f) {
  f.id = j.at("id").get<std::string>();
  f.text = j.at("text").get<std::string>();
  f.provenance = j.at("provenance").get<std::vector<Provenance>>();
  f.embedding = j.at("embedding").get<Vector>();
  f.relevance = opt_from_json<double>(j, "relevance");
  f.cluster_id = opt_from_json<int>(j, "cluster_id");
  f.category.reset();
  if (j.contains("category_path") && !j.at("category_path").is_null()) {
    const auto& c = j.at("category_path");
    f.category = CategoryPath{c.at(0).get<std::string>(), c.at(1).get<std::string>()};
  }
  f.sustainability = opt_from_json<SustainabilityScore>(j, "sustainability");
  f.validation = j.at("validation").get<std::vector<ValidationEvidence>>();
  f.rank_score = opt_from_json<double>(j, "rank_score");
}

inline void to_json(Json& j, const AnnotatedNode& n) {
  j = Json{{"label", n.label}, {"count", n.count}, {"children", Json::array()}};
  for (const auto& c : n.children) j["children"].push_back(Json(c));
  if (n.children.empty()) j["fragment_ids"] = n.fragment_ids;
}
inline void from_json(const Json& j, AnnotatedNode& n) {
  n.label = j.at("label").get<std::string>();
  n.count = j.at("count").get<std::size_t>();
  n.fragment_ids = j.value("fragment_ids", std::vector<std::string>{});
  n.children.clear();
  for (const auto& c : j.at("children")) n.children.push_back(c.get<AnnotatedNode>());
}

inline void to_json(Json& j, const PlayerChartRow& r) {
  j = Json{{"entity_name", r.entity_name}, {"category", r.category}, {"year", r.year}, {"volume", r.volume}};
}
inline void from_json(const Json& j, PlayerChartRow& r) {
  r.entity_name = j.at("entity_name").get<std::string>();
  r.category = j.at("category").get<std::string>();
  r.year = j.at("year").get<int>();
  r.volume = j.at("volume").get<int>();
}

inline void to_json(Json& j, const RunMetadata& m) {
  j = Json{{"seed", m.seed}, {"config_digest", m.config_digest}, {"stages", m.stages}};
}
inline void from_json(const Json& j, RunMetadata& m) {
  m.seed = j.at("seed").get<std::uint64_t>();
  m.config_digest = j.at("config_digest").get<std::string>();
  m.stages = j.at("stages").get<std::vector<std::string>>();
}

inline void to_json(Json& j, const StructuredOutput& o) {
  Json buckets = Json::object();
  for (BucketKey key : kAllBuckets) {
    auto it = o.buckets.find(key);
    buckets[bucket_name(key)] = it == o.buckets.end() ? std::vector<std::string>{} : it->second;
  }
  j = Json{{"schema_version", kSchemaVersion},
           {"buckets", buckets},
           {"taxonomy", o.taxonomy},
           {"player_chart", o.player_chart},
           {"run_metadata", o.run_metadata}};
}
inline void from_json(const Json& j, StructuredOutput& o) {
  o.buckets.clear();
  for (BucketKey key : kAllBuckets) {
    o.buckets[key] = j.at("buckets").at(bucket_name(key)).get<std::vector<std::string>>();
  }
  o.taxonomy = j.at("taxonomy").get<AnnotatedNode>();
  o.player_chart = j.at("player_chart").get<std::vector<PlayerChartRow>>();
  o.run_metadata = j.at("run_metadata").get<RunMetadata>();
}

}  // namespace scout
