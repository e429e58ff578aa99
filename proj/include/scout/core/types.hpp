#pragma once

// Shared domain values passed between pipeline stages.

#include <chrono>
#include <compare>
#include <cstdio>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scout/core/error.hpp"
#include "scout/core/text.hpp"
#include "scout/providers/fnv.hpp"
#include "scout/providers/vector.hpp"

namespace scout {

using Date = std::chrono::year_month_day;
using Timestamp = std::chrono::sys_seconds;

/// Parses an ISO-8601 calendar date (YYYY-MM-DD).
inline Date parse_date(std::string_view s) {
  int y = 0;
  unsigned m = 0;
  unsigned d = 0;
  char tail = 0;
  const std::string copy(s);
  if (copy.size() != 10 || std::sscanf(copy.c_str(), "%4d-%2u-%2u%c", &y, &m, &d, &tail) != 3) {
    throw Error(ErrorCode::parse, "invalid date '" + copy + "'");
  }
  Date date{std::chrono::year{y}, std::chrono::month{m}, std::chrono::day{d}};
  if (!date.ok()) throw Error(ErrorCode::parse, "invalid calendar date '" + copy + "'");
  return date;
}

inline std::string format_date(const Date& date) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(date.year()),
                static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()));
  return buf;
}

inline std::string format_timestamp(Timestamp ts) {
  const auto days = std::chrono::floor<std::chrono::days>(ts);
  const std::chrono::hh_mm_ss hms{ts - days};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%sT%02d:%02d:%02dZ", format_date(Date{days}).c_str(),
                static_cast<int>(hms.hours().count()), static_cast<int>(hms.minutes().count()),
                static_cast<int>(hms.seconds().count()));
  return buf;
}

inline Timestamp now_utc() {
  return std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now());
}

// ---------------------------------------------------------------------------
// Input layer

struct ProblemStatement {
  std::string id;
  std::string text;
  Timestamp submitted_at{};
};

/// Builds a problem statement; the text is NFC-normalized and must be
/// non-blank. The id defaults to a content hash.
ProblemStatement make_problem(std::string_view text, std::string id = {},
                              Timestamp submitted_at = now_utc());

struct SemanticProblem {
  std::string source_id;
  std::string intent;
  std::vector<std::string> keywords;
  std::vector<std::string> functional_requirements;
  std::string domain_context;
  Vector embedding;

  friend bool operator==(const SemanticProblem&, const SemanticProblem&) = default;
};

// ---------------------------------------------------------------------------
// Patent intelligence

enum class EntityCategory { inventor, applicant, material, system, method };

constexpr std::string_view to_string(EntityCategory c) noexcept {
  switch (c) {
    case EntityCategory::inventor: return "INVENTOR";
    case EntityCategory::applicant: return "APPLICANT";
    case EntityCategory::material: return "MATERIAL";
    case EntityCategory::system: return "SYSTEM";
    case EntityCategory::method: return "METHOD";
  }
  return "";
}

inline EntityCategory entity_category_from_string(std::string_view s) {
  for (auto c : {EntityCategory::inventor, EntityCategory::applicant, EntityCategory::material,
                 EntityCategory::system, EntityCategory::method}) {
    if (to_string(c) == s) return c;
  }
  throw Error(ErrorCode::config, "unknown entity category '" + std::string(s) + "'");
}

struct EntityTag {
  std::string surface;
  EntityCategory category = EntityCategory::material;
  std::size_t begin = 0;  // byte offsets into `field`
  std::size_t end = 0;
  std::string field;

  friend auto operator<=>(const EntityTag&, const EntityTag&) = default;
};

struct PatentDocument {
  std::string raw_id;
  std::string canonical_id;
  std::string title;
  std::string abstract;
  std::string claims;
  std::string description;
  std::vector<std::string> inventors;
  std::vector<std::string> applicants;
  Date filing_date{};
  std::int64_t forward_citations = 0;
  std::vector<std::string> cited_ids;
  std::vector<EntityTag> entity_tags;
  std::string source;

  friend bool operator==(const PatentDocument&, const PatentDocument&) = default;
};

struct QuerySpec {
  std::vector<std::string> terms;
  std::size_t variant_index = 0;
  std::string rationale;

  friend bool operator==(const QuerySpec&, const QuerySpec&) = default;
};

// ---------------------------------------------------------------------------
// Commercial intelligence

enum class AgentKind { market, product, competitor };

constexpr std::string_view to_string(AgentKind k) noexcept {
  switch (k) {
    case AgentKind::market: return "market";
    case AgentKind::product: return "product";
    case AgentKind::competitor: return "competitor";
  }
  return "";
}

/// Raw per-(company, product) evidence gathered by the agents, before the
/// `normalize` capability turns it into a CommercialRecord.
struct CompanyEvidence {
  std::string company_name;
  std::optional<std::string> product_name;
  std::string snippet;
  std::string product_summary;
  std::vector<std::pair<std::string, std::string>> specs;
  std::string caption;
  AgentKind source_agent = AgentKind::market;
  std::vector<std::string> source_refs;
};

/// Output of the `normalize` capability.
struct NormalizedCompany {
  std::string company_name;
  std::optional<std::string> product_name;
  std::optional<std::string> country;
  std::optional<int> founding_year;
  std::optional<std::string> funding_status;
  std::optional<int> launch_year;
  std::string description;
};

struct CommercialRecord {
  std::string id;
  std::string company_name;
  std::optional<std::string> country;
  std::optional<int> founding_year;
  std::optional<std::string> funding_status;
  std::optional<std::string> product_name;
  std::string description;
  std::vector<std::pair<std::string, std::string>> specs;
  std::optional<int> launch_year;
  AgentKind source_agent = AgentKind::market;
  std::vector<std::string> source_refs;
  Vector embedding;

  friend bool operator==(const CommercialRecord&, const CommercialRecord&) = default;
};

// ---------------------------------------------------------------------------
// Core intelligence

enum class SourceKind { patent, commercial, web };

constexpr std::string_view to_string(SourceKind k) noexcept {
  switch (k) {
    case SourceKind::patent: return "patent";
    case SourceKind::commercial: return "commercial";
    case SourceKind::web: return "web";
  }
  return "";
}

struct Provenance {
  SourceKind kind = SourceKind::patent;
  std::string source_id;

  friend auto operator<=>(const Provenance&, const Provenance&) = default;
};

enum class SustainabilityFlag { sustainable, traditional };

constexpr std::string_view to_string(SustainabilityFlag f) noexcept {
  return f == SustainabilityFlag::sustainable ? "Sustainable" : "Traditional";
}

struct SustainabilityScore {
  double material_origin = 0.5;
  double resource_intensity = 0.5;
  double waste_generation = 0.5;
  double recyclability = 0.5;
  double aggregate = 0.5;
  SustainabilityFlag flag = SustainabilityFlag::sustainable;

  /// Aggregate is the mean of the four criteria; Sustainable iff >= 0.5.
  static SustainabilityScore from_criteria(double origin, double resource, double waste,
                                           double recycle) {
    SustainabilityScore s{origin, resource, waste, recycle, 0.0, SustainabilityFlag::traditional};
    s.aggregate = (origin + resource + waste + recycle) / 4.0;
    s.flag = s.aggregate >= 0.5 ? SustainabilityFlag::sustainable : SustainabilityFlag::traditional;
    return s;
  }

  friend bool operator==(const SustainabilityScore&, const SustainabilityScore&) = default;
};

enum class LinkKind { name_match, similarity };
enum class SignalKind { launch_year, funding_round };

constexpr std::string_view to_string(LinkKind k) noexcept {
  return k == LinkKind::name_match ? "name_match" : "similarity";
}
constexpr std::string_view to_string(SignalKind k) noexcept {
  return k == SignalKind::launch_year ? "launch_year" : "funding_round";
}

struct AdoptionSignal {
  SignalKind kind = SignalKind::launch_year;
  std::string value;

  friend bool operator==(const AdoptionSignal&, const AdoptionSignal&) = default;
};

struct ValidationEvidence {
  std::string record_id;
  LinkKind link_kind = LinkKind::similarity;
  double link_score = 0.0;
  std::vector<AdoptionSignal> adoption_signals;

  friend bool operator==(const ValidationEvidence&, const ValidationEvidence&) = default;
};

struct CategoryPath {
  std::string category;
  std::string subcategory;

  friend auto operator<=>(const CategoryPath&, const CategoryPath&) = default;
};

inline constexpr std::string_view kUncategorized = "Uncategorized";

struct SolutionFragment {
  std::string id;
  std::string text;
  std::vector<Provenance> provenance;
  Vector embedding;
  std::optional<double> relevance;
  std::optional<int> cluster_id;
  std::optional<CategoryPath> category;
  std::optional<SustainabilityScore> sustainability;
  std::vector<ValidationEvidence> validation;
  std::optional<double> rank_score;

  bool commercially_validated() const { return !validation.empty(); }
  bool patent_backed() const {
    for (const auto& p : provenance) {
      if (p.kind == SourceKind::patent) return true;
    }
    return false;
  }

  friend bool operator==(const SolutionFragment&, const SolutionFragment&) = default;
};

// ---------------------------------------------------------------------------
// Structured output

enum class CommercialFlag { commercial, non_commercial };

constexpr std::string_view to_string(CommercialFlag f) noexcept {
  return f == CommercialFlag::commercial ? "Commercial" : "Non-Commercial";
}

struct BucketKey {
  SustainabilityFlag sustainability = SustainabilityFlag::sustainable;
  CommercialFlag commercial = CommercialFlag::commercial;

  friend auto operator<=>(const BucketKey&, const BucketKey&) = default;
};

/// Serialized bucket name, e.g. "sustainable_commercial".
inline std::string bucket_name(BucketKey key) {
  std::string out = key.sustainability == SustainabilityFlag::sustainable ? "sustainable" : "traditional";
  out += key.commercial == CommercialFlag::commercial ? "_commercial" : "_non_commercial";
  return out;
}

inline constexpr BucketKey kAllBuckets[] = {
    {SustainabilityFlag::sustainable, CommercialFlag::commercial},
    {SustainabilityFlag::sustainable, CommercialFlag::non_commercial},
    {SustainabilityFlag::traditional, CommercialFlag::commercial},
    {SustainabilityFlag::traditional, CommercialFlag::non_commercial},
};

struct AnnotatedNode {
  std::string label;
  std::size_t count = 0;
  std::vector<std::string> fragment_ids;  // leaves only
  std::vector<AnnotatedNode> children;

  friend bool operator==(const AnnotatedNode&, const AnnotatedNode&) = default;
};

struct PlayerChartRow {
  std::string entity_name;
  std::string category;
  int year = 0;
  int volume = 0;

  friend auto operator<=>(const PlayerChartRow&, const PlayerChartRow&) = default;
};

struct RunMetadata {
  std::uint64_t seed = 0;
  std::string config_digest;
  std::vector<std::string> stages;

  friend bool operator==(const RunMetadata&, const RunMetadata&) = default;
};

struct StructuredOutput {
  std::map<BucketKey, std::vector<std::string>> buckets;
  AnnotatedNode taxonomy;
  std::vector<PlayerChartRow> player_chart;
  RunMetadata run_metadata;

  friend bool operator==(const StructuredOutput&, const StructuredOutput&) = default;
};

// ---------------------------------------------------------------------------

inline ProblemStatement make_problem(std::string_view text, std::string id, Timestamp submitted_at) {
  std::string normalized = text::nfc(text);
  if (text::trim(normalized).empty()) {
    throw Error(ErrorCode::invalid_input, "problem text is empty");
  }
  if (id.empty()) id = "problem-" + hex64(fnv1a64(normalized)).substr(0, 12);
  return ProblemStatement{std::move(id), std::move(normalized), submitted_at};
}

}  // namespace scout
