#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "scout/core/serialization.hpp"
#include "scout/core/types.hpp"
#include "scout/core/union_find.hpp"
#include "scout/patent/shingles.hpp"

namespace scout {

struct DedupParams {
  std::size_t shingle_k = 5;
  double jaccard_threshold = 0.85;
};

/// A record folded into another record with the same canonical id. The kept
/// side is the canonical id, the removed side is the dropped record's raw id.
struct ExactMerge {
  std::string kept_id;
  std::string removed_id;
  friend auto operator<=>(const ExactMerge&, const ExactMerge&) = default;
};

struct NearMerge {
  std::string kept_id;
  std::string removed_id;
  double jaccard = 0.0;  // between keeper and removed document
  friend auto operator<=>(const NearMerge&, const NearMerge&) = default;
};

struct DedupReport {
  std::vector<ExactMerge> exact_merges;
  std::vector<NearMerge> near_merges;
  friend bool operator==(const DedupReport&, const DedupReport&) = default;
};

struct DedupResult {
  std::vector<PatentDocument> documents;
  DedupReport report;
};

inline void to_json(Json& j, const DedupReport& r) {
  j = Json{{"exact_merges", Json::array()}, {"near_merges", Json::array()}};
  for (const auto& m : r.exact_merges) j["exact_merges"].push_back({{"kept_id", m.kept_id}, {"removed_id", m.removed_id}});
  for (const auto& m : r.near_merges) {
    j["near_merges"].push_back({{"kept_id", m.kept_id}, {"removed_id", m.removed_id}, {"jaccard", m.jaccard}});
  }
}
inline void from_json(const Json& j, DedupReport& r) {
  r = {};
  for (const auto& m : j.at("exact_merges")) r.exact_merges.push_back({m.at("kept_id"), m.at("removed_id")});
  for (const auto& m : j.at("near_merges")) {
    r.near_merges.push_back({m.at("kept_id"), m.at("removed_id"), m.at("jaccard").get<double>()});
  }
}

namespace detail {

/// Total order used to pick the surviving copy inside an exact-duplicate group.
inline auto exact_keeper_key(const PatentDocument& d) {
  return std::tie(d.filing_date, d.raw_id, d.title, d.abstract, d.claims, d.description);
}

inline void absorb(PatentDocument& keeper, const PatentDocument& other) {
  std::set<std::string> cited(keeper.cited_ids.begin(), keeper.cited_ids.end());
  cited.insert(other.cited_ids.begin(), other.cited_ids.end());
  keeper.cited_ids.assign(cited.begin(), cited.end());
  keeper.forward_citations = std::max(keeper.forward_citations, other.forward_citations);
}

}  // namespace detail

/// Two-pass deduplication.
///
/// Exact pass: one survivor per canonical id. Near pass: survivors whose
/// title + abstract word-shingle sets reach the Jaccard threshold are linked,
/// and each connected component of that similarity graph collapses onto the
/// member with the earliest filing date (ties: smaller canonical id). Keepers
/// absorb the union of cited ids and the maximum forward-citation count.
/// The result does not depend on input order: survivors are returned sorted
/// by canonical id and both merge lists are sorted.
inline DedupResult deduplicate(const std::vector<PatentDocument>& docs, const DedupParams& params = {}) {
  DedupResult result;

  std::map<std::string, std::vector<const PatentDocument*>> groups;
  for (const auto& d : docs) groups[d.canonical_id].push_back(&d);

  std::vector<PatentDocument> survivors;
  survivors.reserve(groups.size());
  for (auto& [id, members] : groups) {
    std::sort(members.begin(), members.end(), [](const PatentDocument* a, const PatentDocument* b) {
      return detail::exact_keeper_key(*a) < detail::exact_keeper_key(*b);
    });
    PatentDocument keeper = *members.front();
    for (std::size_t i = 1; i < members.size(); ++i) {
      detail::absorb(keeper, *members[i]);
      result.report.exact_merges.push_back({id, members[i]->raw_id});
    }
    survivors.push_back(std::move(keeper));
  }

  const std::size_t n = survivors.size();
  std::vector<std::set<std::string>> shingles(n);
  for (std::size_t i = 0; i < n; ++i) {
    shingles[i] = word_shingles(survivors[i].title + " " + survivors[i].abstract, params.shingle_k);
  }

  UnionFind components(n);
  if (params.jaccard_threshold <= 0.0) {
    for (std::size_t i = 1; i < n; ++i) components.unite(0, i);
  } else {
    // Only pairs sharing a shingle (or both empty) can reach a positive threshold.
    std::unordered_map<std::string, std::vector<std::size_t>> postings;
    std::vector<std::size_t> empties;
    for (std::size_t i = 0; i < n; ++i) {
      if (shingles[i].empty()) empties.push_back(i);
      for (const auto& s : shingles[i]) postings[s].push_back(i);
    }
    std::set<std::pair<std::size_t, std::size_t>> candidates;
    for (const auto& [s, ids] : postings) {
      for (std::size_t a = 0; a < ids.size(); ++a) {
        for (std::size_t b = a + 1; b < ids.size(); ++b) candidates.emplace(ids[a], ids[b]);
      }
    }
    for (std::size_t e = 1; e < empties.size(); ++e) components.unite(empties[0], empties[e]);
    for (const auto& [a, b] : candidates) {
      if (jaccard(shingles[a], shingles[b]) >= params.jaccard_threshold) components.unite(a, b);
    }
  }

  for (const auto& members : components.components()) {
    const std::size_t keeper = *std::min_element(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
      return std::tie(survivors[a].filing_date, survivors[a].canonical_id) <
             std::tie(survivors[b].filing_date, survivors[b].canonical_id);
    });
    PatentDocument kept = survivors[keeper];
    for (std::size_t m : members) {
      if (m == keeper) continue;
      detail::absorb(kept, survivors[m]);
      result.report.near_merges.push_back(
          {kept.canonical_id, survivors[m].canonical_id, jaccard(shingles[keeper], shingles[m])});
    }
    result.documents.push_back(std::move(kept));
  }

  std::sort(result.documents.begin(), result.documents.end(),
            [](const PatentDocument& a, const PatentDocument& b) { return a.canonical_id < b.canonical_id; });
  std::sort(result.report.exact_merges.begin(), result.report.exact_merges.end());
  std::sort(result.report.near_merges.begin(), result.report.near_merges.end());
  return result;
}

}  // namespace scout
