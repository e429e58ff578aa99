#pragma once

// Multi-criteria ranking: novelty from filing age and citations, readiness
// from a coarse TRL mapping, adaptability from category diversity within a
// fragment's cluster.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "scout/core/error.hpp"
#include "scout/core/types.hpp"

namespace scout {

struct RankWeights {
  double novelty = 0.4;
  double readiness = 0.4;
  double adaptability = 0.2;

  void check() const {
    for (double w : {novelty, readiness, adaptability}) {
      if (!std::isfinite(w) || w < 0.0) throw Error(ErrorCode::invalid_input, "rank weights must be finite and >= 0");
    }
    if (novelty + readiness + adaptability == 0.0) {
      throw Error(ErrorCode::invalid_input, "rank weights must not all be zero");
    }
  }

  double sum() const { return novelty + readiness + adaptability; }
};

inline constexpr double kDaysPerYear = 365.25;
inline constexpr double kNoveltyDecayYears = 10.0;
inline constexpr double kNeutralNovelty = 0.5;

/// 0.5 * exp(-age/10) + 0.5 / (1 + citations).
inline double novelty_score(double age_years, std::int64_t forward_citations) {
  if (age_years < 0.0) throw Error(ErrorCode::invalid_input, "filing date lies in the future");
  if (forward_citations < 0) throw Error(ErrorCode::invalid_input, "negative citation count");
  const double recency = std::exp(-age_years / kNoveltyDecayYears);
  const double sparsity = 1.0 / (1.0 + static_cast<double>(forward_citations));
  return 0.5 * recency + 0.5 * sparsity;
}

inline double novelty_score(const PatentDocument& doc, const Date& now) {
  const auto days = (std::chrono::sys_days{now} - std::chrono::sys_days{doc.filing_date}).count();
  if (days < 0) throw Error(ErrorCode::invalid_input, "patent " + doc.canonical_id + " filed after the reference date");
  return novelty_score(static_cast<double>(days) / kDaysPerYear, doc.forward_citations);
}

/// 9 when commercially validated with a known launch year, 7 when validated
/// otherwise, 3 without commercial evidence.
inline int default_trl(const SolutionFragment& frag) {
  if (!frag.commercially_validated()) return 3;
  for (const auto& e : frag.validation) {
    for (const auto& s : e.adoption_signals) {
      if (s.kind == SignalKind::launch_year) return 9;
    }
  }
  return 7;
}

using TrlPolicy = std::function<int(const SolutionFragment&)>;

struct RankContext {
  const std::map<std::string, PatentDocument>* patents = nullptr;  // by canonical id
  Date now{};
  std::size_t category_count = 0;  // taxonomy categories
  TrlPolicy trl = default_trl;
};

struct RankComponents {
  double novelty = kNeutralNovelty;
  double readiness = 0.0;
  double adaptability = 0.0;
};

inline double combine(const RankComponents& c, const RankWeights& w) {
  return (w.novelty * c.novelty + w.readiness * c.readiness + w.adaptability * c.adaptability) / w.sum();
}

/// Per-fragment components, index-aligned with `frags`.
inline std::vector<RankComponents> rank_components(const std::vector<SolutionFragment>& frags,
                                                   const RankContext& ctx) {
  std::map<int, std::set<std::string>> cluster_categories;
  for (const auto& f : frags) {
    if (!f.cluster_id || !f.category || f.category->category == kUncategorized) continue;
    cluster_categories[*f.cluster_id].insert(f.category->category);
  }
  std::vector<RankComponents> out;
  for (const auto& f : frags) {
    RankComponents c;
    bool any_patent = false;
    double best = 0.0;
    for (const auto& p : f.provenance) {
      if (p.kind != SourceKind::patent || !ctx.patents) continue;
      const auto it = ctx.patents->find(p.source_id);
      if (it == ctx.patents->end()) continue;
      best = std::max(best, novelty_score(it->second, ctx.now));
      any_patent = true;
    }
    c.novelty = any_patent ? best : kNeutralNovelty;
    c.readiness = static_cast<double>(ctx.trl(f)) / 9.0;
    if (ctx.category_count > 1 && f.cluster_id) {
      const auto it = cluster_categories.find(*f.cluster_id);
      const double distinct = it == cluster_categories.end() ? 0.0 : static_cast<double>(it->second.size());
      c.adaptability = std::clamp((distinct - 1.0) / static_cast<double>(ctx.category_count - 1), 0.0, 1.0);
    }
    out.push_back(c);
  }
  return out;
}

/// Scores every fragment and sorts by score descending, then id ascending.
inline std::vector<SolutionFragment> rank(std::vector<SolutionFragment> frags, const RankWeights& weights,
                                          const RankContext& ctx) {
  weights.check();
  const auto components = rank_components(frags, ctx);
  for (std::size_t i = 0; i < frags.size(); ++i) frags[i].rank_score = combine(components[i], weights);
  std::sort(frags.begin(), frags.end(), [](const SolutionFragment& a, const SolutionFragment& b) {
    if (*a.rank_score != *b.rank_score) return *a.rank_score > *b.rank_score;
    return a.id < b.id;
  });
  return frags;
}

}  // namespace scout
