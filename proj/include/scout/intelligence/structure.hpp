#pragma once

// Final structuring: the four sustainability x commercial buckets, the
// annotated taxonomy and the technology-player chart.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "scout/core/error.hpp"
#include "scout/core/taxonomy.hpp"
#include "scout/core/types.hpp"

namespace scout {

inline BucketKey bucket_of(const SolutionFragment& f) {
  return {f.sustainability->flag, f.commercially_validated() ? CommercialFlag::commercial : CommercialFlag::non_commercial};
}

inline void require_structurable(const SolutionFragment& f) {
  const char* missing = !f.sustainability ? "sustainability"
                        : !f.rank_score   ? "rank_score"
                        : !f.category     ? "category_path"
                                          : nullptr;
  if (missing) {
    throw Error(ErrorCode::pipeline_invariant, "fragment " + f.id + " reached structuring without " + missing);
  }
}

/// Category -> subcategory tree with per-node counts; leaves list fragment ids
/// in ranked order. An "Uncategorized" branch is appended only when used.
inline AnnotatedNode annotate_taxonomy(const std::vector<SolutionFragment>& ranked, const Taxonomy& taxonomy) {
  std::map<CategoryPath, std::vector<std::string>> by_path;
  for (const auto& f : ranked) by_path[*f.category].push_back(f.id);

  AnnotatedNode root{taxonomy.root().label, 0, {}, {}};
  auto add_category = [&](const std::string& label, const std::vector<std::string>& subs) {
    AnnotatedNode cat{label, 0, {}, {}};
    for (const auto& s : subs) {
      AnnotatedNode leaf{s, 0, {}, {}};
      if (auto it = by_path.find({label, s}); it != by_path.end()) leaf.fragment_ids = it->second;
      leaf.count = leaf.fragment_ids.size();
      cat.count += leaf.count;
      cat.children.push_back(std::move(leaf));
    }
    root.count += cat.count;
    root.children.push_back(std::move(cat));
  };
  for (const auto& c : taxonomy.categories()) {
    std::vector<std::string> subs;
    for (const auto& s : c.children) subs.push_back(s.label);
    add_category(c.label, subs);
  }
  const CategoryPath uncategorized{std::string(kUncategorized), std::string(kUncategorized)};
  if (by_path.count(uncategorized)) add_category(uncategorized.category, {uncategorized.subcategory});

  std::size_t placed = 0;
  for (const auto& c : root.children) placed += c.count;
  if (placed != ranked.size()) {
    throw Error(ErrorCode::pipeline_invariant, "fragments carry category paths outside the taxonomy");
  }
  return root;
}

/// One row per (company, category, year). Companies come from validation
/// evidence; volume counts the distinct supporting patents plus distinct
/// linked commercial records (products, or the bare company profile). Year
/// is the record's launch year, else the earliest supporting filing year,
/// else the founding year; rows without any year are omitted.
inline std::vector<PlayerChartRow> player_chart(const std::vector<SolutionFragment>& ranked,
                                                const std::vector<CommercialRecord>& kb,
                                                const std::map<std::string, PatentDocument>& patents) {
  std::map<std::string, const CommercialRecord*> records;
  for (const auto& r : kb) records.emplace(r.id, &r);

  struct Support {
    std::set<std::string> patents;
    std::set<std::string> records;
    std::optional<int> launch_year;
    std::optional<int> founding_year;
  };
  std::map<std::pair<std::string, std::string>, Support> support;  // (company, category)
  for (const auto& f : ranked) {
    if (!f.category) continue;
    for (const auto& e : f.validation) {
      const auto it = records.find(e.record_id);
      if (it == records.end()) continue;
      const CommercialRecord& r = *it->second;
      auto& s = support[{r.company_name, f.category->category}];
      s.records.insert(r.id);
      if (r.launch_year) s.launch_year = std::min(s.launch_year.value_or(*r.launch_year), *r.launch_year);
      if (r.founding_year) s.founding_year = std::min(s.founding_year.value_or(*r.founding_year), *r.founding_year);
      for (const auto& p : f.provenance) {
        if (p.kind == SourceKind::patent) s.patents.insert(p.source_id);
      }
    }
  }

  std::map<std::tuple<std::string, std::string, int>, int> rows;
  for (const auto& [key, s] : support) {
    std::optional<int> year = s.launch_year;
    if (!year) {
      for (const auto& id : s.patents) {
        const auto it = patents.find(id);
        if (it == patents.end()) continue;
        const int y = static_cast<int>(it->second.filing_date.year());
        year = std::min(year.value_or(y), y);
      }
    }
    if (!year) year = s.founding_year;
    if (!year) continue;
    rows[{key.first, key.second, *year}] += static_cast<int>(s.patents.size() + s.records.size());
  }
  std::vector<PlayerChartRow> out;
  for (const auto& [key, volume] : rows) {
    out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), volume});
  }
  std::sort(out.begin(), out.end(), [](const PlayerChartRow& a, const PlayerChartRow& b) {
    return std::tie(a.category, a.year, a.entity_name) < std::tie(b.category, b.year, b.entity_name);
  });
  return out;
}

inline StructuredOutput structure_outputs(const std::vector<SolutionFragment>& ranked, const Taxonomy& taxonomy,
                                          const std::vector<CommercialRecord>& kb,
                                          const std::map<std::string, PatentDocument>& patents,
                                          RunMetadata metadata) {
  for (const auto& f : ranked) require_structurable(f);
  StructuredOutput out;
  for (BucketKey key : kAllBuckets) out.buckets[key] = {};
  for (const auto& f : ranked) out.buckets[bucket_of(f)].push_back(f.id);
  out.taxonomy = annotate_taxonomy(ranked, taxonomy);
  out.player_chart = player_chart(ranked, kb, patents);
  out.run_metadata = std::move(metadata);
  return out;
}

}  // namespace scout
