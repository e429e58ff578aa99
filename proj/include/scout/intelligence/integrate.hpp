#pragma once

// Integration model: consolidates patent and commercial fragments by
// synonym normalization, embedding, and merging near-identical units.

#include <algorithm>
#include <string>
#include <vector>

#include "scout/core/text.hpp"
#include "scout/core/types.hpp"
#include "scout/core/union_find.hpp"
#include "scout/providers/embedding.hpp"
#include "scout/providers/synonym_graph.hpp"

namespace scout {

inline constexpr double kDefaultMergeThreshold = 0.95;

/// Output order: first provenance source id, then fragment id.
inline void sort_fragments(std::vector<SolutionFragment>& frags) {
  std::sort(frags.begin(), frags.end(), [](const SolutionFragment& a, const SolutionFragment& b) {
    const std::string& sa = a.provenance.empty() ? a.id : a.provenance.front().source_id;
    const std::string& sb = b.provenance.empty() ? b.id : b.provenance.front().source_id;
    return sa != sb ? sa < sb : a.id < b.id;
  });
}

/// Merges connected components of the "cosine >= threshold" graph. A merged
/// fragment keeps the smallest member id, the longest member text (ties to
/// the smallest id) together with that member's embedding, and the union of
/// all provenance entries.
inline std::vector<SolutionFragment> merge_near_duplicates(std::vector<SolutionFragment> frags,
                                                           double threshold = kDefaultMergeThreshold) {
  // Canonical order first so component ordering does not depend on input order.
  std::sort(frags.begin(), frags.end(),
            [](const SolutionFragment& a, const SolutionFragment& b) { return a.id < b.id; });
  const std::size_t n = frags.size();
  UnionFind uf(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (cosine_similarity(frags[i].embedding, frags[j].embedding) >= threshold) uf.unite(i, j);
    }
  }
  std::vector<SolutionFragment> out;
  for (const auto& members : uf.components()) {
    std::size_t text_from = members.front();
    std::vector<Provenance> provenance;
    for (std::size_t m : members) {
      const auto lm = text::length(frags[m].text);
      const auto lt = text::length(frags[text_from].text);
      if (lm > lt) text_from = m;
      provenance.insert(provenance.end(), frags[m].provenance.begin(), frags[m].provenance.end());
    }
    std::sort(provenance.begin(), provenance.end());
    provenance.erase(std::unique(provenance.begin(), provenance.end()), provenance.end());

    SolutionFragment merged = frags[members.front()];
    merged.text = frags[text_from].text;
    merged.embedding = frags[text_from].embedding;
    merged.provenance = std::move(provenance);
    out.push_back(std::move(merged));
  }
  sort_fragments(out);
  return out;
}

inline std::vector<SolutionFragment> integrate(const std::vector<SolutionFragment>& patent_frags,
                                               const std::vector<SolutionFragment>& commercial_frags,
                                               const SynonymGraph& graph, const EmbeddingProvider& embedder,
                                               double threshold = kDefaultMergeThreshold) {
  std::vector<SolutionFragment> all;
  all.reserve(patent_frags.size() + commercial_frags.size());
  for (const auto* list : {&patent_frags, &commercial_frags}) {
    for (auto f : *list) {
      f.text = graph.apply(f.text);
      f.embedding = embedder.embed(f.text);
      all.push_back(std::move(f));
    }
  }
  return merge_near_duplicates(std::move(all), threshold);
}

}  // namespace scout
