#pragma once

// Maps fragments onto the two-level taxonomy by nearest centroid.

#include <string>
#include <vector>

#include "scout/core/error.hpp"
#include "scout/core/taxonomy.hpp"
#include "scout/core/types.hpp"
#include "scout/providers/embedding.hpp"
#include "scout/providers/llm.hpp"

namespace scout {

inline constexpr double kDefaultCategoryThreshold = 0.2;

namespace detail {
inline Vector mean_embedding(const std::vector<std::string>& phrases, const EmbeddingProvider& embedder) {
  std::vector<double> sum(embedder.dimension(), 0.0);
  for (const auto& p : phrases) {
    const Vector v = embedder.embed(p);
    require_same_dimension(v, Vector(sum.size()));
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += v[i];
  }
  if (!phrases.empty()) {
    for (double& x : sum) x /= static_cast<double>(phrases.size());
  }
  return normalized(Vector(std::move(sum)));
}

inline void append_phrases(const TaxonomyNode& node, std::vector<std::string>& out) {
  out.push_back(node.label);
  out.insert(out.end(), node.seed_phrases.begin(), node.seed_phrases.end());
}
}  // namespace detail

/// Subcategory centroid: normalized mean embedding of its label and seed
/// phrases. Category centroid: the same over the category's own phrases and
/// those of all its subcategories.
inline void compute_centroids(Taxonomy& taxonomy, const EmbeddingProvider& embedder) {
  for (auto& category : taxonomy.root().children) {
    std::vector<std::string> all;
    detail::append_phrases(category, all);
    for (auto& sub : category.children) {
      std::vector<std::string> own;
      detail::append_phrases(sub, own);
      sub.centroid = detail::mean_embedding(own, embedder);
      all.insert(all.end(), own.begin(), own.end());
    }
    category.centroid = detail::mean_embedding(all, embedder);
  }
}

/// Category centroids in the shape problem interpretation expects.
inline std::vector<CategoryProfile> category_profiles(const Taxonomy& taxonomy) {
  std::vector<CategoryProfile> out;
  for (const auto& c : taxonomy.categories()) out.push_back({c.label, c.centroid});
  return out;
}

/// Argmax-cosine subcategory (first in file order on ties); below the
/// threshold the fragment is Uncategorized.
inline CategoryPath categorize(const SolutionFragment& frag, const Taxonomy& taxonomy,
                               double threshold = kDefaultCategoryThreshold) {
  if (taxonomy.subcategory_count() == 0) throw Error(ErrorCode::config, "taxonomy has no subcategories");
  const TaxonomyNode* best_category = nullptr;
  const TaxonomyNode* best_sub = nullptr;
  double best = 0.0;
  for (const auto& category : taxonomy.categories()) {
    for (const auto& sub : category.children) {
      const double c = cosine_similarity(frag.embedding, sub.centroid);
      if (!best_sub || c > best) {
        best = c;
        best_sub = &sub;
        best_category = &category;
      }
    }
  }
  if (best < threshold) return {std::string(kUncategorized), std::string(kUncategorized)};
  return {best_category->label, best_sub->label};
}

}  // namespace scout
