#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "scout/core/error.hpp"
#include "scout/core/types.hpp"
#include "scout/intelligence/kmeans.hpp"

namespace scout {

/// ceil(sqrt(n / 2)) clamped to [1, n].
inline std::size_t default_cluster_count(std::size_t n) {
  if (n == 0) return 0;
  const auto k = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n) / 2.0)));
  return std::clamp<std::size_t>(k, 1, n);
}

struct ClusterPolicy {
  std::optional<std::size_t> k;  // overrides the default count
  std::size_t max_iter = kDefaultMaxIter;
  double tol = kDefaultTol;
};

/// Clusters fragment embeddings and writes cluster_id onto each fragment.
inline ClusterResult cluster_fragments(std::vector<SolutionFragment>& frags, const ClusterPolicy& policy = {}) {
  if (frags.empty()) {
    throw Error(ErrorCode::empty_pipeline, "no fragments reached clustering; upstream stages removed everything");
  }
  std::vector<Vector> points;
  points.reserve(frags.size());
  for (const auto& f : frags) points.push_back(f.embedding);
  const std::size_t k = policy.k ? *policy.k : default_cluster_count(frags.size());
  ClusterResult result = kmeans(points, k, policy.max_iter, policy.tol);
  for (std::size_t i = 0; i < frags.size(); ++i) frags[i].cluster_id = static_cast<int>(result.assignments[i]);
  return result;
}

}  // namespace scout
