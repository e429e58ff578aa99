#pragma once

// Deterministic k-means: farthest-first initialization and Lloyd iterations
// with lowest-index tie-breaking throughout.

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "scout/core/error.hpp"
#include "scout/providers/vector.hpp"

namespace scout {

inline constexpr std::size_t kDefaultMaxIter = 100;
inline constexpr double kDefaultTol = 1e-9;

struct ClusterResult {
  std::size_t k = 0;
  std::vector<std::size_t> assignments;  // point index -> cluster
  std::vector<Vector> centroids;         // member means
  double objective = 0.0;                // sum of squared distances to assigned centroid
  std::size_t iterations = 0;
  std::vector<double> objective_history;  // objective after every update, then after the final pass
};

namespace detail {

inline std::size_t nearest_centroid(const Vector& p, const std::vector<Vector>& centroids) {
  std::size_t best = 0;
  double best_d = squared_distance(p, centroids[0]);
  for (std::size_t j = 1; j < centroids.size(); ++j) {
    const double d = squared_distance(p, centroids[j]);
    if (d < best_d) {
      best_d = d;
      best = j;
    }
  }
  return best;
}

inline double objective(const std::vector<Vector>& points, const std::vector<std::size_t>& assignments,
                        const std::vector<Vector>& centroids) {
  double total = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) total += squared_distance(points[i], centroids[assignments[i]]);
  return total;
}

inline std::vector<Vector> farthest_first(const std::vector<Vector>& points, std::size_t k) {
  std::vector<Vector> centroids{points[0]};
  std::vector<bool> chosen(points.size(), false);
  chosen[0] = true;
  std::vector<double> min_d(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) min_d[i] = squared_distance(points[i], points[0]);
  while (centroids.size() < k) {
    std::size_t pick = points.size();
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (chosen[i]) continue;
      if (pick == points.size() || min_d[i] > min_d[pick]) pick = i;
    }
    chosen[pick] = true;
    centroids.push_back(points[pick]);
    for (std::size_t i = 0; i < points.size(); ++i) {
      min_d[i] = std::min(min_d[i], squared_distance(points[i], points[pick]));
    }
  }
  return centroids;
}

}  // namespace detail

inline ClusterResult kmeans(const std::vector<Vector>& points, std::size_t k, std::size_t max_iter = kDefaultMaxIter,
                            double tol = kDefaultTol) {
  const std::size_t n = points.size();
  if (k < 1 || k > n) {
    throw Error(ErrorCode::invalid_k, "k=" + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
  }
  if (max_iter < 1) throw Error(ErrorCode::invalid_input, "max_iter must be >= 1");
  if (!(tol > 0.0)) throw Error(ErrorCode::invalid_input, "tol must be > 0");
  for (const auto& p : points) require_same_dimension(p, points[0]);
  const std::size_t dim = points[0].size();

  ClusterResult r;
  r.k = k;
  r.centroids = detail::farthest_first(points, k);
  r.assignments.assign(n, 0);

  for (std::size_t iter = 1; iter <= max_iter; ++iter) {
    std::vector<std::size_t> sizes(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
      r.assignments[i] = detail::nearest_centroid(points[i], r.centroids);
      ++sizes[r.assignments[i]];
    }
    // An empty cluster takes the point farthest from its own centroid among
    // clusters that can spare one.
    for (std::size_t j = 0; j < k; ++j) {
      if (sizes[j] != 0) continue;
      std::size_t far = n;
      double far_d = -1.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (sizes[r.assignments[i]] < 2) continue;
        const double d = squared_distance(points[i], r.centroids[r.assignments[i]]);
        if (d > far_d) {
          far_d = d;
          far = i;
        }
      }
      --sizes[r.assignments[far]];
      r.assignments[far] = j;
      sizes[j] = 1;
    }

    std::vector<std::vector<double>> sums(k, std::vector<double>(dim, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
      auto& s = sums[r.assignments[i]];
      for (std::size_t d = 0; d < dim; ++d) s[d] += points[i][d];
    }
    double movement = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      for (double& v : sums[j]) v /= static_cast<double>(sizes[j]);
      Vector next(std::move(sums[j]));
      movement = std::max(movement, std::sqrt(squared_distance(next, r.centroids[j])));
      r.centroids[j] = std::move(next);
    }
    r.iterations = iter;
    r.objective_history.push_back(detail::objective(points, r.assignments, r.centroids));
    if (movement < tol) break;
  }

  // Final pass: a point moves only if another centroid is strictly nearer,
  // so every point ends at a nearest centroid and no cluster empties.
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t best = detail::nearest_centroid(points[i], r.centroids);
    if (squared_distance(points[i], r.centroids[best]) <
        squared_distance(points[i], r.centroids[r.assignments[i]])) {
      r.assignments[i] = best;
    }
  }
  r.objective = detail::objective(points, r.assignments, r.centroids);
  r.objective_history.push_back(r.objective);
  return r;
}

}  // namespace scout
