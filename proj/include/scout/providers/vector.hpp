#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "scout/core/error.hpp"

namespace scout {

/// Embedding dimension used across the system.
inline constexpr std::size_t kEmbeddingDim = 256;

/// Dense real vector with finite components.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim) : values_(dim, 0.0) {}
  explicit Vector(std::vector<double> values) : values_(std::move(values)) { check_finite(); }
  Vector(std::initializer_list<double> values) : values_(values) { check_finite(); }

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }
  std::span<const double> view() const noexcept { return values_; }
  const std::vector<double>& values() const noexcept { return values_; }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  double squared_norm() const noexcept {
    double s = 0.0;
    for (double v : values_) s += v * v;
    return s;
  }
  double norm() const noexcept { return std::sqrt(squared_norm()); }
  bool is_zero() const noexcept {
    return std::all_of(values_.begin(), values_.end(), [](double v) { return v == 0.0; });
  }

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  void check_finite() const {
    for (double v : values_) {
      if (!std::isfinite(v)) throw Error(ErrorCode::invalid_input, "vector component is not finite");
    }
  }

  std::vector<double> values_;
};

inline void require_same_dimension(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::dimension, "dimension mismatch: " + std::to_string(a.size()) + " vs " +
                                          std::to_string(b.size()));
  }
}

inline double dot(const Vector& a, const Vector& b) {
  require_same_dimension(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double squared_distance(const Vector& a, const Vector& b) {
  require_same_dimension(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

/// dot(a,b)/(|a||b|), clamped to [-1, 1]; 0 when either vector is zero.
/// Identical non-zero vectors score exactly 1.
inline double cosine_similarity(const Vector& a, const Vector& b) {
  require_same_dimension(a, b);
  const double na = a.squared_norm();
  const double nb = b.squared_norm();
  if (na == 0.0 || nb == 0.0) return 0.0;
  if (a == b) return 1.0;
  const double c = dot(a, b) / std::sqrt(na * nb);
  return std::clamp(c, -1.0, 1.0);
}

/// v / |v|, or v unchanged when zero.
inline Vector normalized(const Vector& v) {
  const double n = v.norm();
  if (n == 0.0) return v;
  std::vector<double> out(v.begin(), v.end());
  for (double& x : out) x /= n;
  return Vector(std::move(out));
}

}  // namespace scout
