#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "scout/core/text.hpp"
#include "scout/providers/fnv.hpp"
#include "scout/providers/vector.hpp"

namespace scout {

class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;
  virtual std::string name() const = 0;
  virtual std::size_t dimension() const = 0;
  /// Same text always yields the same vector for deterministic providers.
  virtual bool deterministic() const = 0;
  virtual Vector embed(std::string_view text) const = 0;
};

/// Hashed character-trigram embedding.
///
/// The text is NFC-normalized and lowercased; every window of three code
/// points is hashed (FNV-1a 64 over its UTF-8 bytes) into bucket
/// `hash % 256`, and the count vector is L2-normalized. Texts shorter than
/// three code points map to the zero vector.
inline Vector stub_embed(std::string_view input) {
  std::array<double, kEmbeddingDim> counts{};
  const auto cps = text::code_points(text::to_lower(text::nfc(input)));
  if (cps.size() < 3) return Vector(kEmbeddingDim);
  std::string trigram;
  for (std::size_t i = 0; i + 3 <= cps.size(); ++i) {
    trigram.clear();
    for (std::size_t j = i; j < i + 3; ++j) text::append_utf8(trigram, cps[j]);
    counts[fnv1a64(trigram) % kEmbeddingDim] += 1.0;
  }
  double sq = 0.0;
  for (double c : counts) sq += c * c;
  const double n = std::sqrt(sq);
  std::vector<double> out(counts.begin(), counts.end());
  for (double& v : out) v /= n;
  return Vector(std::move(out));
}

class StubEmbeddingProvider final : public EmbeddingProvider {
 public:
  std::string name() const override { return "stub"; }
  std::size_t dimension() const override { return kEmbeddingDim; }
  bool deterministic() const override { return true; }
  Vector embed(std::string_view text) const override { return stub_embed(text); }
};

}  // namespace scout
