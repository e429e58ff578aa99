#pragma once

#include <vector>

#include "scout/core/error.hpp"
#include "scout/core/types.hpp"
#include "scout/providers/embedding.hpp"

namespace scout {

inline constexpr double kDefaultRetrievalThreshold = 0.15;

/// Keeps documents whose title + abstract embedding has cosine >= threshold
/// with the problem embedding. Input order is preserved.
inline std::vector<PatentDocument> curate(const std::vector<PatentDocument>& docs, const SemanticProblem& sp,
                                          double threshold, const EmbeddingProvider& embedder) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw Error(ErrorCode::invalid_input, "retrieval threshold must lie in [0, 1]");
  }
  std::vector<PatentDocument> kept;
  for (const auto& d : docs) {
    if (cosine_similarity(embedder.embed(d.title + " " + d.abstract), sp.embedding) >= threshold) {
      kept.push_back(d);
    }
  }
  return kept;
}

}  // namespace scout
