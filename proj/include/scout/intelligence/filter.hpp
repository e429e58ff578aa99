#pragma once

// Relevance gate between the problem and each fragment.

#include <string>
#include <vector>

#include "scout/core/error.hpp"
#include "scout/core/types.hpp"

namespace scout {

inline constexpr double kDefaultRelevanceThreshold = 0.35;

/// Binary relevance classifier. The score is stored on the fragment; the
/// decision says whether it is kept.
class RelevanceClassifier {
 public:
  virtual ~RelevanceClassifier() = default;
  virtual double score(const SolutionFragment& frag, const SemanticProblem& sp) const = 0;
  virtual bool relevant(double score) const = 0;
};

class CosineThresholdClassifier final : public RelevanceClassifier {
 public:
  explicit CosineThresholdClassifier(double threshold = kDefaultRelevanceThreshold) : threshold_(threshold) {
    if (!(threshold >= 0.0 && threshold <= 1.0)) {
      throw Error(ErrorCode::invalid_input, "relevance threshold must lie in [0, 1]");
    }
  }
  double score(const SolutionFragment& frag, const SemanticProblem& sp) const override {
    return cosine_similarity(frag.embedding, sp.embedding);
  }
  bool relevant(double score) const override { return score >= threshold_; }
  double threshold() const { return threshold_; }

 private:
  double threshold_;
};

struct FilterResult {
  std::vector<SolutionFragment> retained;
  std::vector<SolutionFragment> discarded;
};

inline FilterResult filter_fragments(std::vector<SolutionFragment> frags, const SemanticProblem& sp,
                                     const RelevanceClassifier& classifier) {
  FilterResult out;
  for (auto& f : frags) {
    f.relevance = classifier.score(f, sp);
    (classifier.relevant(*f.relevance) ? out.retained : out.discarded).push_back(std::move(f));
  }
  return out;
}

inline FilterResult filter_fragments(std::vector<SolutionFragment> frags, const SemanticProblem& sp,
                                     double threshold = kDefaultRelevanceThreshold) {
  return filter_fragments(std::move(frags), sp, CosineThresholdClassifier(threshold));
}

}  // namespace scout
