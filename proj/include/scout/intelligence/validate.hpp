#pragma once

// Links fragments to commercial records: a direct company or product name
// mention, otherwise embedding similarity above a threshold.

#include <algorithm>
#include <string>
#include <vector>

#include "scout/core/error.hpp"
#include "scout/core/term_matcher.hpp"
#include "scout/core/types.hpp"

namespace scout {

inline constexpr double kDefaultValidationThreshold = 0.5;

inline std::vector<AdoptionSignal> adoption_signals(const CommercialRecord& r) {
  std::vector<AdoptionSignal> out;
  if (r.launch_year) out.push_back({SignalKind::launch_year, std::to_string(*r.launch_year)});
  if (r.funding_status) out.push_back({SignalKind::funding_round, *r.funding_status});
  return out;
}

class Validator {
 public:
  explicit Validator(std::vector<CommercialRecord> kb, double threshold = kDefaultValidationThreshold)
      : kb_(std::move(kb)), threshold_(threshold) {
    if (!(threshold >= 0.0 && threshold <= 1.0)) {
      throw Error(ErrorCode::invalid_input, "validation threshold must lie in [0, 1]");
    }
    std::sort(kb_.begin(), kb_.end(), [](const CommercialRecord& a, const CommercialRecord& b) { return a.id < b.id; });
    for (const auto& r : kb_) {
      std::vector<std::string> names{r.company_name};
      if (r.product_name) names.push_back(*r.product_name);
      names_.emplace_back(std::move(names));
    }
  }

  /// Evidence in record id order.
  std::vector<ValidationEvidence> operator()(const SolutionFragment& frag) const {
    std::vector<ValidationEvidence> out;
    for (std::size_t i = 0; i < kb_.size(); ++i) {
      const auto& r = kb_[i];
      if (names_[i].contains_any(frag.text)) {
        out.push_back({r.id, LinkKind::name_match, 1.0, adoption_signals(r)});
        continue;
      }
      const double s = cosine_similarity(frag.embedding, r.embedding);
      if (s >= threshold_) out.push_back({r.id, LinkKind::similarity, s, adoption_signals(r)});
    }
    return out;
  }

  const std::vector<CommercialRecord>& records() const { return kb_; }

 private:
  std::vector<CommercialRecord> kb_;
  double threshold_;
  std::vector<TermMatcher> names_;
};

inline std::vector<ValidationEvidence> validate(const SolutionFragment& frag, const std::vector<CommercialRecord>& kb,
                                                double threshold = kDefaultValidationThreshold) {
  return Validator(kb, threshold)(frag);
}

}  // namespace scout
