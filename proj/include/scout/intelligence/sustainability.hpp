#pragma once

// Four-criterion sustainability rubric driven by a term lexicon:
//
//   {"material_origin":    {"positive": [...], "negative": [...]},
//    "resource_intensity": {...}, "waste_generation": {...}, "recyclability": {...}}

#include <array>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "scout/core/error.hpp"
#include "scout/core/term_matcher.hpp"
#include "scout/core/types.hpp"

namespace scout {

inline constexpr std::array<std::string_view, 4> kSustainabilityCriteria = {
    "material_origin", "resource_intensity", "waste_generation", "recyclability"};

class SustainabilityLexicon {
 public:
  struct Terms {
    std::vector<std::string> positive;
    std::vector<std::string> negative;
  };

  SustainabilityLexicon() : SustainabilityLexicon(std::array<Terms, 4>{}) {}

  explicit SustainabilityLexicon(std::array<Terms, 4> criteria) : criteria_(std::move(criteria)) {
    for (std::size_t c = 0; c < criteria_.size(); ++c) {
      // Positive and negative terms share one matcher so overlapping terms
      // resolve by longest match ("non-recyclable" over "recyclable").
      std::vector<std::string> terms = criteria_[c].positive;
      terms.insert(terms.end(), criteria_[c].negative.begin(), criteria_[c].negative.end());
      matchers_[c] = TermMatcher(std::move(terms));
    }
  }

  static SustainabilityLexicon from_json(const nlohmann::json& j) {
    std::array<Terms, 4> criteria;
    for (auto it = j.begin(); it != j.end(); ++it) {
      std::size_t c = 0;
      while (c < kSustainabilityCriteria.size() && kSustainabilityCriteria[c] != it.key()) ++c;
      if (c == kSustainabilityCriteria.size()) {
        throw Error(ErrorCode::config, "sustainability lexicon: unknown criterion '" + it.key() + "'");
      }
      criteria[c].positive = it.value().value("positive", std::vector<std::string>{});
      criteria[c].negative = it.value().value("negative", std::vector<std::string>{});
    }
    return SustainabilityLexicon(std::move(criteria));
  }

  static SustainabilityLexicon load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::config, "cannot open sustainability lexicon " + path.string());
    try {
      return from_json(nlohmann::json::parse(in));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::config, "sustainability lexicon " + path.string() + ": " + e.what());
    }
  }

  /// 1 with only positive evidence, 0 with only negative, 0.5 otherwise.
  double criterion_score(std::size_t criterion, std::string_view text) const {
    bool positive = false;
    bool negative = false;
    const std::size_t n_positive = criteria_[criterion].positive.size();
    for (const auto& m : matchers_[criterion].find_all(text)) {
      (m.term < n_positive ? positive : negative) = true;
    }
    if (positive && !negative) return 1.0;
    if (negative && !positive) return 0.0;
    return 0.5;
  }

  const std::array<Terms, 4>& criteria() const { return criteria_; }

 private:
  std::array<Terms, 4> criteria_;
  std::array<TermMatcher, 4> matchers_;
};

inline SustainabilityScore score_sustainability(std::string_view text, const SustainabilityLexicon& lexicon) {
  return SustainabilityScore::from_criteria(lexicon.criterion_score(0, text), lexicon.criterion_score(1, text),
                                            lexicon.criterion_score(2, text), lexicon.criterion_score(3, text));
}

inline SustainabilityScore score_sustainability(const SolutionFragment& frag, const SustainabilityLexicon& lexicon) {
  return score_sustainability(frag.text, lexicon);
}

}  // namespace scout
