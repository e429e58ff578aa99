#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "scout/core/text.hpp"

namespace scout {

/// Case-insensitive (ASCII folding), word-boundary phrase matcher.
///
/// Overlapping candidates are resolved globally: longer matches win, then the
/// earlier start, then the lower term index. Offsets are UTF-8 byte offsets
/// into the searched text, so `text.substr(begin, end - begin)` slices back to
/// the surface form.
class TermMatcher {
 public:
  struct Match {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::size_t term = 0;  // index into the constructor's term list
  };

  TermMatcher() = default;

  explicit TermMatcher(std::vector<std::string> terms) : terms_(std::move(terms)) {
    folded_.reserve(terms_.size());
    for (const auto& t : terms_) folded_.push_back(text::ascii_lower(t));
  }

  const std::vector<std::string>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  std::vector<Match> find_all(std::string_view haystack) const {
    std::vector<Match> candidates;
    if (terms_.empty() || haystack.empty()) return candidates;
    const std::string folded = text::ascii_lower(haystack);
    for (std::size_t t = 0; t < folded_.size(); ++t) {
      const std::string& needle = folded_[t];
      if (needle.empty()) continue;
      std::size_t pos = folded.find(needle);
      while (pos != std::string::npos) {
        const std::size_t end = pos + needle.size();
        if (text::boundary_before(haystack, pos) && text::boundary_after(haystack, end)) {
          candidates.push_back({pos, end, t});
        }
        pos = folded.find(needle, pos + 1);
      }
    }
    std::sort(candidates.begin(), candidates.end(), [](const Match& a, const Match& b) {
      const auto la = a.end - a.begin;
      const auto lb = b.end - b.begin;
      return std::tie(lb, a.begin, a.term) < std::tie(la, b.begin, b.term);
    });
    std::vector<Match> accepted;
    for (const Match& m : candidates) {
      const bool overlaps = std::any_of(accepted.begin(), accepted.end(), [&](const Match& o) {
        return m.begin < o.end && o.begin < m.end;
      });
      if (!overlaps) accepted.push_back(m);
    }
    std::sort(accepted.begin(), accepted.end(),
              [](const Match& a, const Match& b) { return a.begin < b.begin; });
    return accepted;
  }

  bool contains_any(std::string_view haystack) const { return !find_all(haystack).empty(); }

 private:
  std::vector<std::string> terms_;
  std::vector<std::string> folded_;
};

}  // namespace scout
