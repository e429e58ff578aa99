#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <string_view>

#include "scout/core/text.hpp"

namespace scout {

/// Set of contiguous k-word windows over the lowercased alphanumeric tokens,
/// joined by single spaces. Fewer than k words yields the empty set.
inline std::set<std::string> word_shingles(std::string_view input, std::size_t k) {
  std::set<std::string> out;
  if (k == 0) return out;
  const auto words = text::alnum_tokens(input);
  for (std::size_t i = 0; i + k <= words.size(); ++i) {
    std::string s = words[i];
    for (std::size_t j = i + 1; j < i + k; ++j) {
      s.push_back(' ');
      s += words[j];
    }
    out.insert(std::move(s));
  }
  return out;
}

/// |a ∩ b| / |a ∪ b|. Two empty sets are defined to have similarity 1.
template <class SortedSet>
double jaccard(const SortedSet& a, const SortedSet& b) {
  if (a.empty() && b.empty()) return 1.0;
  std::size_t common = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++common;
      ++ia;
      ++ib;
    }
  }
  const std::size_t uni = a.size() + b.size() - common;
  return static_cast<double>(common) / static_cast<double>(uni);
}

}  // namespace scout
