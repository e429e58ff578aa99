#pragma once

#include <set>
#include <vector>

#include "scout/core/error.hpp"
#include "scout/core/types.hpp"
#include "scout/providers/llm.hpp"

namespace scout {

/// Variant 0 is the problem keywords verbatim; the provider's `variants`
/// capability fills the remaining slots. Variants with an already-seen term
/// set are dropped, so the result may be shorter than `n`. Indices are
/// reassigned to be consecutive.
inline std::vector<QuerySpec> generate_query_variants(const SemanticProblem& sp, std::size_t n,
                                                      const LlmProvider& llm) {
  if (n < 1) throw Error(ErrorCode::invalid_input, "variant count must be >= 1");
  if (sp.keywords.empty()) throw Error(ErrorCode::invalid_input, "problem has no keywords to query");

  std::vector<QuerySpec> out;
  std::set<std::set<std::string>> seen;
  auto accept = [&](QuerySpec q) {
    q.terms = dedupe_terms(std::move(q.terms));
    if (q.terms.empty()) return;
    if (!seen.insert(std::set<std::string>(q.terms.begin(), q.terms.end())).second) return;
    q.variant_index = out.size();
    out.push_back(std::move(q));
  };

  accept(QuerySpec{sp.keywords, 0, "problem keywords"});
  if (n > 1) {
    for (auto& q : llm.variants(sp, n - 1)) {
      if (out.size() == n) break;
      accept(std::move(q));
    }
  }
  return out;
}

}  // namespace scout
