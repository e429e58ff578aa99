#pragma once

// Candidate solution units from curated patents and commercial records.

#include <cstdio>
#include <string>
#include <vector>

#include "scout/core/text.hpp"
#include "scout/core/types.hpp"
#include "scout/providers/llm.hpp"

namespace scout {

inline constexpr std::size_t kMinFragmentLength = 40;

inline std::string patent_fragment_id(const std::string& canonical_id, std::size_t ordinal) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%03zu", ordinal);
  return "P-" + canonical_id + "-" + buf;
}

/// Runs the provider's `fragments` capability over each document and keeps
/// units of at least `min_length` code points. Embeddings are left empty;
/// integration fills them after synonym normalization.
inline std::vector<SolutionFragment> fragment_solutions(const std::vector<PatentDocument>& docs,
                                                        const LlmProvider& llm,
                                                        std::size_t min_length = kMinFragmentLength) {
  std::vector<SolutionFragment> out;
  for (const auto& doc : docs) {
    std::size_t ordinal = 0;
    for (auto& unit : llm.fragments(doc)) {
      unit = text::trim(unit);
      if (text::length(unit) < min_length) continue;
      SolutionFragment f;
      f.id = patent_fragment_id(doc.canonical_id, ++ordinal);
      f.text = std::move(unit);
      f.provenance = {{SourceKind::patent, doc.canonical_id}};
      out.push_back(std::move(f));
    }
  }
  return out;
}

/// One fragment per commercial record whose description is long enough to
/// stand on its own.
inline std::vector<SolutionFragment> commercial_fragments(const std::vector<CommercialRecord>& kb,
                                                          std::size_t min_length = kMinFragmentLength) {
  std::vector<SolutionFragment> out;
  for (const auto& r : kb) {
    if (text::length(r.description) < min_length) continue;
    SolutionFragment f;
    f.id = "C-" + r.id;
    f.text = r.description;
    f.provenance = {{SourceKind::commercial, r.id}};
    f.embedding = r.embedding;
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace scout
