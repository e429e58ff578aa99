#pragma once

#include <algorithm>
#include <optional>
#include <regex>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scout/core/error.hpp"
#include "scout/core/sentences.hpp"
#include "scout/core/text.hpp"
#include "scout/core/types.hpp"
#include "scout/providers/embedding.hpp"
#include "scout/providers/stopwords.hpp"
#include "scout/providers/synonym_graph.hpp"

namespace scout {

enum class Capability { interpret, variants, fragments, normalize };

constexpr std::string_view to_string(Capability c) noexcept {
  switch (c) {
    case Capability::interpret: return "interpret";
    case Capability::variants: return "variants";
    case Capability::fragments: return "fragments";
    case Capability::normalize: return "normalize";
  }
  return "";
}

/// A taxonomy category as seen by problem interpretation.
struct CategoryProfile {
  std::string label;
  Vector centroid;
};

struct InterpretContext {
  const EmbeddingProvider& embedder;
  std::span<const CategoryProfile> categories;
};

class LlmProvider {
 public:
  virtual ~LlmProvider() = default;
  virtual std::string name() const = 0;
  virtual std::set<Capability> capabilities() const = 0;
  virtual bool deterministic() const = 0;

  virtual SemanticProblem interpret(const ProblemStatement& problem,
                                    const InterpretContext& context) const = 0;
  /// Candidate query reformulations for variant slots 1..count. May contain
  /// duplicates; the caller deduplicates and indexes them.
  virtual std::vector<QuerySpec> variants(const SemanticProblem& problem,
                                          std::size_t count) const = 0;
  /// Candidate solution-unit texts extracted from one patent.
  virtual std::vector<std::string> fragments(const PatentDocument& doc) const = 0;
  virtual NormalizedCompany normalize(const CompanyEvidence& evidence, int current_year) const = 0;
};

// ---------------------------------------------------------------------------
// Rule-based stub

inline constexpr std::size_t kIntentMaxChars = 120;
inline constexpr double kDomainMinCosine = 0.1;
inline constexpr std::string_view kGeneralDomain = "general";

inline const std::set<std::string>& requirement_triggers() {
  static const std::set<std::string> triggers = {"must", "should", "require", "need"};
  return triggers;
}

/// Keywords, intent, requirements and domain from free text, without a model.
inline SemanticProblem stub_interpret(const ProblemStatement& problem, const InterpretContext& context,
                                      const StopwordList& stopwords = StopwordList::builtin()) {
  const std::string normalized = text::nfc(problem.text);
  if (text::trim(normalized).empty()) throw Error(ErrorCode::invalid_input, "problem text is empty");

  SemanticProblem sp;
  sp.source_id = problem.id;

  std::set<std::string> seen;
  for (auto& token : text::alpha_tokens(normalized)) {
    if (stopwords.contains(token) || !seen.insert(token).second) continue;
    sp.keywords.push_back(std::move(token));
  }

  const auto sentences = split_sentences(normalized, ".!?");
  if (!sentences.empty()) sp.intent = text::truncate(sentences.front(), kIntentMaxChars);
  for (const auto& sentence : sentences) {
    const auto tokens = text::alpha_tokens(sentence);
    const bool triggered = std::any_of(tokens.begin(), tokens.end(), [](const std::string& t) {
      return requirement_triggers().count(t) != 0;
    });
    if (triggered) sp.functional_requirements.push_back(sentence);
  }

  sp.embedding = context.embedder.embed(normalized);
  sp.domain_context = std::string(kGeneralDomain);
  if (!sp.keywords.empty()) {
    double best = kDomainMinCosine;
    for (const auto& category : context.categories) {
      const double c = cosine_similarity(category.centroid, sp.embedding);
      if (c > best) {
        best = c;
        sp.domain_context = category.label;
      }
    }
  }
  return sp;
}

/// Shortest term, ties broken alphabetically.
inline std::size_t lowest_information_term(const std::vector<std::string>& terms) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < terms.size(); ++i) {
    const auto li = text::length(terms[i]);
    const auto lb = text::length(terms[best]);
    if (li < lb || (li == lb && terms[i] < terms[best])) best = i;
  }
  return best;
}

inline std::vector<std::string> dedupe_terms(std::vector<std::string> terms) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (auto& t : terms) {
    if (!t.empty() && seen.insert(t).second) out.push_back(std::move(t));
  }
  return out;
}

/// Cycles three transforms over a working term list: synonym substitution
/// (updates the list), dropping the lowest-information term (updates the
/// list), and appending the domain label (emitted only).
inline std::vector<QuerySpec> stub_variants(const SemanticProblem& sp, std::size_t count,
                                            const SynonymGraph& synonyms) {
  std::vector<QuerySpec> out;
  std::vector<std::string> working = sp.keywords;
  for (std::size_t slot = 1; slot <= count; ++slot) {
    QuerySpec q;
    q.variant_index = slot;
    switch ((slot - 1) % 3) {
      case 0: {
        std::vector<std::string> substituted;
        for (const auto& t : working) substituted.push_back(text::to_lower(synonyms.apply(t)));
        working = dedupe_terms(std::move(substituted));
        q.terms = working;
        q.rationale = "synonym substitution";
        break;
      }
      case 1: {
        if (working.size() > 1) {
          const auto drop = lowest_information_term(working);
          q.rationale = "dropped lowest-information term '" + working[drop] + "'";
          working.erase(working.begin() + static_cast<std::ptrdiff_t>(drop));
        } else {
          q.rationale = "single term retained";
        }
        q.terms = working;
        break;
      }
      default: {
        q.terms = working;
        if (sp.domain_context != kGeneralDomain && !sp.domain_context.empty()) {
          q.terms.push_back(text::to_lower(sp.domain_context));
        }
        q.terms = dedupe_terms(std::move(q.terms));
        q.rationale = "appended domain context";
        break;
      }
    }
    if (!q.terms.empty()) out.push_back(std::move(q));
  }
  return out;
}

/// Sliding windows of `size` consecutive sentences advancing by
/// size - overlap, stopping once a window reaches the last sentence.
inline std::vector<std::string> sentence_windows(const std::vector<std::string>& sentences,
                                                 std::size_t size = 3, std::size_t overlap = 1) {
  std::vector<std::string> windows;
  if (sentences.empty() || size == 0 || overlap >= size) return windows;
  const std::size_t stride = size - overlap;
  for (std::size_t start = 0;; start += stride) {
    const std::size_t stop = std::min(start + size, sentences.size());
    std::vector<std::string> part(sentences.begin() + static_cast<std::ptrdiff_t>(start),
                                  sentences.begin() + static_cast<std::ptrdiff_t>(stop));
    windows.push_back(text::join(part, " "));
    if (stop == sentences.size()) break;
  }
  return windows;
}

inline std::vector<std::string> stub_fragments(const PatentDocument& doc) {
  auto sentences = split_sentences(doc.claims);
  for (auto& s : split_sentences(doc.description)) sentences.push_back(std::move(s));
  return sentence_windows(sentences);
}

/// Capitalizes the first letter of each space-separated word and lowercases
/// the rest (ASCII).
inline std::string title_case(std::string_view s) {
  std::string out(s);
  bool word_start = true;
  for (char& c : out) {
    const auto uc = static_cast<unsigned char>(c);
    if (text::is_space(c)) {
      word_start = true;
    } else {
      c = static_cast<char>(word_start ? std::toupper(uc) : std::tolower(uc));
      word_start = false;
    }
  }
  return out;
}

namespace detail {
inline std::optional<int> find_year(const std::string& haystack, const std::regex& pattern,
                                    int current_year) {
  std::smatch m;
  if (!std::regex_search(haystack, m, pattern)) return std::nullopt;
  const int year = std::stoi(m[1].str());
  if (year < 1800 || year > current_year + 1) return std::nullopt;
  return year;
}
}  // namespace detail

/// Pattern-based normalization: trims and collapses whitespace, title-cases
/// the company name and pulls years, country and funding round from text.
inline NormalizedCompany stub_normalize(const CompanyEvidence& evidence, int current_year) {
  static const std::regex founded(R"(\bfounded in (\d{4})\b)", std::regex::icase);
  static const std::regex since(R"(\bsince (\d{4})\b)", std::regex::icase);
  static const std::regex launched(R"(\blaunched in (\d{4})\b)", std::regex::icase);
  static const std::regex country_after_year(
      R"(\b(?:[Ff]ounded|[Ll]aunched|[Ee]stablished) in \d{4} in ([A-Z][A-Za-z]+(?: [A-Z][A-Za-z]+)*))");
  static const std::regex country_based(
      R"(\b(?:[Bb]ased|[Hh]eadquartered) in ([A-Z][A-Za-z]+(?: [A-Z][A-Za-z]+)*))");
  static const std::regex funding(
      R"(\b(pre-seed|seed|series [a-h])\s+(?:round|funding|financing)\b)", std::regex::icase);

  NormalizedCompany out;
  out.company_name = title_case(text::collapse_whitespace(evidence.company_name));
  if (evidence.product_name) {
    std::string p = text::collapse_whitespace(*evidence.product_name);
    if (!p.empty()) out.product_name = std::move(p);
  }

  std::vector<std::string> parts;
  for (const auto* piece : {&evidence.product_summary, &evidence.snippet, &evidence.caption}) {
    std::string p = text::collapse_whitespace(*piece);
    if (!p.empty()) parts.push_back(std::move(p));
  }
  out.description = text::join(parts, " ");

  std::string haystack = out.description;
  for (const auto& [key, value] : evidence.specs) haystack += " " + key + " " + value;

  out.founding_year = detail::find_year(haystack, founded, current_year);
  if (!out.founding_year) out.founding_year = detail::find_year(haystack, since, current_year);
  out.launch_year = detail::find_year(haystack, launched, current_year);

  std::smatch m;
  if (std::regex_search(haystack, m, country_after_year) ||
      std::regex_search(haystack, m, country_based)) {
    out.country = m[1].str();
  }
  if (std::regex_search(haystack, m, funding)) out.funding_status = title_case(m[1].str());
  return out;
}

struct StubLlmOptions {
  SynonymGraph synonyms;
  StopwordList stopwords = StopwordList::builtin();
};

/// Pure, deterministic provider used for tests and offline runs.
class StubLlmProvider final : public LlmProvider {
 public:
  explicit StubLlmProvider(StubLlmOptions options = {}) : options_(std::move(options)) {}

  std::string name() const override { return "stub"; }
  std::set<Capability> capabilities() const override {
    return {Capability::interpret, Capability::variants, Capability::fragments, Capability::normalize};
  }
  bool deterministic() const override { return true; }

  SemanticProblem interpret(const ProblemStatement& problem,
                            const InterpretContext& context) const override {
    return stub_interpret(problem, context, options_.stopwords);
  }
  std::vector<QuerySpec> variants(const SemanticProblem& problem, std::size_t count) const override {
    return stub_variants(problem, count, options_.synonyms);
  }
  std::vector<std::string> fragments(const PatentDocument& doc) const override {
    return stub_fragments(doc);
  }
  NormalizedCompany normalize(const CompanyEvidence& evidence, int current_year) const override {
    return stub_normalize(evidence, current_year);
  }

  const StubLlmOptions& options() const { return options_; }

 private:
  StubLlmOptions options_;
};

}  // namespace scout
