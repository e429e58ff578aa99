#pragma once

// Market, product and competitor agents. Each is a pure function of its
// inputs and the web client's page set, so the three may run concurrently
// and join at build_commercial_kb.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "scout/commercial/web_client.hpp"
#include "scout/core/error.hpp"
#include "scout/core/text.hpp"
#include "scout/core/types.hpp"

namespace scout {

using SpecList = std::vector<std::pair<std::string, std::string>>;

struct MarketEntry {
  std::string company_name;
  std::string snippet;
  std::string source_ref;

  friend bool operator==(const MarketEntry&, const MarketEntry&) = default;
};

struct MarketFindings {
  std::vector<MarketEntry> entries;
  std::vector<std::string> warnings;
};

struct ProductEntry {
  std::string company_name;
  std::string product_name;
  std::string summary;
  SpecList specs;
  std::string caption;
  std::string source_ref;

  friend bool operator==(const ProductEntry&, const ProductEntry&) = default;
};

struct ProductFindings {
  std::vector<ProductEntry> entries;
  std::vector<std::string> warnings;
};

struct CompetitorEntry {
  std::string company_name;
  std::vector<std::string> related_products;
  /// "products", "snippets" and "sources" evidence lists.
  std::map<std::string, std::vector<std::string>> enrichment;

  friend bool operator==(const CompetitorEntry&, const CompetitorEntry&) = default;
};

struct CompetitorFindings {
  std::vector<CompetitorEntry> entries;
};

/// Produces a caption for a product page's imagery. No captioning model is
/// bundled; the stub always answers "".
class CaptionProvider {
 public:
  virtual ~CaptionProvider() = default;
  virtual std::string caption(const WebPage& page) const = 0;
};

class StubCaptionProvider final : public CaptionProvider {
 public:
  std::string caption(const WebPage&) const override { return {}; }
};

inline std::string case_fold(std::string_view s) { return text::to_lower(text::collapse_whitespace(s)); }

// ---------------------------------------------------------------------------
// Page body parsing

struct FieldLine {
  std::string key;  // lowercased, trimmed
  std::string value;
};

/// Splits "key: value" at the first colon. Returns nullopt for lines without
/// a colon or with an empty key or value.
inline std::optional<FieldLine> parse_field_line(std::string_view line) {
  const auto colon = line.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  FieldLine f{text::to_lower(text::collapse_whitespace(line.substr(0, colon))),
              text::collapse_whitespace(line.substr(colon + 1))};
  if (f.key.empty() || f.value.empty()) return std::nullopt;
  return f;
}

inline std::vector<std::string> body_lines(std::string_view body) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= body.size()) {
    auto end = body.find('\n', start);
    if (end == std::string_view::npos) end = body.size();
    std::string line(body.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    start = end + 1;
  }
  return lines;
}

/// (company, snippet) pairs from a search result page: blank-line separated
/// blocks with "company:" and "snippet:" lines.
inline std::vector<MarketEntry> parse_search_result(const WebPage& page, std::vector<std::string>& warnings) {
  std::vector<MarketEntry> out;
  MarketEntry current;
  bool open = false;
  auto flush = [&] {
    if (!open) return;
    if (current.company_name.empty()) {
      warnings.push_back(page.url + ": search result entry without company");
    } else {
      current.source_ref = page.url;
      out.push_back(current);
    }
    current = {};
    open = false;
  };
  for (const auto& line : body_lines(page.body)) {
    if (text::trim(line).empty()) {
      flush();
      continue;
    }
    open = true;
    const auto field = parse_field_line(line);
    if (field && field->key == "company") {
      current.company_name = field->value;
    } else if (field && field->key == "snippet") {
      current.snippet = field->value;
    } else {
      warnings.push_back(page.url + ": unrecognized search result line '" + text::trim(line) + "'");
    }
  }
  flush();
  return out;
}

/// Company profile page: a "company:" line plus free text forming the snippet.
inline std::optional<MarketEntry> parse_company_page(const WebPage& page, std::vector<std::string>& warnings) {
  MarketEntry entry;
  std::vector<std::string> prose;
  for (const auto& line : body_lines(page.body)) {
    const auto field = parse_field_line(line);
    if (field && field->key == "company" && entry.company_name.empty()) {
      entry.company_name = field->value;
    } else if (!text::trim(line).empty()) {
      prose.push_back(text::collapse_whitespace(line));
    }
  }
  if (entry.company_name.empty()) {
    warnings.push_back(page.url + ": company page without company line");
    return std::nullopt;
  }
  entry.snippet = text::join(prose, " ");
  entry.source_ref = page.url;
  return entry;
}

/// Datasheet page: "company:", "product:" and optional "summary:" headers,
/// every other "key: value" line is a spec. Malformed lines are skipped with
/// a warning.
inline std::optional<ProductEntry> parse_datasheet(const WebPage& page, std::vector<std::string>& warnings) {
  ProductEntry entry;
  for (const auto& line : body_lines(page.body)) {
    if (text::trim(line).empty()) continue;
    const auto field = parse_field_line(line);
    if (!field) {
      warnings.push_back(page.url + ": skipped malformed datasheet line '" + text::trim(line) + "'");
      continue;
    }
    if (field->key == "company" && entry.company_name.empty()) {
      entry.company_name = field->value;
    } else if (field->key == "product" && entry.product_name.empty()) {
      entry.product_name = field->value;
    } else if (field->key == "summary" && entry.summary.empty()) {
      entry.summary = field->value;
    } else {
      entry.specs.emplace_back(field->key, field->value);
    }
  }
  if (entry.company_name.empty() || entry.product_name.empty()) {
    warnings.push_back(page.url + ": datasheet without company or product line");
    return std::nullopt;
  }
  entry.source_ref = page.url;
  return entry;
}

namespace detail {
inline std::vector<WebPage> agent_search(const WebClient& web, const std::vector<std::string>& terms, PageKind kind,
                                         const char* agent) {
  try {
    return web.search(terms, kind);
  } catch (const std::exception& e) {
    throw Error(ErrorCode::agent, std::string(agent) + ": web client '" + web.name() + "' failed: " + e.what());
  }
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Agents

/// Queries the web client with the problem keywords. Company profile pages
/// are read before search result pages so the richer profile text wins the
/// first-occurrence dedup.
inline MarketFindings run_market_agent(const SemanticProblem& sp, const WebClient& web) {
  MarketFindings findings;
  std::set<std::string> seen;
  auto accept = [&](MarketEntry e) {
    e.company_name = text::collapse_whitespace(e.company_name);
    if (e.company_name.empty() || !seen.insert(case_fold(e.company_name)).second) return;
    findings.entries.push_back(std::move(e));
  };
  if (sp.keywords.empty()) return findings;
  for (const auto& page : detail::agent_search(web, sp.keywords, PageKind::company, "market")) {
    if (auto e = parse_company_page(page, findings.warnings)) accept(std::move(*e));
  }
  for (const auto& page : detail::agent_search(web, sp.keywords, PageKind::search_result, "market")) {
    for (auto& e : parse_search_result(page, findings.warnings)) accept(std::move(e));
  }
  return findings;
}

/// Datasheets for each market company (matched on the datasheet's company
/// line) followed by direct keyword hits; one entry per datasheet page.
inline ProductFindings run_product_agent(const SemanticProblem& sp, const MarketFindings& market, const WebClient& web,
                                         const CaptionProvider& captions = StubCaptionProvider()) {
  ProductFindings findings;
  std::set<std::string> seen_urls;
  auto take = [&](const WebPage& page, const std::string* required_company) {
    if (seen_urls.count(page.url)) return;
    std::vector<std::string> warnings;
    auto entry = parse_datasheet(page, warnings);
    if (required_company && (!entry || case_fold(entry->company_name) != *required_company)) return;
    seen_urls.insert(page.url);
    findings.warnings.insert(findings.warnings.end(), warnings.begin(), warnings.end());
    if (!entry) return;
    entry->caption = captions.caption(page);
    findings.entries.push_back(std::move(*entry));
  };
  for (const auto& company : market.entries) {
    const std::string folded = case_fold(company.company_name);
    for (const auto& page : detail::agent_search(web, {company.company_name}, PageKind::datasheet, "product")) {
      take(page, &folded);
    }
  }
  if (!sp.keywords.empty()) {
    for (const auto& page : detail::agent_search(web, sp.keywords, PageKind::datasheet, "product")) {
      take(page, nullptr);
    }
  }
  return findings;
}

/// Union of market and product companies with merged evidence, ordered by
/// case-folded name.
inline CompetitorFindings run_competitor_agent(const SemanticProblem&, const MarketFindings& market,
                                               const ProductFindings& product) {
  std::map<std::string, CompetitorEntry> by_name;
  auto entry_for = [&](const std::string& name) -> CompetitorEntry& {
    auto [it, inserted] = by_name.try_emplace(case_fold(name));
    if (inserted) it->second.company_name = text::collapse_whitespace(name);
    return it->second;
  };
  auto add_unique = [](std::vector<std::string>& list, const std::string& value) {
    if (!value.empty() && std::find(list.begin(), list.end(), value) == list.end()) list.push_back(value);
  };
  for (const auto& m : market.entries) {
    auto& e = entry_for(m.company_name);
    add_unique(e.enrichment["snippets"], m.snippet);
    add_unique(e.enrichment["sources"], m.source_ref);
  }
  for (const auto& p : product.entries) {
    auto& e = entry_for(p.company_name);
    add_unique(e.related_products, p.product_name);
    add_unique(e.enrichment["products"], p.product_name);
    add_unique(e.enrichment["sources"], p.source_ref);
  }
  CompetitorFindings out;
  for (auto& [key, entry] : by_name) out.entries.push_back(std::move(entry));
  return out;
}

}  // namespace scout
