#pragma once

// The per-run commercial knowledge base: one normalized record per
// (company, product) pair built from the three agents' findings.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "scout/commercial/agents.hpp"
#include "scout/core/text.hpp"
#include "scout/core/types.hpp"
#include "scout/providers/embedding.hpp"
#include "scout/providers/llm.hpp"

namespace scout {

inline std::string commercial_record_id(const std::string& company, const std::optional<std::string>& product) {
  std::string id = "CR-" + text::slug(company);
  if (product) id += "--" + text::slug(*product);
  return id;
}

/// Gathers evidence per company (union over all three findings, case-folded
/// names ascending), normalizes it through the LLM provider and embeds the
/// description. Pairs that normalize to the same case-folded (company,
/// product) key collapse into the first record with source refs unioned.
inline std::vector<CommercialRecord> build_commercial_kb(const MarketFindings& market, const ProductFindings& product,
                                                         const CompetitorFindings& competitor, const LlmProvider& llm,
                                                         const EmbeddingProvider& embedder, int current_year) {
  std::map<std::string, std::string> display;  // folded -> first-seen name
  std::map<std::string, const MarketEntry*> market_by;
  std::map<std::string, std::vector<const ProductEntry*>> products_by;
  for (const auto& c : competitor.entries) display.try_emplace(case_fold(c.company_name), c.company_name);
  for (const auto& m : market.entries) {
    const auto key = case_fold(m.company_name);
    display.try_emplace(key, m.company_name);
    market_by.try_emplace(key, &m);
  }
  for (const auto& p : product.entries) {
    const auto key = case_fold(p.company_name);
    display.try_emplace(key, p.company_name);
    products_by[key].push_back(&p);
  }

  std::vector<CompanyEvidence> evidence;
  for (const auto& [key, name] : display) {
    if (text::trim(name).empty()) continue;
    const MarketEntry* m = market_by.count(key) ? market_by.at(key) : nullptr;
    const auto pit = products_by.find(key);
    if (pit == products_by.end()) {
      if (!m) continue;  // no page evidence at all
      evidence.push_back({name, std::nullopt, m->snippet, {}, {}, {}, AgentKind::market, {m->source_ref}});
      continue;
    }
    for (const ProductEntry* p : pit->second) {
      CompanyEvidence e{name, p->product_name, m ? m->snippet : std::string(), p->summary, p->specs, p->caption,
                        AgentKind::product, {p->source_ref}};
      if (m) e.source_refs.push_back(m->source_ref);
      evidence.push_back(std::move(e));
    }
  }

  std::vector<CommercialRecord> records;
  std::map<std::pair<std::string, std::string>, std::size_t> index;
  std::set<std::string> ids;
  for (const auto& e : evidence) {
    NormalizedCompany n = llm.normalize(e, current_year);
    if (text::trim(n.company_name).empty()) continue;
    const auto key = std::make_pair(case_fold(n.company_name), n.product_name ? case_fold(*n.product_name) : "");
    if (auto it = index.find(key); it != index.end()) {
      auto& refs = records[it->second].source_refs;
      for (const auto& r : e.source_refs) {
        if (std::find(refs.begin(), refs.end(), r) == refs.end()) refs.push_back(r);
      }
      continue;
    }
    CommercialRecord r;
    r.id = commercial_record_id(n.company_name, n.product_name);
    for (int suffix = 2; !ids.insert(r.id).second; ++suffix) {
      r.id = commercial_record_id(n.company_name, n.product_name) + "-" + std::to_string(suffix);
    }
    r.company_name = n.company_name;
    r.country = n.country;
    r.founding_year = n.founding_year;
    r.funding_status = n.funding_status;
    r.product_name = n.product_name;
    r.description = n.description;
    r.specs = e.specs;
    r.launch_year = n.launch_year;
    r.source_agent = e.source_agent;
    r.source_refs = e.source_refs;
    r.embedding = embedder.embed(r.description);
    index.emplace(key, records.size());
    records.push_back(std::move(r));
  }
  for (auto& r : records) std::sort(r.source_refs.begin(), r.source_refs.end());
  std::sort(records.begin(), records.end(),
            [](const CommercialRecord& a, const CommercialRecord& b) { return a.id < b.id; });
  return records;
}

}  // namespace scout
