#pragma once

#include <filesystem>
#include <fstream>
#include <future>
#include <string>
#include <vector>

#include <json.hpp>

#include "scout/core/error.hpp"
#include "scout/core/ids.hpp"
#include "scout/core/text.hpp"
#include "scout/core/types.hpp"
#include "scout/providers/synonym_graph.hpp"

namespace scout {

class PatentConnector {
 public:
  virtual ~PatentConnector() = default;
  virtual std::string name() const = 0;
  /// Must be safe to call concurrently.
  virtual std::vector<PatentDocument> search(const QuerySpec& query) const = 0;
};

/// Parses one corpus record:
/// {id, title, abstract, claims, description, inventors[], applicants[],
///  filing_date, forward_citations, cited_ids[]}. Text is NFC-normalized.
inline PatentDocument patent_from_record(const nlohmann::json& j, std::string source) {
  PatentDocument d;
  try {
    d.raw_id = text::nfc(j.at("id").get<std::string>());
    d.canonical_id = canonicalize_patent_id(d.raw_id);
    d.title = text::nfc(j.value("title", std::string()));
    d.abstract = text::nfc(j.value("abstract", std::string()));
    d.claims = text::nfc(j.value("claims", std::string()));
    d.description = text::nfc(j.value("description", std::string()));
    for (const auto& n : j.value("inventors", std::vector<std::string>{})) d.inventors.push_back(text::nfc(n));
    for (const auto& n : j.value("applicants", std::vector<std::string>{})) d.applicants.push_back(text::nfc(n));
    d.filing_date = parse_date(j.at("filing_date").get<std::string>());
    d.forward_citations = j.value("forward_citations", std::int64_t{0});
    for (const auto& c : j.value("cited_ids", std::vector<std::string>{})) {
      d.cited_ids.push_back(canonicalize_patent_id(c));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse, std::string("patent record: ") + e.what());
  }
  if (d.forward_citations < 0) throw Error(ErrorCode::parse, "negative forward_citations for " + d.raw_id);
  d.source = std::move(source);
  return d;
}

/// Reads a JSON-lines corpus (one record per line, blank lines ignored).
inline std::vector<PatentDocument> load_corpus(const std::filesystem::path& path,
                                               const std::string& source = "fixture") {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::retrieval, "cannot open corpus " + path.string());
  std::vector<PatentDocument> docs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    try {
      docs.push_back(patent_from_record(nlohmann::json::parse(line), source));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::parse, path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    } catch (const Error& e) {
      throw Error(ErrorCode::parse, path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return docs;
}

/// In-memory connector over a fixture corpus. A document matches when every
/// query term, after synonym substitution, occurs case-insensitively in its
/// synonym-substituted title + abstract. Results follow corpus order.
class FixtureConnector final : public PatentConnector {
 public:
  FixtureConnector(std::vector<PatentDocument> corpus, SynonymGraph synonyms = {})
      : corpus_(std::move(corpus)), synonyms_(std::move(synonyms)) {
    haystacks_.reserve(corpus_.size());
    for (const auto& d : corpus_) {
      haystacks_.push_back(text::to_lower(synonyms_.apply(d.title + " " + d.abstract)));
    }
  }

  static FixtureConnector from_file(const std::filesystem::path& path, SynonymGraph synonyms = {}) {
    return FixtureConnector(load_corpus(path), std::move(synonyms));
  }

  std::string name() const override { return "fixture"; }

  std::vector<PatentDocument> search(const QuerySpec& query) const override {
    std::vector<std::string> needles;
    for (const auto& t : query.terms) needles.push_back(text::to_lower(synonyms_.apply(t)));
    std::vector<PatentDocument> hits;
    for (std::size_t i = 0; i < corpus_.size(); ++i) {
      bool all = !needles.empty();
      for (const auto& n : needles) {
        if (haystacks_[i].find(n) == std::string::npos) {
          all = false;
          break;
        }
      }
      if (all) hits.push_back(corpus_[i]);
    }
    return hits;
  }

  const std::vector<PatentDocument>& corpus() const { return corpus_; }

 private:
  std::vector<PatentDocument> corpus_;
  SynonymGraph synonyms_;
  std::vector<std::string> haystacks_;
};

/// Union of connector results over all queries in (variant_index,
/// result order) order. Searches run concurrently; joining in variant order
/// keeps the output independent of scheduling. Duplicates are kept.
inline std::vector<PatentDocument> retrieve(std::vector<QuerySpec> queries, const PatentConnector& connector) {
  if (queries.empty()) throw Error(ErrorCode::invalid_input, "retrieve needs at least one query");
  std::stable_sort(queries.begin(), queries.end(),
                   [](const QuerySpec& a, const QuerySpec& b) { return a.variant_index < b.variant_index; });
  std::vector<std::future<std::vector<PatentDocument>>> pending;
  pending.reserve(queries.size());
  for (const auto& q : queries) {
    pending.push_back(std::async(std::launch::async, [&connector, &q] { return connector.search(q); }));
  }
  std::vector<PatentDocument> out;
  for (std::size_t i = 0; i < pending.size(); ++i) {
    std::vector<PatentDocument> hits;
    try {
      hits = pending[i].get();
    } catch (const std::exception& e) {
      for (std::size_t k = i + 1; k < pending.size(); ++k) pending[k].wait();
      throw Error(ErrorCode::retrieval, "connector '" + connector.name() + "' failed on variant " +
                                            std::to_string(queries[i].variant_index) + " [" +
                                            text::join(queries[i].terms, ", ") + "]: " + e.what());
    }
    for (auto& d : hits) {
      d.canonical_id = canonicalize_patent_id(d.raw_id);
      out.push_back(std::move(d));
    }
  }
  return out;
}

}  // namespace scout
