#pragma once

// Web access for the commercial agents. The fixture client serves a local
// directory of JSON page files:
//
//   {"url": "...", "kind": "search_result" | "company" | "datasheet",
//    "title": "...", "body": "..."}
//
// Body grammars (one field per line, "key: value"):
//   search_result  entries separated by blank lines, each with
//                  "company: <name>" and "snippet: <text>"
//   company        "company: <name>" followed by free profile text
//   datasheet      "company:", "product:" and optional "summary:" headers,
//                  then one "<spec key>: <value>" line per specification

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "scout/core/error.hpp"
#include "scout/core/text.hpp"

namespace scout {

enum class PageKind { search_result, company, datasheet };

constexpr std::string_view to_string(PageKind k) noexcept {
  switch (k) {
    case PageKind::search_result: return "search_result";
    case PageKind::company: return "company";
    case PageKind::datasheet: return "datasheet";
  }
  return "";
}

inline PageKind page_kind_from_string(std::string_view s) {
  for (auto k : {PageKind::search_result, PageKind::company, PageKind::datasheet}) {
    if (to_string(k) == s) return k;
  }
  throw Error(ErrorCode::parse, "unknown page kind '" + std::string(s) + "'");
}

struct WebPage {
  std::string url;
  PageKind kind = PageKind::search_result;
  std::string title;
  std::string body;
};

class WebClient {
 public:
  virtual ~WebClient() = default;
  virtual std::string name() const = 0;
  /// Pages of `kind` mentioning any of `terms` (case-insensitive), in a
  /// deterministic order.
  virtual std::vector<WebPage> search(const std::vector<std::string>& terms, PageKind kind) const = 0;
};

class FixtureWebClient final : public WebClient {
 public:
  explicit FixtureWebClient(std::vector<WebPage> pages) : pages_(std::move(pages)) {
    std::sort(pages_.begin(), pages_.end(), [](const WebPage& a, const WebPage& b) { return a.url < b.url; });
    for (const auto& p : pages_) haystacks_.push_back(text::to_lower(p.title + "\n" + p.body));
  }

  /// Loads every *.json file in `dir`. A missing directory is an error; an
  /// empty one is not.
  static FixtureWebClient from_directory(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) {
      throw Error(ErrorCode::agent, "web fixture directory not found: " + dir.string());
    }
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    std::vector<WebPage> pages;
    for (const auto& f : files) {
      std::ifstream in(f);
      try {
        const auto j = nlohmann::json::parse(in);
        pages.push_back({text::nfc(j.at("url").get<std::string>()),
                         page_kind_from_string(j.at("kind").get<std::string>()),
                         text::nfc(j.value("title", std::string())), text::nfc(j.at("body").get<std::string>())});
      } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::parse, "web fixture " + f.string() + ": " + e.what());
      }
    }
    return FixtureWebClient(std::move(pages));
  }

  std::string name() const override { return "fixture"; }

  std::vector<WebPage> search(const std::vector<std::string>& terms, PageKind kind) const override {
    std::vector<std::string> needles;
    for (const auto& t : terms) {
      if (!t.empty()) needles.push_back(text::to_lower(t));
    }
    std::vector<WebPage> hits;
    for (std::size_t i = 0; i < pages_.size(); ++i) {
      if (pages_[i].kind != kind) continue;
      const bool any = std::any_of(needles.begin(), needles.end(),
                                   [&](const std::string& n) { return haystacks_[i].find(n) != std::string::npos; });
      if (any) hits.push_back(pages_[i]);
    }
    return hits;
  }

  const std::vector<WebPage>& pages() const { return pages_; }

 private:
  std::vector<WebPage> pages_;
  std::vector<std::string> haystacks_;
};

}  // namespace scout
