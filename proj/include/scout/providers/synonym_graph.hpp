#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "scout/core/error.hpp"
#include "scout/core/term_matcher.hpp"
#include "scout/core/text.hpp"

namespace scout {

/// Term -> canonical term substitution map. Keys are matched
/// case-insensitively on word boundaries, longest match first.
class SynonymGraph {
 public:
  SynonymGraph() = default;

  /// Throws ConfigError when a key is also the canonical value of some key,
  /// which would make the substitution order-dependent.
  explicit SynonymGraph(std::map<std::string, std::string> mapping) {
    std::set<std::string> canonical;
    for (const auto& [key, value] : mapping) canonical.insert(text::ascii_lower(text::nfc(value)));
    std::vector<std::string> keys;
    for (const auto& [key, value] : mapping) {
      const std::string k = text::nfc(key);
      if (text::trim(k).empty()) throw Error(ErrorCode::config, "synonym graph: empty key");
      if (canonical.count(text::ascii_lower(k)) != 0) {
        throw Error(ErrorCode::config, "synonym graph: key '" + k + "' is also a canonical term");
      }
      keys.push_back(k);
      values_.push_back(text::nfc(value));
    }
    mapping_ = std::move(mapping);
    matcher_ = TermMatcher(std::move(keys));
  }

  static SynonymGraph from_json(const nlohmann::json& j) {
    return SynonymGraph(j.get<std::map<std::string, std::string>>());
  }

  static SynonymGraph load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::config, "cannot open synonym graph " + path.string());
    try {
      return from_json(nlohmann::json::parse(in));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::config, "synonym graph " + path.string() + ": " + e.what());
    }
  }

  bool empty() const { return mapping_.empty(); }
  const std::map<std::string, std::string>& mapping() const { return mapping_; }

  /// Single left-to-right pass; substituted output is not rescanned.
  std::string apply(std::string_view input) const {
    if (matcher_.empty()) return std::string(input);
    std::string out;
    out.reserve(input.size());
    std::size_t cursor = 0;
    for (const auto& m : matcher_.find_all(input)) {
      out.append(input.substr(cursor, m.begin - cursor));
      out.append(values_[m.term]);
      cursor = m.end;
    }
    out.append(input.substr(cursor));
    return out;
  }

 private:
  std::map<std::string, std::string> mapping_;
  std::vector<std::string> values_;
  TermMatcher matcher_;
};

inline std::string apply_synonym_graph(std::string_view input, const SynonymGraph& graph) {
  return graph.apply(input);
}

}  // namespace scout
