#pragma once

// Two-level solution taxonomy (root -> category -> subcategory), loaded from
// a JSON config file:
//
//   {"categories": [{"label": "...", "seed_phrases": [...],
//                    "subcategories": [{"label": "...", "seed_phrases": [...]}]}]}

#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "scout/core/error.hpp"
#include "scout/core/text.hpp"
#include "scout/providers/vector.hpp"

namespace scout {

struct TaxonomyNode {
  std::string label;
  std::vector<std::string> seed_phrases;
  std::vector<TaxonomyNode> children;
  Vector centroid;  // filled by compute_centroids()

  bool is_leaf() const { return children.empty(); }
  friend bool operator==(const TaxonomyNode&, const TaxonomyNode&) = default;
};

class Taxonomy {
 public:
  Taxonomy() = default;
  explicit Taxonomy(TaxonomyNode root) : root_(std::move(root)) { validate(); }

  const TaxonomyNode& root() const { return root_; }
  TaxonomyNode& root() { return root_; }
  const std::vector<TaxonomyNode>& categories() const { return root_.children; }
  std::size_t category_count() const { return root_.children.size(); }

  std::size_t subcategory_count() const {
    std::size_t n = 0;
    for (const auto& c : root_.children) n += c.children.size();
    return n;
  }

  static Taxonomy from_json(const nlohmann::json& j) {
    TaxonomyNode root;
    root.label = text::nfc(j.value("label", std::string("root")));
    if (!j.contains("categories") || !j.at("categories").is_array()) {
      throw Error(ErrorCode::config, "taxonomy: missing 'categories' array");
    }
    for (const auto& cj : j.at("categories")) {
      TaxonomyNode category = node_from_json(cj);
      if (!cj.contains("subcategories") || !cj.at("subcategories").is_array()) {
        throw Error(ErrorCode::config, "taxonomy: category '" + category.label + "' has no 'subcategories'");
      }
      for (const auto& sj : cj.at("subcategories")) category.children.push_back(node_from_json(sj));
      root.children.push_back(std::move(category));
    }
    return Taxonomy(std::move(root));
  }

  static Taxonomy load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::config, "cannot open taxonomy file " + path.string());
    try {
      return from_json(nlohmann::json::parse(in));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::config, "taxonomy " + path.string() + ": " + e.what());
    }
  }

 private:
  static TaxonomyNode node_from_json(const nlohmann::json& j) {
    TaxonomyNode node;
    node.label = text::nfc(j.at("label").get<std::string>());
    for (const auto& p : j.value("seed_phrases", std::vector<std::string>{})) {
      node.seed_phrases.push_back(text::nfc(p));
    }
    return node;
  }

  static void check_unique(const std::vector<TaxonomyNode>& siblings) {
    std::set<std::string> seen;
    for (const auto& n : siblings) {
      if (text::trim(n.label).empty()) throw Error(ErrorCode::config, "taxonomy: empty label");
      if (!seen.insert(n.label).second) {
        throw Error(ErrorCode::config, "taxonomy: duplicate sibling label '" + n.label + "'");
      }
    }
  }

  void validate() const {
    check_unique(root_.children);
    for (const auto& c : root_.children) {
      check_unique(c.children);
      for (const auto& s : c.children) {
        if (!s.is_leaf()) throw Error(ErrorCode::config, "taxonomy deeper than two levels at '" + s.label + "'");
      }
    }
  }

  TaxonomyNode root_;
};

}  // namespace scout
