#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "scout/core/error.hpp"
#include "scout/core/term_matcher.hpp"
#include "scout/core/types.hpp"

namespace scout {

/// Category -> term list for lexicon-based tagging. Only MATERIAL, SYSTEM
/// and METHOD may be listed; people and organisations come from the
/// structured patent fields.
class Gazetteer {
 public:
  Gazetteer() = default;

  explicit Gazetteer(std::map<EntityCategory, std::vector<std::string>> terms) : terms_(std::move(terms)) {
    std::vector<std::string> flat;
    std::set<std::string> seen;
    for (const auto& [category, list] : terms_) {
      if (category != EntityCategory::material && category != EntityCategory::system &&
          category != EntityCategory::method) {
        throw Error(ErrorCode::config, "gazetteer category " + std::string(to_string(category)) + " is not allowed");
      }
      for (const auto& t : list) {
        const std::string term = text::nfc(t);
        if (text::trim(term).empty() || !seen.insert(text::ascii_lower(term)).second) continue;
        flat.push_back(term);
        categories_.push_back(category);
      }
    }
    matcher_ = TermMatcher(std::move(flat));
  }

  static Gazetteer from_json(const nlohmann::json& j) {
    std::map<EntityCategory, std::vector<std::string>> terms;
    for (auto it = j.begin(); it != j.end(); ++it) {
      terms[entity_category_from_string(it.key())] = it.value().get<std::vector<std::string>>();
    }
    return Gazetteer(std::move(terms));
  }

  static Gazetteer load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::config, "cannot open gazetteer " + path.string());
    try {
      return from_json(nlohmann::json::parse(in));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::config, "gazetteer " + path.string() + ": " + e.what());
    }
  }

  const TermMatcher& matcher() const { return matcher_; }
  EntityCategory category_of(std::size_t term_index) const { return categories_[term_index]; }

 private:
  std::map<EntityCategory, std::vector<std::string>> terms_;
  std::vector<EntityCategory> categories_;
  TermMatcher matcher_;
};

inline constexpr std::string_view kNameListSeparator = "; ";

/// The synthesized text a name-list tag's span points into.
inline std::string name_listing(const std::vector<std::string>& names) {
  return text::join(names, kNameListSeparator);
}

/// Returns the text of a tagged field; name lists are synthesized.
inline std::string tagged_field_text(const PatentDocument& doc, std::string_view field) {
  if (field == "inventors") return name_listing(doc.inventors);
  if (field == "applicants") return name_listing(doc.applicants);
  if (field == "title") return doc.title;
  if (field == "abstract") return doc.abstract;
  if (field == "claims") return doc.claims;
  throw Error(ErrorCode::invalid_input, "unknown tagged field '" + std::string(field) + "'");
}

/// INVENTOR / APPLICANT tags for each listed name, then gazetteer tags over
/// title, abstract and claims (longest match, then earliest start).
inline std::vector<EntityTag> tag_entities(const PatentDocument& doc, const Gazetteer& gazetteer) {
  std::vector<EntityTag> tags;
  auto tag_names = [&](const std::vector<std::string>& names, EntityCategory category, const char* field) {
    std::size_t offset = 0;
    for (const auto& name : names) {
      if (!name.empty()) tags.push_back({name, category, offset, offset + name.size(), field});
      offset += name.size() + kNameListSeparator.size();
    }
  };
  tag_names(doc.inventors, EntityCategory::inventor, "inventors");
  tag_names(doc.applicants, EntityCategory::applicant, "applicants");

  for (const char* field : {"title", "abstract", "claims"}) {
    const std::string& body = field == std::string_view("title")      ? doc.title
                              : field == std::string_view("abstract") ? doc.abstract
                                                                      : doc.claims;
    for (const auto& m : gazetteer.matcher().find_all(body)) {
      tags.push_back({body.substr(m.begin, m.end - m.begin), gazetteer.category_of(m.term), m.begin, m.end, field});
    }
  }
  return tags;
}

}  // namespace scout
