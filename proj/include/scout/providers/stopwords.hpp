#pragma once

#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <string_view>

#include "scout/core/error.hpp"
#include "scout/core/text.hpp"

namespace scout {

/// Versioned English stopword list used for keyword extraction.
///
/// The built-in list mirrors data/stopwords_v1.txt; a file can be loaded to
/// override it. Files hold one word per line, '#' starts a comment, and an
/// optional "# version: N" header names the version.
class StopwordList {
 public:
  static constexpr std::string_view kBuiltinVersion = "1";

  StopwordList() = default;
  StopwordList(std::string version, std::set<std::string> words)
      : version_(std::move(version)), words_(std::move(words)) {}

  static const StopwordList& builtin() {
    static const StopwordList list = [] {
      std::set<std::string> words;
      for (std::string_view w : kBuiltinWords) words.emplace(w);
      return StopwordList(std::string(kBuiltinVersion), std::move(words));
    }();
    return list;
  }

  static StopwordList load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::config, "cannot open stopword file " + path.string());
    std::string version = "unversioned";
    std::set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
      std::string t = text::trim(line);
      if (t.empty()) continue;
      if (t.front() == '#') {
        const std::string_view prefix = "# version:";
        if (t.rfind(prefix, 0) == 0) version = text::trim(std::string_view(t).substr(prefix.size()));
        continue;
      }
      words.insert(text::to_lower(t));
    }
    return StopwordList(std::move(version), std::move(words));
  }

  bool contains(std::string_view lowercase_word) const {
    return words_.count(std::string(lowercase_word)) != 0;
  }
  const std::string& version() const { return version_; }
  const std::set<std::string>& words() const { return words_; }

 private:
  static constexpr std::string_view kBuiltinWords[] = {
      "a",       "about",   "above",     "after",    "again",    "against",   "all",
      "also",    "am",      "an",        "and",      "any",      "are",       "as",
      "at",      "be",      "because",   "been",     "before",   "being",     "below",
      "between", "both",    "but",       "by",       "can",      "could",     "did",
      "do",      "does",    "doing",     "down",     "during",   "each",      "either",
      "etc",     "few",     "for",       "from",     "further",  "had",       "has",
      "have",    "having",  "he",        "her",      "here",     "herein",    "hers",
      "him",     "his",     "how",       "however",  "i",        "if",        "in",
      "into",    "is",      "it",        "its",      "itself",   "just",      "may",
      "me",      "might",   "more",      "most",     "must",     "my",        "need",
      "needs",   "no",      "nor",       "not",      "of",       "off",       "on",
      "once",    "one",     "only",      "or",       "other",    "our",       "ours",
      "out",     "over",    "own",       "per",      "said",     "same",      "she",
      "should",  "so",      "some",      "such",     "than",     "that",      "the",
      "their",   "them",    "then",      "there",    "thereby",  "therefore", "thereof",
      "these",   "they",    "this",      "those",    "through",  "thus",      "to",
      "too",     "under",   "until",     "up",       "upon",     "us",        "use",
      "used",    "using",   "very",      "via",      "was",      "we",        "were",
      "what",    "when",    "where",     "whereas",  "wherein",  "which",     "while",
      "who",     "whom",    "why",       "will",     "with",     "within",    "without",
      "would",   "you",     "your",      "yours",
  };

  std::string version_;
  std::set<std::string> words_;
};

}  // namespace scout
