#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "scout/core/text.hpp"

namespace scout {

/// Tokens that end in '.' without ending a sentence (compared lowercase,
/// without the final period).
inline const std::set<std::string>& sentence_abbreviations() {
  static const std::set<std::string> abbreviations = {
      "al",  "approx", "ca",  "cf",  "co",   "corp", "dr",   "e.g", "eq",  "etc",
      "fig", "figs",   "i.e", "inc", "incl", "ltd",  "mr",   "mrs", "ms",  "no",
      "nos", "ref",    "resp", "u.s", "vol",  "vs",   "wt",
  };
  return abbreviations;
}

/// Splits after any terminator character that is followed by whitespace,
/// except a '.' that closes a known abbreviation or a bare number (claim and
/// list enumerators such as "2."). Sentences are trimmed and
/// keep their terminator.
inline std::vector<std::string> split_sentences(std::string_view input,
                                                std::string_view terminators = ".;!") {
  std::vector<std::string> sentences;
  std::size_t start = 0;
  auto emit = [&](std::size_t end) {
    std::string s = text::trim(input.substr(start, end - start));
    if (!s.empty()) sentences.push_back(std::move(s));
    start = end;
  };
  for (std::size_t i = 0; i + 1 < input.size(); ++i) {
    const char c = input[i];
    if (terminators.find(c) == std::string_view::npos || !text::is_space(input[i + 1])) continue;
    if (c == '.') {
      std::size_t b = i;
      while (b > start && !text::is_space(input[b - 1])) --b;
      std::string token = text::ascii_lower(input.substr(b, i - b));
      while (!token.empty() && (token.front() == '(' || token.front() == '"')) token.erase(0, 1);
      if (sentence_abbreviations().count(token) != 0) continue;
      if (!token.empty() && std::all_of(token.begin(), token.end(), [](char d) { return d >= '0' && d <= '9'; })) {
        continue;
      }
    }
    emit(i + 1);
  }
  emit(input.size());
  return sentences;
}

}  // namespace scout
