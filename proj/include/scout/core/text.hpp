#pragma once

// UTF-8 text utilities shared by every stage. Unicode-aware pieces (NFC,
// lowercasing, character classes) are delegated to ICU.

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "scout/core/error.hpp"

namespace scout::text {

inline std::string nfc(std::string_view input) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* normalizer = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) {
    throw Error(ErrorCode::config, "ICU NFC normalizer unavailable");
  }
  auto source = icu::UnicodeString::fromUTF8(
      icu::StringPiece(input.data(), static_cast<int32_t>(input.size())));
  if (normalizer->isNormalized(source, status) && U_SUCCESS(status)) {
    return std::string(input);
  }
  status = U_ZERO_ERROR;
  icu::UnicodeString normalized = normalizer->normalize(source, status);
  if (U_FAILURE(status)) {
    throw Error(ErrorCode::invalid_input, "text is not valid UTF-8");
  }
  std::string out;
  normalized.toUTF8String(out);
  return out;
}

/// Full Unicode lowercase (root locale).
inline std::string to_lower(std::string_view input) {
  auto s = icu::UnicodeString::fromUTF8(
      icu::StringPiece(input.data(), static_cast<int32_t>(input.size())));
  s.toLower(icu::Locale::getRoot());
  std::string out;
  s.toUTF8String(out);
  return out;
}

/// Lowercases ASCII letters only, so byte offsets are preserved.
inline std::string ascii_lower(std::string_view input) {
  std::string out(input);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

inline bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

inline std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

inline std::string collapse_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending = false;
  for (char c : s) {
    if (is_space(c)) {
      pending = !out.empty();
    } else {
      if (pending) out.push_back(' ');
      pending = false;
      out.push_back(c);
    }
  }
  return out;
}

inline std::vector<char32_t> code_points(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  const auto* bytes = reinterpret_cast<const uint8_t*>(s.data());
  const auto length = static_cast<int32_t>(s.size());
  int32_t i = 0;
  while (i < length) {
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    out.push_back(c < 0 ? char32_t{0xFFFD} : static_cast<char32_t>(c));
  }
  return out;
}

inline void append_utf8(std::string& out, char32_t cp) {
  uint8_t buf[U8_MAX_LENGTH];
  int32_t len = 0;
  UBool error = false;
  U8_APPEND(buf, len, U8_MAX_LENGTH, static_cast<UChar32>(cp), error);
  if (error) {
    U8_APPEND(buf, len, U8_MAX_LENGTH, 0xFFFD, error);
  }
  out.append(reinterpret_cast<const char*>(buf), static_cast<std::size_t>(len));
}

inline std::size_t length(std::string_view s) { return code_points(s).size(); }

/// First `max_chars` code points of s.
inline std::string truncate(std::string_view s, std::size_t max_chars) {
  std::string out;
  std::size_t n = 0;
  for (char32_t cp : code_points(s)) {
    if (n++ == max_chars) break;
    append_utf8(out, cp);
  }
  return out;
}

inline bool is_word_char(char32_t cp) { return u_isalnum(static_cast<UChar32>(cp)) != 0; }
inline bool is_alpha(char32_t cp) { return u_isalpha(static_cast<UChar32>(cp)) != 0; }

/// True when no word character ends immediately before byte offset `pos`.
inline bool boundary_before(std::string_view s, std::size_t pos) {
  if (pos == 0) return true;
  const auto* bytes = reinterpret_cast<const uint8_t*>(s.data());
  auto i = static_cast<int32_t>(pos);
  UChar32 c;
  U8_PREV(bytes, 0, i, c);
  return c < 0 || !is_word_char(static_cast<char32_t>(c));
}

/// True when no word character starts at byte offset `pos`.
inline bool boundary_after(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) return true;
  const auto* bytes = reinterpret_cast<const uint8_t*>(s.data());
  auto i = static_cast<int32_t>(pos);
  UChar32 c;
  U8_NEXT(bytes, i, static_cast<int32_t>(s.size()), c);
  return c < 0 || !is_word_char(static_cast<char32_t>(c));
}

namespace detail {
template <class Pred>
std::vector<std::string> lowercase_runs(std::string_view s, Pred keep) {
  std::vector<std::string> tokens;
  std::string current;
  for (char32_t cp : code_points(s)) {
    if (keep(cp)) {
      append_utf8(current, static_cast<char32_t>(u_tolower(static_cast<UChar32>(cp))));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}
}  // namespace detail

/// Lowercased maximal runs of alphanumeric characters.
inline std::vector<std::string> alnum_tokens(std::string_view s) {
  return detail::lowercase_runs(s, is_word_char);
}

/// Lowercased maximal runs of alphabetic characters.
inline std::vector<std::string> alpha_tokens(std::string_view s) {
  return detail::lowercase_runs(s, is_alpha);
}

inline std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out.append(sep);
    out.append(parts[i]);
  }
  return out;
}

/// Lowercase ASCII slug: alphanumeric runs joined by '-'.
inline std::string slug(std::string_view s) {
  std::string out;
  bool dash = false;
  for (unsigned char c : s) {
    if (std::isalnum(c)) {
      if (dash && !out.empty()) out.push_back('-');
      dash = false;
      out.push_back(static_cast<char>(std::tolower(c)));
    } else {
      dash = true;
    }
  }
  return out;
}

}  // namespace scout::text
