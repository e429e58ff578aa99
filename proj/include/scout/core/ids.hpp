#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "scout/core/error.hpp"

namespace scout {

/// Uppercase of `raw` with everything outside [A-Za-z0-9] removed.
/// Idempotent on valid ids.
inline std::string canonicalize_patent_id(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (unsigned char c : raw) {
    if (c < 0x80 && std::isalnum(c)) out.push_back(static_cast<char>(std::toupper(c)));
  }
  if (out.empty()) {
    throw Error(ErrorCode::invalid_id, "patent id '" + std::string(raw) + "' is empty after normalization");
  }
  return out;
}

}  // namespace scout
