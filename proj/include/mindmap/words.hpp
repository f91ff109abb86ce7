// Copyright 2026 The Mindmap Authors.
// Licensed under the Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace mindmap {

/// Transparent hash so string_view lookups do not allocate.
struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept { return std::hash<std::string_view>{}(s); }
};

using WordSet = std::unordered_set<std::string, StringHash, std::equal_to<>>;

/// Code-point order. std::string compares bytes as unsigned char, which for
/// valid UTF-8 coincides with scalar-value order.
inline bool codepoint_less(std::string_view a, std::string_view b) noexcept { return a < b; }

inline std::vector<std::string> sorted_words(const WordSet& set) {
  std::vector<std::string> out(set.begin(), set.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mindmap
