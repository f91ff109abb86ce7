// Copyright 2026 The Mindmap Authors.
// Licensed under the Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mindmap/lexicon.hpp"

namespace mindmap {

struct CommonSubstring {
  std::string text;
  std::size_t length = 0;  // in Unicode scalar values
};

/// Longest contiguous common substring, measured in Unicode scalar values.
/// Among equal-length candidates the one starting earliest in `a` wins, then
/// earliest in `b`. Throws std::invalid_argument on malformed UTF-8.
CommonSubstring longest_common_substring(std::string_view a, std::string_view b);

/// Same, over already-decoded text. Returns (start_a, start_b, length).
struct CommonSpan {
  std::size_t start_a = 0;
  std::size_t start_b = 0;
  std::size_t length = 0;
};
CommonSpan longest_common_span(std::u32string_view a, std::u32string_view b);

struct LexicalMatch {
  std::string word;
  std::string shared;
  std::size_t shared_len = 0;
};

/// Up to `k` vocabulary words (never `seed`) whose longest common substring with
/// `seed` has at least `min_shared` characters. Sorted by shared length
/// descending, then code-point order.
std::vector<LexicalMatch> lexical_candidates(std::span<const std::string> vocab, std::string_view seed,
                                             std::size_t min_shared, std::size_t k);

enum class HomophoneScope {
  AnySyllable,  // share at least one syllable
  WholeWord,    // identical syllable sequence
};

struct HomophoneMatch {
  std::string word;
  std::string shared_syllable;  // first shared key in code-point order; whole pronunciation for WholeWord
  std::size_t shared_count = 0;
};

/// Up to `k` lexicon words (never `seed`) sharing a syllable with `seed` under
/// `mode`. Sorted by number of shared syllable keys descending, then by number
/// of syllables shared with the exact tone, then code-point order. Throws OutOfLexiconError when `seed` is not in the lexicon.
std::vector<HomophoneMatch> homophone_candidates(const PhoneticLexicon& lexicon, std::string_view seed,
                                                 ToneMode mode, std::size_t k,
                                                 HomophoneScope scope = HomophoneScope::AnySyllable);

/// True when the two words share at least one character.
bool shares_character(std::string_view a, std::string_view b);

/// True when both words are in the lexicon and share a syllable key under `mode`.
bool shares_syllable(const PhoneticLexicon& lexicon, std::string_view a, std::string_view b, ToneMode mode);

}  // namespace mindmap
