// Copyright 2026 The Mindmap Authors.
// Licensed under the Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "mindmap/linguistic.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "mindmap/errors.hpp"
#include "mindmap/utf8.hpp"

namespace mindmap {

CommonSpan longest_common_span(std::u32string_view a, std::u32string_view b) {
  CommonSpan best;
  if (a.empty() || b.empty()) return best;
  // run[j] = length of the common suffix of a[..i) and b[..j)
  std::vector<std::size_t> prev(b.size() + 1, 0);
  std::vector<std::size_t> run(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      run[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : 0;
      const auto len = run[j];
      if (len == 0) continue;
      const auto sa = i - len;
      const auto sb = j - len;
      if (len > best.length || (len == best.length && (sa < best.start_a || (sa == best.start_a && sb < best.start_b)))) {
        best = {sa, sb, len};
      }
    }
    std::swap(prev, run);
  }
  return best;
}

CommonSubstring longest_common_substring(std::string_view a, std::string_view b) {
  const auto ua = utf8::decode(a);
  const auto ub = utf8::decode(b);
  const auto span = longest_common_span(ua, ub);
  return {utf8::encode(std::u32string_view(ua).substr(span.start_a, span.length)), span.length};
}

std::vector<LexicalMatch> lexical_candidates(std::span<const std::string> vocab, std::string_view seed,
                                             std::size_t min_shared, std::size_t k) {
  std::vector<LexicalMatch> out;
  const auto useed = utf8::decode(seed);
  if (k == 0 || min_shared == 0 || min_shared > useed.size()) return out;
  const std::unordered_set<char32_t> seed_chars(useed.begin(), useed.end());

  for (const auto& word : vocab) {
    if (word == seed) continue;
    const auto uword = utf8::decode(word);
    if (std::none_of(uword.begin(), uword.end(), [&](char32_t c) { return seed_chars.contains(c); })) continue;
    const auto span = longest_common_span(useed, uword);
    if (span.length < min_shared) continue;
    out.push_back({word, utf8::encode(std::u32string_view(useed).substr(span.start_a, span.length)), span.length});
  }
  std::sort(out.begin(), out.end(), [](const LexicalMatch& x, const LexicalMatch& y) {
    if (x.shared_len != y.shared_len) return x.shared_len > y.shared_len;
    return x.word < y.word;
  });
  out.erase(std::unique(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.word == y.word; }),
            out.end());
  if (out.size() > k) out.resize(k);
  return out;
}

std::vector<HomophoneMatch> homophone_candidates(const PhoneticLexicon& lexicon, std::string_view seed,
                                                 ToneMode mode, std::size_t k, HomophoneScope scope) {
  const auto* seed_syllables = lexicon.syllables(seed);
  if (seed_syllables == nullptr) throw OutOfLexiconError(std::string(seed));
  std::vector<HomophoneMatch> out;
  if (k == 0) return out;

  // word -> shared keys, keys visited in code-point order
  std::map<std::string, std::vector<std::string>, std::less<>> shared;
  for (const auto& key : lexicon.keys(seed, mode)) {
    for (const auto& word : lexicon.words_with(key, mode)) {
      if (word != seed) shared[word].push_back(key);
    }
  }

  if (scope == HomophoneScope::WholeWord) {
    std::vector<std::string> seed_seq;
    std::string joined;
    for (const auto& s : *seed_syllables) {
      seed_seq.push_back(s.key(mode));
      joined += (joined.empty() ? "" : " ") + seed_seq.back();
    }
    for (const auto& [word, keys] : shared) {
      const auto* syl = lexicon.syllables(word);
      if (syl->size() != seed_seq.size()) continue;
      bool same = true;
      for (std::size_t i = 0; i < seed_seq.size() && same; ++i) same = (*syl)[i].key(mode) == seed_seq[i];
      if (same) out.push_back({word, joined, keys.size()});
    }
  } else {
    for (const auto& [word, keys] : shared) out.push_back({word, keys.front(), keys.size()});
  }
  // Equal counts: words matching more syllables with the exact tone come first.
  std::vector<std::size_t> exact(out.size(), 0);
  const auto seed_toned = lexicon.keys(seed, ToneMode::Sensitive);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto toned = lexicon.keys(out[i].word, ToneMode::Sensitive);
    std::vector<std::string> common;
    std::set_intersection(seed_toned.begin(), seed_toned.end(), toned.begin(), toned.end(),
                          std::back_inserter(common));
    exact[i] = common.size();
  }
  std::vector<std::size_t> order(out.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (out[x].shared_count != out[y].shared_count) return out[x].shared_count > out[y].shared_count;
    return exact[x] > exact[y];
  });
  std::vector<HomophoneMatch> sorted;
  sorted.reserve(out.size());
  for (auto i : order) sorted.push_back(std::move(out[i]));
  out = std::move(sorted);
  if (out.size() > k) out.resize(k);
  return out;
}

bool shares_character(std::string_view a, std::string_view b) {
  const auto ua = utf8::decode(a);
  const auto ub = utf8::decode(b);
  return std::any_of(ua.begin(), ua.end(), [&](char32_t c) { return ub.find(c) != std::u32string::npos; });
}

bool shares_syllable(const PhoneticLexicon& lexicon, std::string_view a, std::string_view b, ToneMode mode) {
  const auto ka = lexicon.keys(a, mode);
  const auto kb = lexicon.keys(b, mode);
  std::vector<std::string> common;
  std::set_intersection(ka.begin(), ka.end(), kb.begin(), kb.end(), std::back_inserter(common));
  return !common.empty();
}

}  // namespace mindmap
