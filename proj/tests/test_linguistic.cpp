// Copyright 2026 The Mindmap Authors.
// Licensed under the Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "mindmap/linguistic.hpp"
#include "mindmap/utf8.hpp"
#include "test_support.hpp"

namespace mindmap {
namespace {

PhoneticLexicon shu_lexicon() {
  return PhoneticLexicon::from_entries({{"树", {{"shu", 4}}}, {"书", {{"shu", 1}}}, {"数", {{"shu", 4}}}});
}

std::vector<std::string> words_of(const std::vector<HomophoneMatch>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(m.word);
  return out;
}

TEST(Lcs, Examples) {
  auto r = longest_common_substring("医院", "住院");
  EXPECT_EQ(r.text, "院");
  EXPECT_EQ(r.length, 1u);
  r = longest_common_substring("abc", "abc");
  EXPECT_EQ(r.text, "abc");
  r = longest_common_substring("abcdef", "zabcy");
  EXPECT_EQ(r.text, "abc");
  EXPECT_EQ(r.length, 3u);
  EXPECT_EQ(longest_common_substring("", "abc").length, 0u);
}

TEST(Lcs, MatchesEnumerationOracle) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 3000; ++i) {
    const auto a = testing::random_mixed(rng, 12), b = testing::random_mixed(rng, 12);
    const auto [text, len] = testing::enumerate_lcs(a, b);
    const auto got = longest_common_substring(utf8::encode(a), utf8::encode(b));
    ASSERT_EQ(got.length, len);
    ASSERT_EQ(got.text, utf8::encode(text));
  }
}

TEST(Lcs, Properties) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 1000; ++i) {
    const auto a = utf8::encode(testing::random_mixed(rng, 10));
    const auto b = utf8::encode(testing::random_mixed(rng, 10));
    const auto ab = longest_common_substring(a, b), ba = longest_common_substring(b, a);
    EXPECT_EQ(ab.length, ba.length);
    EXPECT_LE(ab.length, std::min(utf8::length(a), utf8::length(b)));
    EXPECT_NE(a.find(ab.text), std::string::npos);
    EXPECT_NE(b.find(ab.text), std::string::npos);
    EXPECT_EQ(longest_common_substring(a, a).text, a);
  }
}

TEST(Lexical, Example) {
  const std::vector<std::string> vocab{"住院", "医生", "公园", "医院"};
  const auto ms = lexical_candidates(vocab, "医院", 1, 10);
  ASSERT_EQ(ms.size(), 2u);
  EXPECT_EQ(ms[0].word, "住院");
  EXPECT_EQ(ms[0].shared, "院");
  EXPECT_EQ(ms[1].word, "医生");
  EXPECT_EQ(ms[1].shared, "医");
  EXPECT_TRUE(lexical_candidates(vocab, "医院", 3, 10).empty());
}

TEST(Lexical, SharedIsCommonSubstring) {
  std::mt19937_64 rng(2);
  std::vector<std::string> vocab;
  for (int i = 0; i < 300; ++i) vocab.push_back(utf8::encode(testing::random_mixed(rng, 6)));
  const std::string seed = "医院abc";
  for (const auto& m : lexical_candidates(vocab, seed, 1, 1000)) {
    EXPECT_NE(m.word, seed);
    EXPECT_NE(m.word.find(m.shared), std::string::npos);
    EXPECT_NE(seed.find(m.shared), std::string::npos);
    EXPECT_EQ(m.shared_len, utf8::length(m.shared));
  }
}

TEST(Homophone, ToneModes) {
  const auto lex = shu_lexicon();
  EXPECT_EQ(words_of(homophone_candidates(lex, "树", ToneMode::Sensitive, 10)), (std::vector<std::string>{"数"}));
  EXPECT_EQ(words_of(homophone_candidates(lex, "树", ToneMode::Insensitive, 10)),
            (std::vector<std::string>{"数", "书"}));
  EXPECT_THROW(homophone_candidates(lex, "马", ToneMode::Insensitive, 10), OutOfLexiconError);
}

TEST(Homophone, SymmetricOnFixture) {
  const auto& lex = testing::fixture_assets().phonetic;
  const auto words = lex.words();
  for (std::size_t i = 0; i < words.size(); i += 37) {
    const auto& a = words[i];
    for (const auto& m : homophone_candidates(lex, a, ToneMode::Insensitive, 100000)) {
      ASSERT_NE(m.word, a);
      const auto back = words_of(homophone_candidates(lex, m.word, ToneMode::Insensitive, 100000));
      EXPECT_TRUE(std::find(back.begin(), back.end(), a) != back.end()) << a << " " << m.word;
    }
  }
}

TEST(Homophone, WholeWordScope) {
  const auto lex = PhoneticLexicon::from_entries(
      {{"事实", {{"shi", 4}, {"shi", 2}}}, {"实施", {{"shi", 2}, {"shi", 1}}}, {"誓师", {{"shi", 4}, {"shi", 1}}}});
  EXPECT_EQ(words_of(homophone_candidates(lex, "事实", ToneMode::Insensitive, 10, HomophoneScope::WholeWord)),
            (std::vector<std::string>{"实施", "誓师"}));
  EXPECT_TRUE(homophone_candidates(lex, "事实", ToneMode::Sensitive, 10, HomophoneScope::WholeWord).empty());
}

}  // namespace
}  // namespace mindmap
