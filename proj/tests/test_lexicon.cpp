// Copyright 2026 The Mindmap Authors.
// Licensed under the Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include <gtest/gtest.h>

#include <algorithm>

#include "mindmap/errors.hpp"
#include "mindmap/lexicon.hpp"
#include "test_support.hpp"

namespace mindmap {
namespace {

using testing::write_temp;

TEST(Phonetic, SingleLine) {
  const auto lex = PhoneticLexicon::load(write_temp("shu.tsv", "树\tshu4\n"));
  const auto* s = lex.syllables("树");
  ASSERT_NE(s, nullptr);
  ASSERT_EQ(s->size(), 1u);
  EXPECT_EQ((*s)[0].base, "shu");
  EXPECT_EQ((*s)[0].tone, 4);
}

TEST(Phonetic, EmptyAndMalformed) {
  EXPECT_EQ(PhoneticLexicon::load(write_temp("empty.tsv", "")).size(), 0u);
  EXPECT_THROW(PhoneticLexicon::load(write_temp("notab.tsv", "树 shu4\n")), FormatError);
  EXPECT_THROW(Syllable::parse("shu9"), FormatError);
  EXPECT_THROW(Syllable::parse("4"), FormatError);
  EXPECT_EQ(Syllable::parse("ma").tone, 0);
}

TEST(Phonetic, DuplicateLastWinsWithWarning) {
  const auto lex = PhoneticLexicon::load(write_temp("dup.tsv", "树\tshu4\n树\tshu1\n"));
  EXPECT_EQ((*lex.syllables("树"))[0].tone, 1);
  EXPECT_FALSE(lex.warnings().empty());
}

TEST(Phonetic, ReverseIndexConsistent) {
  const auto lex = PhoneticLexicon::load(testing::fixture_dir() / "phonetic.tsv");
  for (const auto mode : {ToneMode::Insensitive, ToneMode::Sensitive}) {
    for (const auto& w : lex.words()) {
      for (const auto& key : lex.keys(w, mode)) {
        const auto& ws = lex.words_with(key, mode);
        EXPECT_TRUE(std::binary_search(ws.begin(), ws.end(), w)) << w << " " << key;
        for (const auto& other : ws) {
          const auto ks = lex.keys(other, mode);
          EXPECT_TRUE(std::find(ks.begin(), ks.end(), key) != ks.end());
        }
      }
    }
  }
}

TEST(Phonetic, LoadOrderIndependent) {
  const auto a = PhoneticLexicon::load(write_temp("o1.tsv", "树\tshu4\n书\tshu1\n马\tma3\n"));
  const auto b = PhoneticLexicon::load(write_temp("o2.tsv", "马\tma3\n书\tshu1\n树\tshu4\n"));
  EXPECT_EQ(a.words(), b.words());
  EXPECT_EQ(a.words_with("shu", ToneMode::Insensitive), b.words_with("shu", ToneMode::Insensitive));
}

TEST(Tags, ParseUntaggedAndConflicts) {
  const auto pos = write_temp("pos.tsv", "医院\tnoun\n住院\tverb\n住院\tnoun\n");
  const auto dom = write_temp("dom.tsv", "医院\tmedical\n");
  const auto tags = TagLexicon::load(pos, dom);
  EXPECT_EQ(tags.pos("医院"), "noun");
  EXPECT_EQ(tags.pos("住院"), "noun");
  EXPECT_EQ(tags.domain("医院"), "medical");
  EXPECT_EQ(tags.pos("天鹅"), kUntagged);
  EXPECT_EQ(tags.domain("天鹅"), kUntagged);
  EXPECT_FALSE(tags.warnings().empty());
  EXPECT_THROW(TagLexicon::load(write_temp("badpos.tsv", "医院\n"), ""), FormatError);
}

}  // namespace
}  // namespace mindmap
