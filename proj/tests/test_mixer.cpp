// Copyright 2026 The Mindmap Authors.
// Licensed under the Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "mindmap/errors.hpp"
#include "mindmap/mixer.hpp"
#include "test_support.hpp"

namespace mindmap {
namespace {

using Counts = std::array<std::size_t, 4>;

Counts count(const std::vector<Candidate>& cs) {
  Counts c{};
  for (const auto& x : cs) ++c[index_of(x.provenance)];
  return c;
}

TEST(Apportion, HandExamples) {
  // 7 * quotas = (2.4612, 1.8459, 1.6002, 1.0927): floors 2,1,1,1, leftovers to Linguistic then Dada.
  EXPECT_EQ(apportion(kDefaultQuotas, 7), (Counts{2, 2, 2, 1}));
  EXPECT_EQ(apportion({0.5, 0.5, 0, 0}, 7), (Counts{4, 3, 0, 0}));
  EXPECT_EQ(apportion(kDefaultQuotas, 0), (Counts{0, 0, 0, 0}));
  EXPECT_EQ(apportion(kBaselineQuotas, 7), (Counts{7, 0, 0, 0}));
  EXPECT_THROW(apportion({0.5, 0.6, 0, 0}, 7), ConfigError);
}

TEST(Apportion, MatchesOracleAndConservesTotal) {
  std::mt19937_64 rng(1);
  std::gamma_distribution<double> g(1.0);
  for (int t = 0; t < 2000; ++t) {
    Quotas q;
    double sum = 0;
    for (std::size_t i = 0; i < 4; ++i) sum += (q[i] = t % 5 == 0 && i == 1 ? 0.0 : g(rng));
    for (auto& x : q) x /= sum;
    const std::size_t n = t % 12;
    const auto got = apportion(q, n);
    EXPECT_EQ(got, testing::largest_remainder(q, n));
    EXPECT_EQ(got[0] + got[1] + got[2] + got[3], n);
  }
}

TEST(Mixer, DefaultQuotasOnAmplePools) {
  const auto a = testing::ample_assets();
  MixConfig cfg;
  const auto cs = expand("qz", cfg, a);
  ASSERT_EQ(cs.size(), 7u);
  EXPECT_EQ(count(cs), (Counts{2, 2, 2, 1}));
  // Output is grouped by provenance in enum order.
  for (std::size_t i = 1; i < cs.size(); ++i) EXPECT_LE(index_of(cs[i - 1].provenance), index_of(cs[i].provenance));
  for (const auto& c : cs) {
    const char lead = c.word[0];
    switch (c.provenance) {
      case Provenance::SemanticSimilarity: EXPECT_EQ(lead, 'S'); break;
      case Provenance::LinguisticFeature: EXPECT_EQ(lead, 'q'); break;
      case Provenance::Dadaism: EXPECT_EQ(lead, 'D'); break;
      case Provenance::AuthorStyle: EXPECT_EQ(lead, 'A'); break;
    }
  }
}

TEST(Mixer, EmptyAuthorPoolRefillsFromLinguistic) {
  auto a = testing::ample_assets();
  a.graph = KnowledgeGraph{};
  const auto cs = expand("qz", MixConfig{}, a);
  EXPECT_EQ(count(cs), (Counts{2, 3, 2, 0}));
}

TEST(Mixer, ShortPoolsGiveFewerCandidates) {
  const auto store = testing::make_store(2, {{"x", {1, 0}}, {"y", {1, 0.1f}}, {"w", {0.9f, 0.2f}}});
  Assets a;
  a.store = store;
  const auto cs = expand("x", MixConfig{}, a);
  EXPECT_EQ(cs.size(), 2u);
}

TEST(Mixer, BaselineEqualsNearestNeighbours) {
  const auto& a = testing::fixture_assets();
  MixConfig cfg;
  cfg.quotas = kBaselineQuotas;
  for (const auto& seed : load_word_list(testing::fixture_dir() / "seeds.txt")) {
    const auto cs = expand(seed, cfg, a);
    const auto nn = a.store.nearest_neighbors(seed, cfg.max_candidates);
    ASSERT_EQ(cs.size(), nn.size());
    for (std::size_t i = 0; i < nn.size(); ++i) {
      EXPECT_EQ(cs[i].word, nn[i].word);
      EXPECT_EQ(*cs[i].similarity, nn[i].similarity);
      EXPECT_EQ(cs[i].provenance, Provenance::SemanticSimilarity);
    }
  }
}

TEST(Mixer, FixtureInvariants) {
  const auto& a = testing::fixture_assets();
  MixConfig cfg;
  cfg.rng_seed = 99;
  for (const auto& seed : load_word_list(testing::fixture_dir() / "seeds.txt")) {
    const auto cs = expand(seed, cfg, a);
    EXPECT_EQ(cs, expand(seed, cfg, a));
    EXPECT_LE(cs.size(), cfg.max_candidates);
    std::set<std::string> words;
    for (const auto& c : cs) {
      EXPECT_NE(c.word, seed);
      EXPECT_TRUE(words.insert(c.word).second);
      if (a.store.contains(c.word)) {
        ASSERT_TRUE(c.similarity.has_value());
        EXPECT_TRUE(std::isfinite(*c.similarity));
      }
    }
  }
}

TEST(Mixer, UnknownSimilaritySortsLastInBlock) {
  auto a = testing::ample_assets(3);
  a.graph = KnowledgeGraph::from_edges({{"qz", "A0"}, {"qz", "AAA"}, {"qz", "A1"}});
  MixConfig cfg;
  cfg.quotas = {0, 0, 0, 1};
  cfg.max_candidates = 3;
  const auto cs = expand("qz", cfg, a);
  ASSERT_EQ(cs.size(), 3u);
  EXPECT_EQ(cs[2].word, "AAA");
  EXPECT_FALSE(cs[2].similarity.has_value());
}

TEST(Mixer, ExclusionAllowlistAndBadSeed) {
  auto a = testing::ample_assets();
  const WordSet excluded{"S0", "S1"};
  MixConfig cfg;
  cfg.quotas = kBaselineQuotas;
  for (const auto& c : expand("qz", cfg, a, excluded)) EXPECT_FALSE(excluded.contains(c.word));
  a.allowlist = WordSet{"S5", "D3", "A2"};
  const auto cs = expand("qz", MixConfig{}, a);
  EXPECT_EQ(cs.size(), 3u);
  for (const auto& c : cs) EXPECT_TRUE(a.allowlist->contains(c.word));
  EXPECT_THROW(expand("nope", MixConfig{}, a), InvalidSeedError);
  EXPECT_THROW(expand("一二三四五六七八九", MixConfig{}, a), InvalidSeedError);
}

TEST(Provenance, Names) {
  for (auto p : kProvenances) {
    EXPECT_EQ(parse_provenance(to_string(p)), p);
    EXPECT_EQ(parse_provenance(short_name(p)), p);
  }
  EXPECT_THROW(parse_provenance("poetry"), ConfigError);
}

}  // namespace
}  // namespace mindmap
