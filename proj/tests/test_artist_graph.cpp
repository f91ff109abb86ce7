// Copyright 2026 The Mindmap Authors.
// Licensed under the Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "mindmap/artist_graph.hpp"
#include "mindmap/errors.hpp"
#include "test_support.hpp"

namespace mindmap {
namespace {

using testing::write_temp;

TEST(Graph, HospitalExample) {
  const auto g = KnowledgeGraph::load(write_temp("g1.tsv", "医院\t病人\n医院\t监狱\n"));
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.roots(), (std::vector<std::string>{"医院"}));
  const std::vector<GraphNeighbor> want{{"病人", Relation::Hyponym, 1}, {"监狱", Relation::Hyponym, 1}};
  EXPECT_EQ(g.expand("医院", 1, 10), want);
  EXPECT_TRUE(g.expand("天鹅", 1, 10).empty());
  EXPECT_TRUE(g.contains("监狱"));
  EXPECT_FALSE(g.contains("天鹅"));
}

TEST(Graph, EmptyAndStructureErrors) {
  const auto empty = KnowledgeGraph::load(write_temp("g0.tsv", ""));
  EXPECT_EQ(empty.vertex_count(), 0u);
  EXPECT_FALSE(empty.contains("a"));
  EXPECT_THROW(KnowledgeGraph::load(write_temp("cyc.tsv", "a\tb\nb\ta\n")), StructureError);
  try {
    KnowledgeGraph::from_edges({{"a", "c"}, {"b", "c"}});
    FAIL();
  } catch (const StructureError& e) {
    EXPECT_EQ(e.vertex(), "c");
  }
  EXPECT_THROW(KnowledgeGraph::load(write_temp("bad.tsv", "a\tb\tc\n")), FormatError);
}

TEST(Graph, ChainBreadthFirst) {
  const auto g = KnowledgeGraph::from_edges({{"a", "b"}, {"b", "c"}});
  const std::vector<GraphNeighbor> want{{"b", Relation::Hyponym, 1}, {"c", Relation::Hyponym, 2}};
  EXPECT_EQ(g.expand("a", 2, 10), want);
  const std::vector<GraphNeighbor> up{{"b", Relation::Hypernym, 1}, {"a", Relation::Hypernym, 2}};
  EXPECT_EQ(g.expand("c", 2, 10), up);
}

TEST(Graph, HyponymsBeforeHypernyms) {
  const auto g = KnowledgeGraph::from_edges({{"p", "s"}, {"s", "x"}, {"s", "y"}});
  const auto r = g.expand("s", 1, 10);
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[0].relation, Relation::Hyponym);
  EXPECT_EQ(r[1].relation, Relation::Hyponym);
  EXPECT_EQ(r[2].word, "p");
  EXPECT_EQ(g.expand("s", 1, 2).size(), 2u);
}

TEST(Graph, FixtureDepthMonotoneAndBounded) {
  const auto& g = testing::fixture_assets().graph;
  EXPECT_GE(g.vertex_count(), 50u);
  for (const auto& v : g.vertices()) {
    std::set<std::string> prev;
    for (std::size_t d = 1; d <= 4; ++d) {
      std::set<std::string> cur;
      for (const auto& n : g.expand(v, d, 100000)) {
        EXPECT_NE(n.word, v);
        EXPECT_TRUE(g.contains(n.word));
        EXPECT_LE(n.hops, d);
        EXPECT_TRUE(g.related(v, n.word));
        cur.insert(n.word);
      }
      EXPECT_TRUE(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
      prev = std::move(cur);
    }
  }
}

TEST(Graph, IsolatedVertexLine) {
  const auto g = KnowledgeGraph::load(write_temp("iso.tsv", "# comment\n孤岛\n\na\tb\n"));
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_TRUE(g.contains("孤岛"));
  EXPECT_TRUE(g.expand("孤岛", 3, 10).empty());
}

}  // namespace
}  // namespace mindmap
