// Copyright 2026 The Mindmap Authors.
// Licensed under the Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "mindmap/errors.hpp"
#include "mindmap/generator.hpp"
#include "test_support.hpp"

namespace mindmap {
namespace {

std::vector<std::string> words_of(const MindMap& m) {
  std::vector<std::string> out;
  for (const auto& n : m.nodes) out.push_back(n.word);
  return out;
}

void expect_forest(const MindMap& m) {
  std::set<std::string> words;
  std::size_t edges = 0;
  for (std::size_t i = 0; i < m.nodes.size(); ++i) {
    const auto& n = m.nodes[i];
    EXPECT_TRUE(words.insert(n.word).second) << n.word;
    EXPECT_GE(n.position.x, 0.0);
    EXPECT_LE(n.position.x, m.canvas.width);
    EXPECT_GE(n.position.y, 0.0);
    EXPECT_LE(n.position.y, m.canvas.height);
    if (n.parent) {
      ++edges;
      EXPECT_LT(*n.parent, i);
      EXPECT_TRUE(n.provenance.has_value());
      EXPECT_EQ(n.iteration, m.nodes[*n.parent].iteration + 1);
    } else {
      EXPECT_EQ(n.path_length, 0.0);
      EXPECT_EQ(n.iteration, 0u);
    }
  }
  EXPECT_EQ(edges, m.nodes.size() - m.seed_count());
  EXPECT_EQ(edges, m.edge_count());
}

TEST(Distance, Endpoints) {
  EXPECT_DOUBLE_EQ(node_distance(1.0, 60, 300), 60.0);
  EXPECT_DOUBLE_EQ(node_distance(-1.0, 60, 300), 300.0);
  EXPECT_DOUBLE_EQ(node_distance(0.0, 60, 300), 180.0);
  EXPECT_DOUBLE_EQ(node_distance(std::nullopt, 60, 300), 300.0);
  EXPECT_DOUBLE_EQ(node_distance(1.0000001, 60, 300), 60.0);
}

TEST(Distance, FromStore) {
  const auto store = testing::make_store(2, {{"a", {1, 0}}, {"b", {0, 1}}});
  Assets assets;
  GenerationConfig cfg;
  EXPECT_DOUBLE_EQ(node_distance("a", "b", store, cfg), 180.0);
  EXPECT_DOUBLE_EQ(node_distance("a", "zz", store, cfg), 300.0);
}

TEST(Layout, FirstChildAndTwoChildren) {
  MindMap m;
  m.config.overlap_epsilon = 0;
  m.canvas = m.config.canvas;
  MindMapNode root;
  root.word = "r";
  root.position = {1000, 1000};
  m.nodes.push_back(root);
  const auto p0 = layout(m, 0, 0, 2, 100);
  EXPECT_NEAR(p0.position.x, 1100, 1e-9);
  EXPECT_NEAR(p0.position.y, 1000, 1e-9);
  const auto p1 = layout(m, 0, 1, 2, 100);
  EXPECT_NEAR(p1.angle_deg, 180.0, 1e-9);
  EXPECT_NEAR(p1.position.x, 900, 1e-9);
  EXPECT_NEAR(p1.position.y, 1000, 1e-6);
}

TEST(Layout, ClampedAtCanvasEdge) {
  MindMap m;
  m.canvas = m.config.canvas;
  MindMapNode root;
  root.position = {2000, 1000};
  m.nodes.push_back(root);
  const auto p = layout(m, 0, 0, 1, 250);
  EXPECT_LE(p.position.x, 2000.0);
  EXPECT_GE(p.position.x, 0.0);
}

TEST(Layout, PartialArcCentresChildren) {
  MindMap m;
  m.canvas = m.config.canvas;
  m.config.overlap_epsilon = 0;
  MindMapNode parent;
  parent.position = {1000, 1000};
  parent.arc_start = 0;
  parent.arc_span = 90;
  m.nodes.push_back(parent);
  EXPECT_NEAR(layout(m, 0, 0, 3, 100).angle_deg, 15.0, 1e-9);
  EXPECT_NEAR(layout(m, 0, 2, 3, 100).angle_deg, 75.0, 1e-9);
}

TEST(Layout, RotatesAwayFromOverlap) {
  MindMap m;
  m.canvas = m.config.canvas;
  MindMapNode root, blocker;
  root.position = {1000, 1000};
  blocker.position = {1100, 1000};
  m.nodes = {root, blocker};
  const auto p = layout(m, 0, 0, 1, 100);
  EXPECT_GT(std::hypot(p.position.x - 1100, p.position.y - 1000), m.config.overlap_epsilon);
  EXPECT_NEAR(std::hypot(p.position.x - 1000, p.position.y - 1000), 100.0, 1e-9);
}

TEST(Generate, OneSeedOneRound) {
  const auto a = testing::ample_assets();
  GenerationConfig cfg;
  cfg.iterations = 1;
  const auto m = generate({"qz"}, cfg, a);
  EXPECT_EQ(m.nodes.size(), 8u);
  EXPECT_EQ(m.edge_count(), 7u);
  expect_forest(m);
  EXPECT_FALSE(m.nodes[0].provenance.has_value());
}

// Twenty planar words. Round 1 expands a and p, round 2 their most similar
// child (b and q); by hand, with two nearest unplaced neighbours each:
//   a(0) -> b(3), c(7); p(90) -> q(94), r(99); b -> d(12), e(18); q -> s(105), t(112).
TEST(Generate, HandSimulatedTwoRounds) {
  const auto entries = testing::planar({{"a", 0},   {"b", 3},   {"c", 7},   {"d", 12},  {"e", 18},
                                        {"f", 25},  {"p", 90},  {"q", 94},  {"r", 99},  {"s", 105},
                                        {"t", 112}, {"u", 120}, {"v", 200}, {"w", 215}, {"x", 235},
                                        {"y", 260}, {"z", 290}, {"g", 310}, {"h", 325}, {"k", 340}});
  Assets assets;
  assets.store = testing::make_store(2, entries);
  GenerationConfig cfg;
  cfg.iterations = 2;
  cfg.seeds_per_iteration = 1;
  cfg.mix.max_candidates = 2;
  cfg.mix.quotas = kBaselineQuotas;
  const auto m = generate({"a", "p"}, cfg, assets);
  EXPECT_EQ(words_of(m), (std::vector<std::string>{"a", "p", "b", "c", "q", "r", "d", "e", "s", "t"}));
  const std::vector<std::size_t> parents{0, 0, 1, 1, 2, 2, 4, 4};
  for (std::size_t i = 2; i < m.nodes.size(); ++i) EXPECT_EQ(*m.nodes[i].parent, parents[i - 2]);
  expect_forest(m);
}

TEST(Generate, FixtureForestAndDeterminism) {
  const auto& a = testing::fixture_assets();
  GenerationConfig cfg;
  cfg.iterations = 4;
  const auto m1 = generate({"医院", "想象"}, cfg, a);
  const auto m2 = generate({"医院", "想象"}, cfg, a);
  expect_forest(m1);
  EXPECT_EQ(m1.seed_count(), 2u);
  EXPECT_EQ(words_of(m1), words_of(m2));
  for (std::size_t i = 0; i < m1.nodes.size(); ++i) {
    EXPECT_EQ(m1.nodes[i].position.x, m2.nodes[i].position.x);
    EXPECT_EQ(m1.nodes[i].position.y, m2.nodes[i].position.y);
  }
}

TEST(Generate, RejectsBadInput) {
  const auto a = testing::ample_assets();
  GenerationConfig cfg;
  EXPECT_THROW(generate({"qz", "qz"}, cfg, a), InvalidSeedError);
  EXPECT_THROW(generate({"qz", "missing"}, cfg, a), InvalidSeedError);
  EXPECT_THROW(generate({}, cfg, a), InvalidSeedError);
  cfg.iterations = 0;
  EXPECT_THROW(generate({"qz"}, cfg, a), ConfigError);
  cfg.iterations = 1;
  cfg.min_len = 400;
  EXPECT_THROW(cfg.validate(), ConfigError);
}

TEST(Generate, SeedPositions) {
  const Canvas c;
  const auto one = seed_positions(1, c);
  EXPECT_EQ(one[0].x, 1000.0);
  const auto two = seed_positions(2, c);
  EXPECT_NEAR(two[0].x, 1500.0, 1e-9);
  EXPECT_NEAR(two[1].x, 500.0, 1e-9);
}

}  // namespace
}  // namespace mindmap
