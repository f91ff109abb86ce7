// Copyright 2026 The Mindmap Authors.
// Licensed under the Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mindmap/assets.hpp"
#include "mindmap/mixer.hpp"
#include "mindmap/scene.hpp"

namespace mindmap {

struct Canvas {
  double width = 2000.0;
  double height = 2000.0;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct GenerationConfig {
  /// Frontier rounds after the user seeds are drawn.
  std::size_t iterations = 28;
  /// Children of each expanded node promoted to the next frontier.
  std::size_t seeds_per_iteration = 2;
  MixConfig mix;
  Canvas canvas;
  double min_len = 60.0;
  double max_len = 300.0;
  /// Two nodes closer than this overlap.
  double overlap_epsilon = 20.0;
  /// Rotation applied per attempt when resolving an overlap.
  double rotation_step_deg = 10.0;

  void validate() const;
};

struct MindMapNode {
  std::string word;
  std::optional<Provenance> provenance;  // nullopt for user seeds
  PaintingDomain domain = PaintingDomain::Road;
  PaintingElement element;
  Point position;
  std::optional<std::size_t> parent;  // index into MindMap::nodes
  double path_length = 0.0;
  std::size_t iteration = 0;
  std::optional<double> similarity;  // cosine to the parent
  std::string detail;
  /// Angular sector (degrees) this node hands out to its own children.
  double arc_start = 0.0;
  double arc_span = 360.0;
};

struct MindMap {
  std::vector<MindMapNode> nodes;
  Canvas canvas;
  GenerationConfig config;

  std::uint64_t rng_seed() const noexcept { return config.mix.rng_seed; }
  std::size_t seed_count() const;
  std::size_t edge_count() const;
};

/// min_len + (max_len - min_len) * clamp((1 - cos) / 2, 0, 1), or max_len when
/// the similarity is unknown.
double node_distance(std::optional<double> similarity, double min_len, double max_len);
double node_distance(std::string_view seed, std::string_view candidate, const EmbeddingStore& store,
                     const GenerationConfig& cfg);

struct Placement {
  Point position;
  double angle_deg = 0.0;
  double arc_start = 0.0;
  double arc_span = 360.0;
};

/// Radial placement of child `slot` of `slot_count` around `parent`.
///
/// A parent owning the full circle puts child i at arc_start + i*360/n; a
/// parent owning a partial arc centres child i in the i-th of n equal sectors.
/// The child is placed at distance `radius` and clamped into the canvas. If it
/// lands within overlap_epsilon of an existing node it is rotated by
/// rotation_step_deg until free; after a full turn the first position is kept.
Placement layout(const MindMap& map, std::size_t parent, std::size_t slot, std::size_t slot_count, double radius);

/// Positions of the user seeds: one seed at the canvas centre, several evenly
/// spaced on a circle of radius min(width, height) / 4.
std::vector<Point> seed_positions(std::size_t count, const Canvas& canvas);

/// Runs the mind-map loop: draw seeds, then for each frontier node expand,
/// classify, measure and place every candidate, and promote the most similar
/// children to the next frontier. Every word appears once; a word is expanded
/// at most once. Throws InvalidSeedError before any work if a seed is invalid.
MindMap generate(const std::vector<std::string>& seeds, const GenerationConfig& cfg, const Assets& assets);

}  // namespace mindmap
