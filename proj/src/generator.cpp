// Copyright 2026 The Mindmap Authors.
// Licensed under the Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "mindmap/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mindmap/errors.hpp"

namespace mindmap {
namespace {

constexpr double kFullTurn = 360.0;

double radians(double deg) { return deg * std::numbers::pi / 180.0; }

Point clamp_to(const Canvas& canvas, Point p) {
  return {std::clamp(p.x, 0.0, canvas.width), std::clamp(p.y, 0.0, canvas.height)};
}

bool collides(const MindMap& map, Point p, double epsilon) {
  return std::any_of(map.nodes.begin(), map.nodes.end(), [&](const MindMapNode& n) {
    return std::hypot(n.position.x - p.x, n.position.y - p.y) < epsilon;
  });
}

}  // namespace

void GenerationConfig::validate() const {
  if (iterations < 1) throw ConfigError("iterations must be >= 1");
  if (seeds_per_iteration < 1) throw ConfigError("seeds_per_iteration must be >= 1");
  if (!(canvas.width > 0.0) || !(canvas.height > 0.0)) throw ConfigError("canvas must have positive size");
  if (!(min_len >= 0.0) || !(min_len < max_len)) throw ConfigError("need 0 <= min_len < max_len");
  if (!(overlap_epsilon >= 0.0)) throw ConfigError("overlap_epsilon must be >= 0");
  if (!(rotation_step_deg > 0.0) || rotation_step_deg > kFullTurn) {
    throw ConfigError("rotation_step_deg must lie in (0, 360]");
  }
  mix.validate();
}

std::size_t MindMap::seed_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes.begin(), nodes.end(), [](const MindMapNode& n) { return !n.parent; }));
}

std::size_t MindMap::edge_count() const { return nodes.size() - seed_count(); }

double node_distance(std::optional<double> similarity, double min_len, double max_len) {
  if (!similarity) return max_len;
  const double t = std::clamp((1.0 - *similarity) / 2.0, 0.0, 1.0);
  return min_len + (max_len - min_len) * t;
}

double node_distance(std::string_view seed, std::string_view candidate, const EmbeddingStore& store,
                     const GenerationConfig& cfg) {
  return node_distance(store.similarity(seed, candidate), cfg.min_len, cfg.max_len);
}

Placement layout(const MindMap& map, std::size_t parent, std::size_t slot, std::size_t slot_count, double radius) {
  const auto& p = map.nodes.at(parent);
  const auto& cfg = map.config;
  const double sector = p.arc_span / static_cast<double>(std::max<std::size_t>(slot_count, 1));
  const bool full = p.arc_span >= kFullTurn;
  const double angle = p.arc_start + (static_cast<double>(slot) + (full ? 0.0 : 0.5)) * sector;

  const auto at = [&](double deg) {
    return clamp_to(map.canvas, {p.position.x + radius * std::cos(radians(deg)),
                                 p.position.y + radius * std::sin(radians(deg))});
  };
  Placement out{at(angle), angle, angle - sector / 2.0, sector};
  const auto steps = static_cast<std::size_t>(std::floor(kFullTurn / cfg.rotation_step_deg));
  for (std::size_t i = 1; i < steps && collides(map, out.position, cfg.overlap_epsilon); ++i) {
    const double turned = angle + static_cast<double>(i) * cfg.rotation_step_deg;
    const auto candidate = at(turned);
    if (!collides(map, candidate, cfg.overlap_epsilon)) {
      out.position = candidate;
      out.angle_deg = turned;
      out.arc_start = turned - sector / 2.0;
    }
  }
  return out;
}

std::vector<Point> seed_positions(std::size_t count, const Canvas& canvas) {
  const Point centre{canvas.width / 2.0, canvas.height / 2.0};
  if (count == 1) return {centre};
  std::vector<Point> out;
  const double r = std::min(canvas.width, canvas.height) / 4.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double a = radians(kFullTurn * static_cast<double>(i) / static_cast<double>(count));
    out.push_back({centre.x + r * std::cos(a), centre.y + r * std::sin(a)});
  }
  return out;
}

MindMap generate(const std::vector<std::string>& seeds, const GenerationConfig& cfg, const Assets& assets) {
  cfg.validate();
  if (seeds.empty()) throw InvalidSeedError("", "no seed words given");
  WordSet placed;
  for (const auto& s : seeds) {
    check_seed(s, assets);
    if (!placed.insert(s).second) throw InvalidSeedError(s, "given twice");
  }

  MindMap map;
  map.canvas = cfg.canvas;
  map.config = cfg;
  const auto origins = seed_positions(seeds.size(), cfg.canvas);
  std::vector<std::size_t> frontier;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    MindMapNode node;
    node.word = seeds[i];
    const auto cls = assets.prototypes.classify(node.word, assets.store);
    node.domain = cls.domain;
    node.element = painting_element(cls.domain);
    node.position = origins[i];
    frontier.push_back(map.nodes.size());
    map.nodes.push_back(std::move(node));
  }

  WordSet expanded;
  for (std::size_t round = 1; round <= cfg.iterations && !frontier.empty(); ++round) {
    std::vector<std::size_t> next;
    for (const auto parent : frontier) {
      const std::string word = map.nodes[parent].word;
      if (!expanded.insert(word).second) continue;
      const auto candidates = expand(word, cfg.mix, assets, placed);

      std::vector<std::size_t> children;
      for (std::size_t slot = 0; slot < candidates.size(); ++slot) {
        const auto& c = candidates[slot];
        MindMapNode node;
        node.word = c.word;
        node.provenance = c.provenance;
        node.similarity = c.similarity;
        node.detail = c.detail;
        const auto cls = assets.prototypes.classify(c.word, assets.store);
        node.domain = cls.domain;
        node.element = painting_element(cls.domain);
        node.path_length = node_distance(c.similarity, cfg.min_len, cfg.max_len);
        const auto placement = layout(map, parent, slot, candidates.size(), node.path_length);
        node.position = placement.position;
        node.arc_start = placement.arc_start;
        node.arc_span = placement.arc_span;
        node.parent = parent;
        node.iteration = round;
        placed.insert(node.word);
        children.push_back(map.nodes.size());
        map.nodes.push_back(std::move(node));
      }

      std::stable_sort(children.begin(), children.end(), [&](std::size_t a, std::size_t b) {
        const auto& x = map.nodes[a];
        const auto& y = map.nodes[b];
        if (x.similarity.has_value() != y.similarity.has_value()) return x.similarity.has_value();
        if (x.similarity && *x.similarity != *y.similarity) return *x.similarity > *y.similarity;
        return x.word < y.word;
      });
      if (children.size() > cfg.seeds_per_iteration) children.resize(cfg.seeds_per_iteration);
      next.insert(next.end(), children.begin(), children.end());
    }
    frontier = std::move(next);
  }
  return map;
}

}  // namespace mindmap
