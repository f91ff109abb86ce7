// Copyright 2026 The Mindmap Authors.
// Licensed under the Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mindmap/words.hpp"

namespace mindmap {

enum class Relation { Hyponym, Hypernym };

std::string_view to_string(Relation r) noexcept;

struct GraphNeighbor {
  std::string word;
  Relation relation = Relation::Hyponym;
  std::size_t hops = 0;

  friend bool operator==(const GraphNeighbor&, const GraphNeighbor&) = default;
};

/// Hypernym/hyponym forest: every vertex has at most one parent and there are
/// no cycles. Edges point from the broader word to the narrower one.
class KnowledgeGraph {
 public:
  KnowledgeGraph() = default;

  /// TSV of `parent<TAB>child` lines. A line with a single field declares an
  /// isolated vertex. Blank lines and lines starting with '#' are skipped.
  /// Throws StructureError on a second parent or a cycle.
  static KnowledgeGraph load(const std::filesystem::path& path);

  static KnowledgeGraph from_edges(const std::vector<std::pair<std::string, std::string>>& edges,
                                   const std::vector<std::string>& isolated = {});

  bool contains(std::string_view word) const { return index_.find(word) != index_.end(); }
  std::size_t vertex_count() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return edges_; }

  /// Vertices without a parent, in code-point order.
  std::vector<std::string> roots() const;
  std::vector<std::string> vertices() const;
  std::optional<std::string> parent(std::string_view word) const;
  std::vector<std::string> children(std::string_view word) const;

  /// Vertices within `depth` hops of `seed` along child edges (hyponyms) and
  /// the parent chain (hypernyms), excluding `seed`. Ordered by hops, then
  /// hyponyms before hypernyms, then code-point order; truncated to `k`.
  /// Empty when `seed` is not a vertex.
  std::vector<GraphNeighbor> expand(std::string_view seed, std::size_t depth, std::size_t k) const;

  /// True when `word` is a descendant or an ancestor of `seed` at any depth.
  bool related(std::string_view seed, std::string_view word) const;

 private:
  std::size_t intern(std::string_view word);
  void add_edge(std::size_t parent, std::size_t child);
  void validate() const;

  std::vector<std::string> names_;
  std::vector<std::optional<std::size_t>> parent_;
  std::vector<std::vector<std::size_t>> children_;
  std::unordered_map<std::string, std::size_t, StringHash, std::equal_to<>> index_;
  std::size_t edges_ = 0;
};

}  // namespace mindmap
