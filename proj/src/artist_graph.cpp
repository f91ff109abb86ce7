// Copyright 2026 The Mindmap Authors.
// Licensed under the Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "mindmap/artist_graph.hpp"

#include <algorithm>

#include "mindmap/errors.hpp"
#include "mindmap/utf8.hpp"
#include "text_io.hpp"

namespace mindmap {

std::string_view to_string(Relation r) noexcept { return r == Relation::Hyponym ? "hyponym" : "hypernym"; }

KnowledgeGraph KnowledgeGraph::load(const std::filesystem::path& path) {
  auto in = detail::open_input(path);
  KnowledgeGraph g;
  std::string line;
  std::size_t line_no = 0;
  while (detail::read_line(in, line)) {
    ++line_no;
    const auto content = detail::trim(line);
    if (content.empty() || content.front() == '#') continue;
    const auto fields = detail::split(content, '\t');
    if (fields.size() > 2) throw FormatError("expected parent<TAB>child", line_no);
    for (auto f : fields) {
      if (detail::trim(f).empty() || !utf8::valid(f)) throw FormatError("empty or malformed vertex", line_no);
    }
    if (fields.size() == 1) {
      g.intern(detail::trim(fields[0]));
    } else {
      const auto p = g.intern(detail::trim(fields[0]));
      const auto c = g.intern(detail::trim(fields[1]));
      g.add_edge(p, c);
    }
  }
  g.validate();
  return g;
}

KnowledgeGraph KnowledgeGraph::from_edges(const std::vector<std::pair<std::string, std::string>>& edges,
                                          const std::vector<std::string>& isolated) {
  KnowledgeGraph g;
  for (const auto& [parent, child] : edges) {
    const auto p = g.intern(parent);
    const auto c = g.intern(child);
    g.add_edge(p, c);
  }
  for (const auto& v : isolated) g.intern(v);
  g.validate();
  return g;
}

std::size_t KnowledgeGraph::intern(std::string_view word) {
  if (auto it = index_.find(word); it != index_.end()) return it->second;
  const auto id = names_.size();
  names_.emplace_back(word);
  parent_.emplace_back();
  children_.emplace_back();
  index_.emplace(names_.back(), id);
  return id;
}

void KnowledgeGraph::add_edge(std::size_t parent, std::size_t child) {
  if (parent == child) throw StructureError("cycle through vertex", names_[child]);
  if (parent_[child]) {
    if (*parent_[child] == parent) return;  // repeated edge
    throw StructureError("vertex has two parents", names_[child]);
  }
  parent_[child] = parent;
  children_[parent].push_back(child);
  ++edges_;
}

void KnowledgeGraph::validate() const {
  // 0 = unseen, 1 = on the current parent walk, 2 = known to reach a root
  std::vector<unsigned char> state(names_.size(), 0);
  std::vector<std::size_t> walk;
  for (std::size_t start = 0; start < names_.size(); ++start) {
    walk.clear();
    std::optional<std::size_t> v = start;
    while (v && state[*v] == 0) {
      state[*v] = 1;
      walk.push_back(*v);
      v = parent_[*v];
    }
    if (v && state[*v] == 1) throw StructureError("cycle through vertex", names_[*v]);
    for (auto w : walk) state[w] = 2;
  }
}

std::vector<std::string> KnowledgeGraph::roots() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!parent_[i]) out.push_back(names_[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> KnowledgeGraph::vertices() const {
  auto out = names_;
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::string> KnowledgeGraph::parent(std::string_view word) const {
  auto it = index_.find(word);
  if (it == index_.end() || !parent_[it->second]) return std::nullopt;
  return names_[*parent_[it->second]];
}

std::vector<std::string> KnowledgeGraph::children(std::string_view word) const {
  std::vector<std::string> out;
  auto it = index_.find(word);
  if (it == index_.end()) return out;
  for (auto c : children_[it->second]) out.push_back(names_[c]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GraphNeighbor> KnowledgeGraph::expand(std::string_view seed, std::size_t depth, std::size_t k) const {
  std::vector<GraphNeighbor> out;
  auto it = index_.find(seed);
  if (it == index_.end() || k == 0) return out;

  std::vector<std::size_t> level{it->second};
  std::optional<std::size_t> ancestor = parent_[it->second];
  for (std::size_t hops = 1; hops <= depth; ++hops) {
    std::vector<std::size_t> next;
    for (auto v : level) next.insert(next.end(), children_[v].begin(), children_[v].end());
    std::vector<GraphNeighbor> ring;
    for (auto v : next) ring.push_back({names_[v], Relation::Hyponym, hops});
    std::sort(ring.begin(), ring.end(), [](const auto& a, const auto& b) { return a.word < b.word; });
    if (ancestor) {
      ring.push_back({names_[*ancestor], Relation::Hypernym, hops});
      ancestor = parent_[*ancestor];
    }
    out.insert(out.end(), ring.begin(), ring.end());
    if (out.size() >= k) break;
    if (next.empty() && !ancestor) break;
    level = std::move(next);
  }
  if (out.size() > k) out.resize(k);
  return out;
}

bool KnowledgeGraph::related(std::string_view seed, std::string_view word) const {
  auto s = index_.find(seed);
  auto w = index_.find(word);
  if (s == index_.end() || w == index_.end() || s->second == w->second) return false;
  const auto is_ancestor = [this](std::size_t anc, std::size_t v) {
    for (auto p = parent_[v]; p; p = parent_[*p]) {
      if (*p == anc) return true;
    }
    return false;
  };
  return is_ancestor(s->second, w->second) || is_ancestor(w->second, s->second);
}

}  // namespace mindmap
