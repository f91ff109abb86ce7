// Copyright 2026 The Mindmap Authors.
// Licensed under the Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

// Shared fixtures and independent oracles for the test suites. Nothing here
// calls into the code paths it is used to check.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mindmap/assets.hpp"
#include "mindmap/config.hpp"
#include "mindmap/embedding_store.hpp"
#include "mindmap/utf8.hpp"

namespace mindmap::testing {

inline std::filesystem::path fixture_dir() { return MINDMAP_FIXTURE_DIR; }

/// The bundled desk-scale corpus, loaded once per process.
inline const Assets& fixture_assets() {
  static const Assets assets = [] {
    const auto settings = load_settings(fixture_dir() / "mindmap.ini");
    return load_assets(settings.assets, settings.filter);
  }();
  return assets;
}

inline Settings fixture_settings() { return load_settings(fixture_dir() / "mindmap.ini"); }

using Entries = std::vector<std::pair<std::string, std::vector<float>>>;

inline EmbeddingStore make_store(std::size_t dim, const Entries& entries) {
  return EmbeddingStore::from_entries(dim, entries);
}

/// Unit vectors in the plane at the given angles (degrees).
inline Entries planar(const std::vector<std::pair<std::string, double>>& angles) {
  Entries out;
  for (const auto& [w, deg] : angles) {
    const double r = deg * 3.14159265358979323846 / 180.0;
    out.push_back({w, {static_cast<float>(std::cos(r)), static_cast<float>(std::sin(r))}});
  }
  return out;
}

inline std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  const auto dir = std::filesystem::temp_directory_path() / "mindmap-tests";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path, std::ios::binary) << content;
  return path;
}

/// Hand-built assets where every strategy has at least 25 eligible words and
/// the four pools are disjoint: Author "A*" (graph children), Linguistic "qL*"
/// (share 'q' with the seed), Semantic "S*" (nearly parallel to the seed) and
/// Dada "D*" (nearly orthogonal, different tags).
inline Assets ample_assets(std::size_t per_pool = 25) {
  Entries e;
  e.push_back({"qz", {1, 0, 0, 0}});
  std::vector<std::pair<std::string, std::string>> edges;
  Assets a;
  a.tags.set_domain("qz", "here");
  a.tags.set_pos("qz", "noun");
  for (std::size_t i = 0; i < per_pool; ++i) {
    const float t = 0.01f * static_cast<float>(i);
    const auto n = std::to_string(i);
    e.push_back({"S" + n, {1, 0.05f + t, 0, 0}});
    e.push_back({"A" + n, {1, 1.2f + t, 0, 0}});
    e.push_back({"qL" + n, {1, 1.2f + t, 0.1f, 0}});
    e.push_back({"D" + n, {0.1f, 0, 1, t}});
    edges.push_back({"qz", "A" + n});
    a.tags.set_domain("D" + n, "there");
    a.tags.set_pos("D" + n, i % 2 ? "verb" : "noun");
  }
  a.store = make_store(4, e);
  a.graph = KnowledgeGraph::from_edges(edges);
  return a;
}

/// Largest remainder, written out independently: floors, then one extra seat
/// per category in order of descending remainder, earlier category on ties.
inline std::array<std::size_t, 4> largest_remainder(const std::array<double, 4>& q, std::size_t n) {
  std::array<std::size_t, 4> seats{};
  std::array<std::pair<double, std::size_t>, 4> rem;
  std::size_t used = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    const double exact = q[i] * static_cast<double>(n);
    seats[i] = static_cast<std::size_t>(exact);
    rem[i] = {exact - static_cast<double>(seats[i]), i};
    used += seats[i];
  }
  std::sort(rem.begin(), rem.end(), [](const auto& x, const auto& y) {
    return x.first != y.first ? x.first > y.first : x.second < y.second;
  });
  for (std::size_t r = 0; used < n; ++r, ++used) ++seats[rem[r % 4].second];
  return seats;
}

// ---------------------------------------------------------------------------
// Oracles
// ---------------------------------------------------------------------------

/// Brute-force kNN: score every word from raw vectors, full sort, cut.
inline std::vector<Neighbor> brute_force_knn(const Entries& entries, const std::string& query, std::size_t k,
                                             const std::vector<std::string>& excluded = {}) {
  const auto q = std::find_if(entries.begin(), entries.end(), [&](const auto& e) { return e.first == query; });
  std::vector<Neighbor> all;
  for (const auto& [w, v] : entries) {
    if (w == query || std::find(excluded.begin(), excluded.end(), w) != excluded.end()) continue;
    const std::span<const float> a(q->second), b(v);
    if (euclidean_norm(b) == 0.0) continue;
    all.push_back({w, cosine_similarity(a, b)});
  }
  std::sort(all.begin(), all.end(), [](const Neighbor& x, const Neighbor& y) {
    if (x.similarity != y.similarity) return x.similarity > y.similarity;
    return x.word < y.word;
  });
  if (all.size() > k) all.resize(k);
  return all;
}

/// LCS by enumeration: longest length first, then smallest start in a, then in b.
inline std::pair<std::u32string, std::size_t> enumerate_lcs(const std::u32string& a, const std::u32string& b) {
  for (std::size_t len = std::min(a.size(), b.size()); len > 0; --len) {
    for (std::size_t sa = 0; sa + len <= a.size(); ++sa) {
      for (std::size_t sb = 0; sb + len <= b.size(); ++sb) {
        if (a.compare(sa, len, b, sb, len) == 0) return {a.substr(sa, len), len};
      }
    }
  }
  return {U"", 0};
}

/// LCS from a full quadratic suffix table, scanned for the same tie rule.
inline std::pair<std::u32string, std::size_t> dp_lcs(const std::u32string& a, const std::u32string& b) {
  std::vector<std::vector<std::size_t>> t(a.size() + 1, std::vector<std::size_t>(b.size() + 1, 0));
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) t[i][j] = a[i - 1] == b[j - 1] ? t[i - 1][j - 1] + 1 : 0;
  }
  std::size_t best = 0, best_sa = 0, best_sb = 0;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const auto len = t[i][j];
      if (len == 0) continue;
      const auto sa = i - len, sb = j - len;
      const bool wins = len > best || (len == best && std::make_pair(sa, sb) < std::make_pair(best_sa, best_sb));
      if (wins) best = len, best_sa = sa, best_sb = sb;
    }
  }
  return {a.substr(best_sa, best), best};
}

/// Random string over a small mixed ASCII/CJK alphabet so matches are common.
inline std::u32string random_mixed(std::mt19937_64& rng, std::size_t max_len) {
  static const std::u32string alphabet = U"abcd医院住生公园山水";
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::u32string s;
  const auto n = len(rng);
  for (std::size_t i = 0; i < n; ++i) s.push_back(alphabet[pick(rng)]);
  return s;
}

/// Random store with deliberate exact ties (duplicated and integer vectors).
inline Entries random_entries(std::mt19937_64& rng, std::size_t n, std::size_t dim) {
  static const std::u32string alphabet = U"abcdefghij天地人山水火木金土";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> len(1, 4);
  std::uniform_int_distribution<int> small(-2, 2);
  std::normal_distribution<float> gauss(0.0f, 1.0f);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Entries out;
  std::vector<std::string> seen;
  while (out.size() < n) {
    std::u32string w;
    const int l = len(rng);
    for (int i = 0; i < l; ++i) w.push_back(alphabet[pick(rng)]);
    auto word = utf8::encode(w) + std::to_string(out.size() % 7);
    if (std::find(seen.begin(), seen.end(), word) != seen.end()) continue;
    seen.push_back(word);
    std::vector<float> v(dim);
    const double r = u(rng);
    if (r < 0.15 && !out.empty()) {
      v = out[std::uniform_int_distribution<std::size_t>(0, out.size() - 1)(rng)].second;
    } else if (r < 0.35) {
      for (auto& x : v) x = static_cast<float>(small(rng));
      if (std::all_of(v.begin(), v.end(), [](float x) { return x == 0.0f; })) v[0] = 1.0f;
    } else {
      for (auto& x : v) x = gauss(rng);
    }
    out.push_back({word, v});
  }
  return out;
}

}  // namespace mindmap::testing
