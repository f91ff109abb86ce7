// Copyright 2026 The Mindmap Authors.
// Licensed under the Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <cmath>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mindmap/errors.hpp"
#include "mindmap/words.hpp"

namespace mindmap {

/// Which words survive loading. Lengths are counted in Unicode scalar values.
struct VocabularyFilter {
  std::size_t max_chars = 8;
  bool require_in_embeddings = true;

  void validate() const {
    if (max_chars < 1) throw ConfigError("VocabularyFilter.max_chars must be >= 1");
  }
  bool admits(std::string_view word) const;
};

/// Euclidean norm accumulated in double precision.
template <typename T>
double euclidean_norm(std::span<const T> v) {
  double sum = 0.0;
  for (T x : v) sum += static_cast<double>(x) * static_cast<double>(x);
  return std::sqrt(sum);
}

template <typename T>
double dot_product(std::span<const T> a, std::span<const T> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += static_cast<double>(a[i]) * static_cast<double>(b[i]);
  return sum;
}

/// dot(a,b) / (|a| |b|). Throws DimensionError or DegenerateVectorError.
template <typename T>
double cosine_similarity(std::span<const T> a, std::span<const T> b) {
  if (a.size() != b.size()) {
    throw DimensionError("cosine_similarity: dimensions " + std::to_string(a.size()) + " and " +
                         std::to_string(b.size()) + " differ");
  }
  const double na = euclidean_norm(a);
  const double nb = euclidean_norm(b);
  if (na == 0.0 || nb == 0.0) throw DegenerateVectorError("cosine_similarity: zero-norm vector");
  return dot_product(a, b) / (na * nb);
}

inline double cosine_similarity(const std::vector<double>& a, const std::vector<double>& b) {
  return cosine_similarity(std::span<const double>(a), std::span<const double>(b));
}

struct Neighbor {
  std::string word;
  double similarity = 0.0;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

/// Immutable vocabulary of word vectors with precomputed norms.
///
/// Vectors are stored in single precision; every similarity is accumulated in
/// double precision through the same kernel as cosine_similarity(), so the
/// stored-norm fast path is bit-identical to the direct computation.
class EmbeddingStore {
 public:
  EmbeddingStore() = default;

  /// Reads the `<count> <dim>` text format. Lines failing `filter` are dropped;
  /// surviving entries keep file order.
  static EmbeddingStore load(const std::filesystem::path& path, const VocabularyFilter& filter = {});

  /// Builds a store from in-memory entries with the same validation as load().
  static EmbeddingStore from_entries(std::size_t dim,
                                     const std::vector<std::pair<std::string, std::vector<float>>>& entries,
                                     const VocabularyFilter& filter = {});

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }

  bool contains(std::string_view word) const { return index_of(word).has_value(); }
  std::optional<std::size_t> index_of(std::string_view word) const;

  const std::string& word(std::size_t i) const { return words_[i]; }
  const std::vector<std::string>& words() const noexcept { return words_; }
  std::span<const float> vector(std::size_t i) const {
    return {values_.data() + i * dim_, dim_};
  }
  double norm(std::size_t i) const { return norms_[i]; }

  /// Cosine similarity between two stored words; nullopt when either is absent
  /// or has a zero vector.
  std::optional<double> similarity(std::string_view a, std::string_view b) const;
  double similarity_at(std::size_t i, std::size_t j) const;

  /// Exact k nearest neighbours of `word` by cosine similarity, descending,
  /// ties broken by code-point order. Never returns `word` or an excluded word;
  /// zero vectors are never returned. Throws OutOfVocabularyError.
  std::vector<Neighbor> nearest_neighbors(std::string_view word, std::size_t k,
                                          const WordSet& excluded = {}) const;

 private:
  void add(std::string word, std::span<const float> values, std::size_t line);

  std::size_t dim_ = 0;
  std::vector<std::string> words_;
  std::vector<float> values_;
  std::vector<double> norms_;
  std::unordered_map<std::string, std::size_t, StringHash, std::equal_to<>> index_;
};

}  // namespace mindmap
