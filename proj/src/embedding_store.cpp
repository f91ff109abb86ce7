// Copyright 2026 The Mindmap Authors.
// Licensed under the Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "mindmap/embedding_store.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

#include "mindmap/utf8.hpp"
#include "text_io.hpp"

namespace mindmap {
namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    if (i == s.size()) break;
    const auto start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    out.push_back(s.substr(start, i - start));
  }
  return out;
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

bool VocabularyFilter::admits(std::string_view word) const {
  if (!utf8::valid(word)) return false;
  return utf8::length(word) <= max_chars;
}

EmbeddingStore EmbeddingStore::load(const std::filesystem::path& path, const VocabularyFilter& filter) {
  filter.validate();
  auto in = detail::open_input(path);
  std::string line;
  if (!detail::read_line(in, line)) throw FormatError("missing header", 1);
  const auto header = split_ws(line);
  std::size_t count = 0;
  std::size_t dim = 0;
  if (header.size() != 2 || !parse_number(header[0], count) || !parse_number(header[1], dim) || dim == 0) {
    throw FormatError("malformed header, expected '<count> <dim>'", 1);
  }

  EmbeddingStore store;
  store.dim_ = dim;
  store.words_.reserve(count);
  store.values_.reserve(count * dim);
  WordSet seen;
  std::vector<float> values(dim);
  std::size_t line_no = 1;
  std::size_t rows = 0;
  while (detail::read_line(in, line)) {
    ++line_no;
    const auto fields = split_ws(line);
    if (fields.empty()) continue;
    ++rows;
    if (rows > count) throw FormatError("more rows than the header count " + std::to_string(count), line_no);
    if (fields.size() != dim + 1) {
      throw FormatError("expected " + std::to_string(dim) + " components, found " +
                            std::to_string(fields.size() - 1),
                        line_no);
    }
    for (std::size_t i = 0; i < dim; ++i) {
      if (!parse_number(fields[i + 1], values[i]) || !std::isfinite(values[i])) {
        throw FormatError("bad number '" + std::string(fields[i + 1]) + "'", line_no);
      }
    }
    std::string word(fields[0]);
    if (!utf8::valid(word)) throw FormatError("word is not valid UTF-8", line_no);
    if (!seen.insert(word).second) throw DuplicateError(word);
    if (!filter.admits(word)) continue;
    store.add(std::move(word), values, line_no);
  }
  if (rows != count) {
    throw FormatError("header declares " + std::to_string(count) + " rows, file has " + std::to_string(rows));
  }
  return store;
}

EmbeddingStore EmbeddingStore::from_entries(std::size_t dim,
                                            const std::vector<std::pair<std::string, std::vector<float>>>& entries,
                                            const VocabularyFilter& filter) {
  filter.validate();
  if (dim == 0) throw DimensionError("embedding dimension must be positive");
  EmbeddingStore store;
  store.dim_ = dim;
  WordSet seen;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& [word, values] = entries[i];
    if (values.size() != dim) {
      throw FormatError("expected " + std::to_string(dim) + " components, found " + std::to_string(values.size()),
                        i + 1);
    }
    if (!utf8::valid(word)) throw FormatError("word is not valid UTF-8", i + 1);
    if (!seen.insert(word).second) throw DuplicateError(word);
    if (!filter.admits(word)) continue;
    store.add(word, values, i + 1);
  }
  return store;
}

void EmbeddingStore::add(std::string word, std::span<const float> values, std::size_t) {
  index_.emplace(word, words_.size());
  words_.push_back(std::move(word));
  values_.insert(values_.end(), values.begin(), values.end());
  norms_.push_back(euclidean_norm(values));
}

std::optional<std::size_t> EmbeddingStore::index_of(std::string_view word) const {
  auto it = index_.find(word);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

double EmbeddingStore::similarity_at(std::size_t i, std::size_t j) const {
  return dot_product(vector(i), vector(j)) / (norms_[i] * norms_[j]);
}

std::optional<double> EmbeddingStore::similarity(std::string_view a, std::string_view b) const {
  const auto i = index_of(a);
  const auto j = index_of(b);
  if (!i || !j || norms_[*i] == 0.0 || norms_[*j] == 0.0) return std::nullopt;
  return similarity_at(*i, *j);
}

std::vector<Neighbor> EmbeddingStore::nearest_neighbors(std::string_view word, std::size_t k,
                                                        const WordSet& excluded) const {
  const auto query = index_of(word);
  if (!query) throw OutOfVocabularyError(std::string(word));
  if (k == 0) return {};
  if (norms_[*query] == 0.0) throw DegenerateVectorError("query word has a zero vector: " + std::string(word));

  struct Scored {
    double similarity;
    std::size_t index;
  };
  std::vector<Scored> scored;
  scored.reserve(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (i == *query || norms_[i] == 0.0) continue;
    if (!excluded.empty() && excluded.contains(words_[i])) continue;
    scored.push_back({similarity_at(*query, i), i});
  }
  const auto better = [this](const Scored& a, const Scored& b) {
    if (a.similarity != b.similarity) return a.similarity > b.similarity;
    return codepoint_less(words_[a.index], words_[b.index]);
  };
  const auto take = std::min(k, scored.size());
  std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(take), scored.end(), better);

  std::vector<Neighbor> out;
  out.reserve(take);
  for (std::size_t i = 0; i < take; ++i) out.push_back({words_[scored[i].index], scored[i].similarity});
  return out;
}

}  // namespace mindmap
