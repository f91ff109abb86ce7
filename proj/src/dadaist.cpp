// Copyright 2026 The Mindmap Authors.
// Licensed under the Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "mindmap/dadaist.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "mindmap/errors.hpp"
#include "mindmap/linguistic.hpp"
#include "mindmap/utf8.hpp"

namespace mindmap {
namespace {

enum class TagKind { Domain, Pos };

std::vector<TaggedWord> cross_tag_candidates(TagKind kind, const TagLexicon& tags,
                                             std::span<const std::string> vocab, std::string_view seed,
                                             std::size_t k, Rng& rng) {
  const auto lookup = [&](std::string_view w) { return kind == TagKind::Domain ? tags.domain(w) : tags.pos(w); };
  const auto has = [&](std::string_view w) { return kind == TagKind::Domain ? tags.has_domain(w) : tags.has_pos(w); };
  if (!has(seed)) throw MissingTagError(kind == TagKind::Domain ? "domain" : "part-of-speech", std::string(seed));
  const auto seed_tag = lookup(seed);

  std::vector<std::string> eligible;
  for (const auto& w : vocab) {
    if (w != seed && has(w) && lookup(w) != seed_tag) eligible.push_back(w);
  }
  std::sort(eligible.begin(), eligible.end());
  eligible.erase(std::unique(eligible.begin(), eligible.end()), eligible.end());

  std::vector<TaggedWord> out;
  for (auto& w : sample_without_replacement(std::move(eligible), k, rng)) {
    auto tag = std::string(lookup(w));
    out.push_back({std::move(w), std::move(tag)});
  }
  return out;
}

// Seed-side data for repeated admission checks.
struct SeedProfile {
  std::size_t index;
  std::u32string chars;
  std::vector<std::string> keys;
};

SeedProfile profile(const EmbeddingStore& store, const PhoneticLexicon& phonetic, std::string_view seed,
                    const DadaConfig& cfg) {
  const auto idx = store.index_of(seed);
  if (!idx) throw OutOfVocabularyError(std::string(seed));
  return {*idx, utf8::decode(seed), phonetic.keys(seed, cfg.tone_mode)};
}

bool admits(const EmbeddingStore& store, const PhoneticLexicon& phonetic, const SeedProfile& seed,
            std::size_t word, const DadaConfig& cfg) {
  if (word == seed.index) return false;
  if (store.norm(word) == 0.0 || store.norm(seed.index) == 0.0) return false;
  if (!(store.similarity_at(seed.index, word) < cfg.semantic_ceiling)) return false;
  const auto& text = store.word(word);
  if (cfg.forbid_shared_char) {
    const auto chars = utf8::decode(text);
    for (char32_t c : chars) {
      if (seed.chars.find(c) != std::u32string::npos) return false;
    }
  }
  if (cfg.forbid_shared_syllable && !seed.keys.empty()) {
    for (const auto& key : phonetic.keys(text, cfg.tone_mode)) {
      if (std::binary_search(seed.keys.begin(), seed.keys.end(), key)) return false;
    }
  }
  return true;
}

}  // namespace

void DadaConfig::validate() const {
  if (!std::isfinite(semantic_ceiling) || semantic_ceiling < -1.0 || semantic_ceiling > 1.0) {
    throw ConfigError("dada semantic_ceiling must lie in [-1, 1]");
  }
}

std::vector<TaggedWord> cross_domain_candidates(const TagLexicon& tags, std::span<const std::string> vocab,
                                                std::string_view seed, std::size_t k, Rng& rng) {
  return cross_tag_candidates(TagKind::Domain, tags, vocab, seed, k, rng);
}

std::vector<TaggedWord> cross_pos_candidates(const TagLexicon& tags, std::span<const std::string> vocab,
                                             std::string_view seed, std::size_t k, Rng& rng) {
  return cross_tag_candidates(TagKind::Pos, tags, vocab, seed, k, rng);
}

std::vector<std::string> dada_pool(const EmbeddingStore& store, const PhoneticLexicon& phonetic,
                                   std::string_view seed, const DadaConfig& cfg) {
  cfg.validate();
  const auto sp = profile(store, phonetic, seed, cfg);
  std::vector<std::string> pool;
  for (std::size_t i = 0; i < store.size(); ++i) {
    if (admits(store, phonetic, sp, i, cfg)) pool.push_back(store.word(i));
  }
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::vector<std::string> random_candidates(const EmbeddingStore& store, const PhoneticLexicon& phonetic,
                                           std::string_view seed, std::size_t k, const DadaConfig& cfg, Rng& rng) {
  return sample_without_replacement(dada_pool(store, phonetic, seed, cfg), k, rng);
}

bool dada_admits(const EmbeddingStore& store, const PhoneticLexicon& phonetic, std::string_view seed,
                 std::string_view word, const DadaConfig& cfg) {
  const auto sp = profile(store, phonetic, seed, cfg);
  const auto idx = store.index_of(word);
  return idx && admits(store, phonetic, sp, *idx, cfg);
}

}  // namespace mindmap
