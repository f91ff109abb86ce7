// Copyright 2026 The Mindmap Authors.
// Licensed under the Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mindmap/embedding_store.hpp"
#include "mindmap/lexicon.hpp"
#include "mindmap/random.hpp"

namespace mindmap {

/// Admission rules for "unconnected" candidates: a word qualifies when its
/// cosine similarity to the seed is below the ceiling and, when the flags are
/// set, it shares no character and no syllable with the seed.
struct DadaConfig {
  std::uint64_t rng_seed = 0;
  double semantic_ceiling = 0.35;
  bool forbid_shared_char = true;
  bool forbid_shared_syllable = true;
  ToneMode tone_mode = ToneMode::Insensitive;

  void validate() const;
};

struct TaggedWord {
  std::string word;
  std::string tag;

  friend bool operator==(const TaggedWord&, const TaggedWord&) = default;
};

/// Uniform sample of `k` words whose topical domain is known and differs from
/// the seed's. Throws MissingTagError when the seed has no domain tag.
std::vector<TaggedWord> cross_domain_candidates(const TagLexicon& tags, std::span<const std::string> vocab,
                                                std::string_view seed, std::size_t k, Rng& rng);

/// Same with part-of-speech tags.
std::vector<TaggedWord> cross_pos_candidates(const TagLexicon& tags, std::span<const std::string> vocab,
                                             std::string_view seed, std::size_t k, Rng& rng);

/// Every store word admitted by the rules above, in code-point order.
/// Throws OutOfVocabularyError when the seed is not in the store.
std::vector<std::string> dada_pool(const EmbeddingStore& store, const PhoneticLexicon& phonetic,
                                   std::string_view seed, const DadaConfig& cfg);

/// Uniform sample of `k` words from dada_pool().
std::vector<std::string> random_candidates(const EmbeddingStore& store, const PhoneticLexicon& phonetic,
                                           std::string_view seed, std::size_t k, const DadaConfig& cfg, Rng& rng);

/// Re-checks the admission rules for one word.
bool dada_admits(const EmbeddingStore& store, const PhoneticLexicon& phonetic, std::string_view seed,
                 std::string_view word, const DadaConfig& cfg);

}  // namespace mindmap
