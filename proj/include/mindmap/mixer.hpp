// Copyright 2026 The Mindmap Authors.
// Licensed under the Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mindmap/assets.hpp"
#include "mindmap/dadaist.hpp"
#include "mindmap/lexicon.hpp"
#include "mindmap/linguistic.hpp"

namespace mindmap {

/// The four expansion strategies. Declaration order is the column order of
/// distribution reports and the remainder tie-break order of apportion().
enum class Provenance { SemanticSimilarity, LinguisticFeature, Dadaism, AuthorStyle };

inline constexpr std::array<Provenance, 4> kProvenances = {
    Provenance::SemanticSimilarity, Provenance::LinguisticFeature, Provenance::Dadaism, Provenance::AuthorStyle};

/// Dedup winner order and deficit refill order.
inline constexpr std::array<Provenance, 4> kResolutionOrder = {
    Provenance::AuthorStyle, Provenance::LinguisticFeature, Provenance::SemanticSimilarity, Provenance::Dadaism};

std::string_view to_string(Provenance p) noexcept;
/// Accepts to_string() names and the short keys semantic|linguistic|dadaism|author.
Provenance parse_provenance(std::string_view text);
std::string_view short_name(Provenance p) noexcept;

inline constexpr std::size_t index_of(Provenance p) noexcept { return static_cast<std::size_t>(p); }

/// Share of candidates per provenance, indexed by index_of().
using Quotas = std::array<double, 4>;

/// Achieved distribution of the proposed method in the published comparison,
/// used as the default generation target.
inline constexpr Quotas kDefaultQuotas = {0.3516, 0.2637, 0.2286, 0.1561};
inline constexpr Quotas kBaselineQuotas = {1.0, 0.0, 0.0, 0.0};

void validate_quotas(const Quotas& quotas);

/// Largest-remainder split of `n` slots. Remainder ties go to the earlier
/// provenance in declaration order.
std::array<std::size_t, 4> apportion(const Quotas& quotas, std::size_t n);

struct MixConfig {
  std::size_t max_candidates = 7;
  Quotas quotas = kDefaultQuotas;
  std::uint64_t rng_seed = 0;

  // linguistic
  std::size_t min_shared = 1;
  ToneMode tone_mode = ToneMode::Insensitive;
  HomophoneScope homophone_scope = HomophoneScope::AnySyllable;

  // artist graph
  std::size_t graph_depth = 2;

  // Dadaism; dada.rng_seed is ignored here, streams derive from rng_seed
  DadaConfig dada;

  void validate() const;
};

struct Candidate {
  std::string word;
  Provenance provenance = Provenance::SemanticSimilarity;
  std::optional<double> similarity;  // nullopt when either word lacks a vector
  std::string detail;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

/// Throws InvalidSeedError unless `seed` passes the vocabulary filter.
void check_seed(std::string_view seed, const Assets& assets);

/// Expands `seed` into at most cfg.max_candidates candidates.
///
/// Slots are apportioned across strategies from the quotas. Strategies pick in
/// kResolutionOrder, skipping words an earlier strategy already took; any
/// shortfall is refilled from the remaining pools in the same order. Output is
/// grouped by provenance in declaration order, each block in pool order with
/// unknown-similarity candidates last. `excluded` words are never returned.
std::vector<Candidate> expand(std::string_view seed, const MixConfig& cfg, const Assets& assets,
                              const WordSet& excluded = {});

}  // namespace mindmap
