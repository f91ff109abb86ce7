// Copyright 2026 The Mindmap Authors.
// Licensed under the Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "mindmap/mixer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "mindmap/errors.hpp"
#include "mindmap/random.hpp"
#include "mindmap/utf8.hpp"

namespace mindmap {
namespace {

constexpr auto kAll = std::numeric_limits<std::size_t>::max();

struct PoolEntry {
  std::string word;
  std::string detail;
};
using Pool = std::vector<PoolEntry>;

class PoolBuilder {
 public:
  PoolBuilder(std::string_view seed, const MixConfig& cfg, const Assets& assets, const WordSet& excluded)
      : seed_(seed), cfg_(cfg), assets_(assets), excluded_(excluded), depth_(2 * cfg.max_candidates) {}

  Pool build(Provenance p) const {
    switch (p) {
      case Provenance::AuthorStyle: return author();
      case Provenance::LinguisticFeature: return linguistic();
      case Provenance::SemanticSimilarity: return semantic();
      case Provenance::Dadaism: return dadaism();
    }
    return {};
  }

 private:
  bool usable(std::string_view w) const {
    return w != seed_ && !excluded_.contains(w) && assets_.allowed(w);
  }
  bool in_vocabulary(std::string_view w) const {
    return assets_.filter.admits(w) && (!assets_.filter.require_in_embeddings || assets_.store.contains(w));
  }
  bool seed_in_store() const { return assets_.store.contains(seed_); }

  Pool author() const {
    Pool out;
    for (auto& n : assets_.graph.expand(seed_, cfg_.graph_depth, kAll)) {
      if (!usable(n.word) || !assets_.filter.admits(n.word)) continue;
      out.push_back({n.word, std::string(to_string(n.relation)) + ":" + std::to_string(n.hops)});
      if (out.size() == depth_) break;
    }
    return out;
  }

  Pool linguistic() const {
    Pool lexical;
    for (auto& m : lexical_candidates(assets_.store.words(), seed_, cfg_.min_shared, kAll)) {
      if (usable(m.word)) lexical.push_back({m.word, "substring:" + m.shared});
      if (lexical.size() == depth_) break;
    }
    Pool homophones;
    if (assets_.phonetic.contains(seed_)) {
      for (auto& m : homophone_candidates(assets_.phonetic, seed_, cfg_.tone_mode, kAll, cfg_.homophone_scope)) {
        if (usable(m.word) && in_vocabulary(m.word)) homophones.push_back({m.word, "syllable:" + m.shared_syllable});
        if (homophones.size() == depth_) break;
      }
    }
    return interleave({&lexical, &homophones});
  }

  Pool semantic() const {
    Pool out;
    if (!seed_in_store()) return out;
    const auto k = assets_.allowlist ? assets_.store.size() : depth_;
    for (auto& n : assets_.store.nearest_neighbors(seed_, k, excluded_)) {
      if (!usable(n.word)) continue;
      out.push_back({n.word, "cosine"});
      if (out.size() == depth_) break;
    }
    return out;
  }

  Pool dadaism() const {
    if (!seed_in_store()) return {};
    std::vector<std::string> eligible;
    for (auto& w : dada_pool(assets_.store, assets_.phonetic, seed_, cfg_.dada)) {
      if (usable(w)) eligible.push_back(std::move(w));
    }
    const std::string label(seed_);
    Pool by_domain, by_pos, random;
    if (assets_.tags.has_domain(seed_)) {
      auto rng = Rng::derive(cfg_.rng_seed, label + "\x1f" "dada-domain");
      for (auto& t : cross_domain_candidates(assets_.tags, eligible, seed_, depth_, rng)) {
        by_domain.push_back({t.word, "cross-domain:" + t.tag});
      }
    }
    if (assets_.tags.has_pos(seed_)) {
      auto rng = Rng::derive(cfg_.rng_seed, label + "\x1f" "dada-pos");
      for (auto& t : cross_pos_candidates(assets_.tags, eligible, seed_, depth_, rng)) {
        by_pos.push_back({t.word, "cross-pos:" + t.tag});
      }
    }
    auto rng = Rng::derive(cfg_.rng_seed, label + "\x1f" "dada-random");
    for (auto& w : sample_without_replacement(std::move(eligible), depth_, rng)) random.push_back({w, "random"});
    return interleave({&by_domain, &by_pos, &random});
  }

  // Round-robin merge, first occurrence of a word wins.
  Pool interleave(std::initializer_list<const Pool*> pools) const {
    Pool out;
    WordSet seen;
    std::size_t longest = 0;
    for (const auto* p : pools) longest = std::max(longest, p->size());
    for (std::size_t i = 0; i < longest && out.size() < depth_; ++i) {
      for (const auto* p : pools) {
        if (i < p->size() && seen.insert((*p)[i].word).second) out.push_back((*p)[i]);
        if (out.size() == depth_) break;
      }
    }
    return out;
  }

  std::string_view seed_;
  const MixConfig& cfg_;
  const Assets& assets_;
  const WordSet& excluded_;
  std::size_t depth_;
};

}  // namespace

std::string_view to_string(Provenance p) noexcept {
  switch (p) {
    case Provenance::SemanticSimilarity: return "SemanticSimilarity";
    case Provenance::LinguisticFeature: return "LinguisticFeature";
    case Provenance::Dadaism: return "Dadaism";
    case Provenance::AuthorStyle: return "AuthorStyle";
  }
  return "SemanticSimilarity";
}

std::string_view short_name(Provenance p) noexcept {
  switch (p) {
    case Provenance::SemanticSimilarity: return "semantic";
    case Provenance::LinguisticFeature: return "linguistic";
    case Provenance::Dadaism: return "dadaism";
    case Provenance::AuthorStyle: return "author";
  }
  return "semantic";
}

Provenance parse_provenance(std::string_view text) {
  for (auto p : kProvenances) {
    if (text == to_string(p) || text == short_name(p)) return p;
  }
  throw ConfigError("unknown provenance '" + std::string(text) + "'");
}

void validate_quotas(const Quotas& quotas) {
  double sum = 0.0;
  for (double q : quotas) {
    if (!std::isfinite(q) || q < 0.0) throw ConfigError("quotas must be finite and non-negative");
    sum += q;
  }
  if (std::abs(sum - 1.0) > 1e-6) throw ConfigError("quotas must sum to 1 (got " + std::to_string(sum) + ")");
}

std::array<std::size_t, 4> apportion(const Quotas& quotas, std::size_t n) {
  validate_quotas(quotas);
  std::array<std::size_t, 4> counts{};
  std::array<double, 4> remainder{};
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    const double exact = quotas[i] * static_cast<double>(n);
    counts[i] = static_cast<std::size_t>(std::floor(exact));
    remainder[i] = exact - static_cast<double>(counts[i]);
    assigned += counts[i];
  }
  // Rounding in quotas*n can push the floor sum one past n.
  while (assigned > n) {
    auto i = static_cast<std::size_t>(
        std::distance(remainder.begin(), std::min_element(remainder.begin(), remainder.end())));
    if (counts[i] == 0) break;
    --counts[i];
    --assigned;
    remainder[i] += 1.0;
  }
  std::array<std::size_t, 4> order = {0, 1, 2, 3};
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
  for (std::size_t r = 0; assigned < n; r = (r + 1) % 4) {
    ++counts[order[r]];
    ++assigned;
  }
  return counts;
}

void MixConfig::validate() const {
  if (max_candidates < 1) throw ConfigError("max_candidates must be >= 1");
  if (min_shared < 1) throw ConfigError("min_shared must be >= 1");
  if (graph_depth < 1) throw ConfigError("graph depth must be >= 1");
  validate_quotas(quotas);
  dada.validate();
}

void check_seed(std::string_view seed, const Assets& assets) {
  if (seed.empty()) throw InvalidSeedError(std::string(seed), "empty");
  if (!utf8::valid(seed)) throw InvalidSeedError(std::string(seed), "not valid UTF-8");
  if (utf8::length(seed) > assets.filter.max_chars) {
    throw InvalidSeedError(std::string(seed), "longer than " + std::to_string(assets.filter.max_chars) + " characters");
  }
  if (assets.filter.require_in_embeddings && !assets.store.contains(seed)) {
    throw InvalidSeedError(std::string(seed), "not in the embedding vocabulary");
  }
}

std::vector<Candidate> expand(std::string_view seed, const MixConfig& cfg, const Assets& assets,
                              const WordSet& excluded) {
  cfg.validate();
  check_seed(seed, assets);
  const auto counts = apportion(cfg.quotas, cfg.max_candidates);
  const PoolBuilder builder(seed, cfg, assets, excluded);

  std::array<std::optional<Pool>, 4> pools;
  std::array<std::size_t, 4> cursor{};
  const auto pool = [&](Provenance p) -> const Pool& {
    auto& slot = pools[index_of(p)];
    if (!slot) slot = builder.build(p);
    return *slot;
  };

  std::array<std::vector<Candidate>, 4> picked;
  WordSet taken;
  std::size_t total = 0;
  const auto take = [&](Provenance p, std::size_t want) {
    const auto& entries = pool(p);
    auto& pos = cursor[index_of(p)];
    std::size_t got = 0;
    while (got < want && pos < entries.size()) {
      const auto& e = entries[pos++];
      if (!taken.insert(e.word).second) continue;
      picked[index_of(p)].push_back({e.word, p, assets.store.similarity(seed, e.word), e.detail});
      ++got;
    }
    total += got;
  };

  for (auto p : kResolutionOrder) {
    if (counts[index_of(p)] > 0) take(p, counts[index_of(p)]);
  }
  for (auto p : kResolutionOrder) {
    if (total >= cfg.max_candidates) break;
    take(p, cfg.max_candidates - total);
  }

  std::vector<Candidate> out;
  out.reserve(total);
  for (auto p : kProvenances) {
    auto& block = picked[index_of(p)];
    std::stable_partition(block.begin(), block.end(), [](const Candidate& c) { return c.similarity.has_value(); });
    for (auto& c : block) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace mindmap
