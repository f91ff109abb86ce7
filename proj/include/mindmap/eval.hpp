// Copyright 2026 The Mindmap Authors.
// Licensed under the Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "mindmap/assets.hpp"
#include "mindmap/mixer.hpp"

namespace mindmap {

struct EvalThresholds {
  /// Cosine at or above which an otherwise unconnected word counts as semantic.
  double semantic_floor = 0.35;
  ToneMode tone_mode = ToneMode::Insensitive;
};

/// Rule cascade standing in for manual method annotation:
///   AuthorStyle        word is an ancestor or descendant of seed in the graph
///   LinguisticFeature  otherwise, shares a character or a syllable with seed
///   SemanticSimilarity otherwise, cosine >= semantic_floor
///   Dadaism            otherwise
Provenance annotate_provenance(std::string_view seed, std::string_view word, const Assets& assets,
                               const EvalThresholds& thresholds = {});

struct DistributionReport {
  std::string label;
  std::array<std::size_t, 4> counts{};
  std::size_t total = 0;

  /// Exact percentage (0 when the report is empty).
  double percent(Provenance p) const;
};

DistributionReport distribution_report(const std::vector<Provenance>& annotated, std::string label);

/// Mixer label vs annotator label for one candidate.
struct Disagreement {
  std::string seed;
  std::string word;
  Provenance generated;
  Provenance annotated;
};

struct RunSummary {
  DistributionReport report;
  std::size_t candidates = 0;
  std::vector<Disagreement> disagreements;
};

/// Expands every seed under `cfg` and annotates each candidate.
RunSummary evaluate_config(const std::vector<std::string>& seeds, const MixConfig& cfg, const Assets& assets,
                           const EvalThresholds& thresholds, std::string label);

struct Comparison {
  RunSummary baseline;
  RunSummary proposed;
  EvalThresholds thresholds;
};

/// Baseline run uses `proposed` with quotas forced to pure semantic similarity.
Comparison compare_configs(const std::vector<std::string>& seeds, const MixConfig& proposed, const Assets& assets,
                           const EvalThresholds& thresholds = {});

/// Aligned plain-text table, one row per report, percentages to 2 decimals.
std::string format_reports(const std::vector<DistributionReport>& reports, const EvalThresholds& thresholds);

/// JSON document with both reports, thresholds and disagreement counts.
std::string comparison_json(const Comparison& comparison);

}  // namespace mindmap
