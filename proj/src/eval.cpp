// Copyright 2026 The Mindmap Authors.
// Licensed under the Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "mindmap/eval.hpp"

#include <cstdio>

#include "config_json.hpp"
#include "mindmap/linguistic.hpp"

namespace mindmap {

Provenance annotate_provenance(std::string_view seed, std::string_view word, const Assets& assets,
                               const EvalThresholds& thresholds) {
  if (assets.graph.related(seed, word)) return Provenance::AuthorStyle;
  if (shares_character(seed, word) || shares_syllable(assets.phonetic, seed, word, thresholds.tone_mode)) {
    return Provenance::LinguisticFeature;
  }
  const auto sim = assets.store.similarity(seed, word);
  if (sim && *sim >= thresholds.semantic_floor) return Provenance::SemanticSimilarity;
  return Provenance::Dadaism;
}

double DistributionReport::percent(Provenance p) const {
  if (total == 0) return 0.0;
  return 100.0 * static_cast<double>(counts[index_of(p)]) / static_cast<double>(total);
}

DistributionReport distribution_report(const std::vector<Provenance>& annotated, std::string label) {
  DistributionReport r;
  r.label = std::move(label);
  for (auto p : annotated) ++r.counts[index_of(p)];
  r.total = annotated.size();
  return r;
}

RunSummary evaluate_config(const std::vector<std::string>& seeds, const MixConfig& cfg, const Assets& assets,
                           const EvalThresholds& thresholds, std::string label) {
  RunSummary run;
  std::vector<Provenance> labels;
  for (const auto& seed : seeds) {
    for (const auto& c : expand(seed, cfg, assets)) {
      const auto annotated = annotate_provenance(seed, c.word, assets, thresholds);
      labels.push_back(annotated);
      if (annotated != c.provenance) run.disagreements.push_back({seed, c.word, c.provenance, annotated});
    }
  }
  run.candidates = labels.size();
  run.report = distribution_report(labels, std::move(label));
  return run;
}

Comparison compare_configs(const std::vector<std::string>& seeds, const MixConfig& proposed, const Assets& assets,
                           const EvalThresholds& thresholds) {
  for (const auto& s : seeds) check_seed(s, assets);
  MixConfig baseline = proposed;
  baseline.quotas = kBaselineQuotas;
  Comparison out;
  out.thresholds = thresholds;
  out.baseline = evaluate_config(seeds, baseline, assets, thresholds, "baseline");
  out.proposed = evaluate_config(seeds, proposed, assets, thresholds, "proposed");
  return out;
}

std::string format_reports(const std::vector<DistributionReport>& reports, const EvalThresholds& thresholds) {
  std::string out;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-10s %10s %10s %10s %10s %8s\n", "", "Semantic", "Linguistic", "Dadaism",
                "Author", "Total");
  out += buf;
  for (const auto& r : reports) {
    std::snprintf(buf, sizeof buf, "%-10s %9.2f%% %9.2f%% %9.2f%% %9.2f%% %8zu\n", r.label.c_str(),
                  r.percent(Provenance::SemanticSimilarity), r.percent(Provenance::LinguisticFeature),
                  r.percent(Provenance::Dadaism), r.percent(Provenance::AuthorStyle), r.total);
    out += buf;
  }
  std::snprintf(buf, sizeof buf, "semantic_floor=%.4g tone_mode=%s\n", thresholds.semantic_floor,
                std::string(to_string(thresholds.tone_mode)).c_str());
  out += buf;
  return out;
}

std::string comparison_json(const Comparison& comparison) {
  const auto report_json = [](const RunSummary& run) {
    nlohmann::json counts = nlohmann::json::object();
    nlohmann::json percents = nlohmann::json::object();
    for (auto p : kProvenances) {
      counts[std::string(to_string(p))] = run.report.counts[index_of(p)];
      percents[std::string(to_string(p))] = run.report.percent(p);
    }
    return nlohmann::json{{"label", run.report.label},
                          {"total", run.report.total},
                          {"counts", counts},
                          {"percent", percents},
                          {"disagreements", run.disagreements.size()}};
  };
  const nlohmann::json doc = {
      {"thresholds", detail::to_json(comparison.thresholds)},
      {"reports", {report_json(comparison.baseline), report_json(comparison.proposed)}},
  };
  return doc.dump(2) + "\n";
}

}  // namespace mindmap
