// Copyright 2026 The Mindmap Authors.
// Licensed under the Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "mindmap/scene.hpp"

#include "mindmap/errors.hpp"
#include "text_io.hpp"

namespace mindmap {

std::string_view to_string(PaintingDomain d) noexcept {
  switch (d) {
    case PaintingDomain::Architecture: return "architecture";
    case PaintingDomain::Mountain: return "mountain";
    case PaintingDomain::River: return "river";
    case PaintingDomain::Grassland: return "grassland";
    case PaintingDomain::Road: return "road";
    case PaintingDomain::Lake: return "lake";
  }
  return "road";
}

PaintingDomain parse_painting_domain(std::string_view name) {
  for (auto d : kPaintingDomains) {
    if (to_string(d) == name) return d;
  }
  throw ConfigError("unknown painting domain '" + std::string(name) + "'");
}

PaintingElement painting_element(PaintingDomain d) noexcept {
  switch (d) {
    case PaintingDomain::Architecture: return {"architecture-pavilion", 28.0};
    case PaintingDomain::Mountain: return {"mountain-triangle-ridge", 34.0};
    case PaintingDomain::River: return {"river-wave", 30.0};
    case PaintingDomain::Grassland: return {"grassland-tuft", 24.0};
    case PaintingDomain::Road: return {"road-segment", 22.0};
    case PaintingDomain::Lake: return {"lake-ellipse", 30.0};
  }
  return {"road-segment", 22.0};
}

DomainPrototypes DomainPrototypes::load(const std::filesystem::path& path, const EmbeddingStore& store) {
  auto in = detail::open_input(path);
  std::vector<std::pair<PaintingDomain, std::string>> entries;
  std::string line;
  std::size_t line_no = 0;
  while (detail::read_line(in, line)) {
    ++line_no;
    const auto content = detail::trim(line);
    if (content.empty() || content.front() == '#') continue;
    const auto fields = detail::split(content, '\t');
    if (fields.size() != 2) throw FormatError("expected domain<TAB>word", line_no);
    entries.emplace_back(parse_painting_domain(detail::trim(fields[0])), std::string(detail::trim(fields[1])));
  }
  return build(entries, store);
}

DomainPrototypes DomainPrototypes::build(const std::vector<std::pair<PaintingDomain, std::string>>& prototypes,
                                         const EmbeddingStore& store) {
  DomainPrototypes out;
  for (const auto& [domain, word] : prototypes) {
    const auto idx = store.index_of(word);
    if (!idx || store.norm(*idx) == 0.0) {
      out.warnings_.push_back("prototype '" + word + "' for " + std::string(to_string(domain)) +
                              " is not in the embedding store, skipped");
      continue;
    }
    auto& centroid = out.centroids_[static_cast<int>(domain)];
    if (centroid.empty()) centroid.assign(store.dim(), 0.0);
    const auto v = store.vector(*idx);
    const double n = store.norm(*idx);
    for (std::size_t i = 0; i < v.size(); ++i) centroid[i] += static_cast<double>(v[i]) / n;
    out.words_[static_cast<int>(domain)].push_back(word);
  }
  for (auto d : kPaintingDomains) {
    auto& centroid = out.centroids_[static_cast<int>(d)];
    if (centroid.empty()) {
      throw ConfigError("painting domain '" + std::string(to_string(d)) + "' has no in-vocabulary prototype");
    }
    const double n = euclidean_norm(std::span<const double>(centroid));
    if (n == 0.0) throw ConfigError("prototypes of '" + std::string(to_string(d)) + "' cancel out");
    for (auto& x : centroid) x /= n;
  }
  return out;
}

DomainClassification DomainPrototypes::classify(std::string_view word, const EmbeddingStore& store) const {
  const auto idx = store.index_of(word);
  if (empty() || !idx || store.norm(*idx) == 0.0) return {PaintingDomain::Road, 0.0};
  const auto v = store.vector(*idx);
  std::vector<double> wv(v.begin(), v.end());
  DomainClassification best{kPaintingDomains[0], -2.0};
  for (auto d : kPaintingDomains) {
    const double sim = cosine_similarity(std::span<const double>(wv), std::span<const double>(centroid(d)));
    if (sim > best.confidence) best = {d, sim};
  }
  return best;
}

}  // namespace mindmap
