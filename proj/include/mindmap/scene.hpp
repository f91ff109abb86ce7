// Copyright 2026 The Mindmap Authors.
// Licensed under the Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mindmap/embedding_store.hpp"

namespace mindmap {

/// The six landscape categories a word can be painted as. Declaration order is
/// the tie-break order for classification.
enum class PaintingDomain { Architecture, Mountain, River, Grassland, Road, Lake };

inline constexpr std::array<PaintingDomain, 6> kPaintingDomains = {
    PaintingDomain::Architecture, PaintingDomain::Mountain, PaintingDomain::River,
    PaintingDomain::Grassland,    PaintingDomain::Road,     PaintingDomain::Lake};

std::string_view to_string(PaintingDomain d) noexcept;
/// Accepts the lowercase names produced by to_string(). Throws ConfigError.
PaintingDomain parse_painting_domain(std::string_view name);

/// Schematic glyph drawn for a domain.
struct PaintingElement {
  std::string_view glyph;  // stable id, see painting_element()
  double size = 0.0;       // default glyph extent in canvas units

  friend bool operator==(const PaintingElement&, const PaintingElement&) = default;
};

/// Glyph table:
///   Architecture → "architecture-pavilion"   (28)
///   Mountain     → "mountain-triangle-ridge" (34)
///   River        → "river-wave"              (30)
///   Grassland    → "grassland-tuft"          (24)
///   Road         → "road-segment"            (22)
///   Lake         → "lake-ellipse"            (30)
PaintingElement painting_element(PaintingDomain d) noexcept;

struct DomainClassification {
  PaintingDomain domain = PaintingDomain::Road;
  double confidence = 0.0;
};

/// Per-domain prototype words and their unit centroids.
class DomainPrototypes {
 public:
  DomainPrototypes() = default;

  /// TSV `domain<TAB>word`. Out-of-vocabulary (or zero-vector) prototypes are
  /// skipped with a warning; a domain left without prototypes is a ConfigError.
  static DomainPrototypes load(const std::filesystem::path& path, const EmbeddingStore& store);

  static DomainPrototypes build(const std::vector<std::pair<PaintingDomain, std::string>>& prototypes,
                                const EmbeddingStore& store);

  bool empty() const noexcept { return centroids_[0].empty(); }
  const std::vector<std::string>& prototypes(PaintingDomain d) const { return words_[static_cast<int>(d)]; }
  const std::vector<double>& centroid(PaintingDomain d) const { return centroids_[static_cast<int>(d)]; }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  /// Nearest centroid by cosine; ties go to the earlier domain. Words not in
  /// the store (or with zero vectors) fall back to (Road, 0).
  DomainClassification classify(std::string_view word, const EmbeddingStore& store) const;

 private:
  std::array<std::vector<std::string>, 6> words_;
  std::array<std::vector<double>, 6> centroids_;
  std::vector<std::string> warnings_;
};

}  // namespace mindmap
