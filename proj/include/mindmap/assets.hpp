// Copyright 2026 The Mindmap Authors.
// Licensed under the Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mindmap/artist_graph.hpp"
#include "mindmap/embedding_store.hpp"
#include "mindmap/lexicon.hpp"
#include "mindmap/scene.hpp"
#include "mindmap/words.hpp"

namespace mindmap {

/// Everything the expansion strategies read. Immutable once loaded.
struct Assets {
  VocabularyFilter filter;
  EmbeddingStore store;
  PhoneticLexicon phonetic;
  TagLexicon tags;
  KnowledgeGraph graph;
  DomainPrototypes prototypes;
  /// When set, every candidate pool is restricted to these words.
  std::optional<WordSet> allowlist;

  bool allowed(std::string_view word) const { return !allowlist || allowlist->contains(word); }

  /// Collected loader warnings (duplicate tags, skipped prototypes, ...).
  std::vector<std::string> warnings() const;
};

struct AssetPaths {
  std::filesystem::path embeddings;
  std::filesystem::path phonetic;
  std::filesystem::path pos;
  std::filesystem::path domains;
  std::filesystem::path graph;
  std::filesystem::path prototypes;
  std::filesystem::path allowlist;
};

/// Loads every non-empty path; the embedding file is required.
Assets load_assets(const AssetPaths& paths, const VocabularyFilter& filter = {});

/// One word per line, blank lines skipped.
std::vector<std::string> load_word_list(const std::filesystem::path& path);

}  // namespace mindmap
