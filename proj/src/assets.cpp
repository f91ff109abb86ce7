// Copyright 2026 The Mindmap Authors.
// Licensed under the Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "mindmap/assets.hpp"

#include "mindmap/errors.hpp"
#include "mindmap/utf8.hpp"
#include "text_io.hpp"

namespace mindmap {

std::vector<std::string> Assets::warnings() const {
  std::vector<std::string> out;
  for (const auto* list : {&phonetic.warnings(), &tags.warnings(), &prototypes.warnings()}) {
    out.insert(out.end(), list->begin(), list->end());
  }
  return out;
}

Assets load_assets(const AssetPaths& paths, const VocabularyFilter& filter) {
  if (paths.embeddings.empty()) throw ConfigError("an embedding file is required");
  Assets a;
  a.filter = filter;
  a.store = EmbeddingStore::load(paths.embeddings, filter);
  if (!paths.phonetic.empty()) a.phonetic = PhoneticLexicon::load(paths.phonetic);
  if (!paths.pos.empty() || !paths.domains.empty()) a.tags = TagLexicon::load(paths.pos, paths.domains);
  if (!paths.graph.empty()) a.graph = KnowledgeGraph::load(paths.graph);
  if (!paths.prototypes.empty()) a.prototypes = DomainPrototypes::load(paths.prototypes, a.store);
  if (!paths.allowlist.empty()) {
    WordSet allow;
    for (auto& w : load_word_list(paths.allowlist)) allow.insert(std::move(w));
    a.allowlist = std::move(allow);
  }
  return a;
}

std::vector<std::string> load_word_list(const std::filesystem::path& path) {
  auto in = detail::open_input(path);
  std::vector<std::string> out;
  std::string line;
  std::size_t line_no = 0;
  while (detail::read_line(in, line)) {
    ++line_no;
    const auto w = detail::trim(line);
    if (w.empty()) continue;
    if (!utf8::valid(w)) throw FormatError("word is not valid UTF-8 in " + path.string(), line_no);
    out.emplace_back(w);
  }
  return out;
}

}  // namespace mindmap
