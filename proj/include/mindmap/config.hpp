// Copyright 2026 The Mindmap Authors.
// Licensed under the Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <filesystem>
#include <optional>

#include "mindmap/assets.hpp"
#include "mindmap/eval.hpp"
#include "mindmap/generator.hpp"

namespace mindmap {

/// Everything a run can be configured with.
struct Settings {
  GenerationConfig generation;
  VocabularyFilter filter;
  EvalThresholds eval;
  AssetPaths assets;
};

/// Reads an INI file on top of the defaults. Sections and keys:
///
///   [assets]      embeddings phonetic pos domains graph prototypes allowlist
///                 (relative paths resolve against the config file's directory)
///   [vocabulary]  max_chars
///   [mix]         max_candidates rng_seed
///   [quotas]      semantic linguistic dadaism author
///   [linguistic]  min_shared tone_mode(sensitive|insensitive)
///                 homophone_scope(any|whole-word)
///   [graph]       depth
///   [dada]        semantic_ceiling forbid_shared_char forbid_shared_syllable
///   [generate]    iterations seeds_per_iteration canvas_width canvas_height
///                 min_len max_len overlap_epsilon rotation_step_deg
///   [eval]        semantic_floor (defaults to dada.semantic_ceiling)
///
/// Unknown sections or keys are a ConfigError.
Settings load_settings(const std::filesystem::path& path);

/// Same, starting from `base`.
Settings load_settings(const std::filesystem::path& path, Settings base);

/// Defaults with the eval tone mode following the linguistic one.
Settings default_settings();

}  // namespace mindmap
