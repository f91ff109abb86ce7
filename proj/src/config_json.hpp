// Copyright 2026 The Mindmap Authors.
// Licensed under the Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include "json.hpp"
#include "mindmap/eval.hpp"
#include "mindmap/generator.hpp"

namespace mindmap::detail {

nlohmann::json to_json(const GenerationConfig& cfg);
GenerationConfig generation_config_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MixConfig& cfg);
MixConfig mix_config_from_json(const nlohmann::json& j);

nlohmann::json to_json(const EvalThresholds& t);

}  // namespace mindmap::detail
