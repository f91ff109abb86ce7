// Copyright 2026 The Mindmap Authors.
// Licensed under the Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "config_json.hpp"
#include "mindmap/errors.hpp"
#include "mindmap/render.hpp"

namespace mindmap {

using nlohmann::json;

std::string export_trace(const MindMap& map) {
  json nodes = json::array();
  for (std::size_t i = 0; i < map.nodes.size(); ++i) {
    const auto& n = map.nodes[i];
    nodes.push_back({
        {"id", i},
        {"word", n.word},
        {"provenance", n.provenance ? json(std::string(to_string(*n.provenance))) : json(nullptr)},
        {"domain", std::string(to_string(n.domain))},
        {"glyph", std::string(n.element.glyph)},
        {"parent", n.parent ? json(*n.parent) : json(nullptr)},
        {"similarity", n.similarity ? json(*n.similarity) : json(nullptr)},
        {"iteration", n.iteration},
        {"path_length", n.path_length},
        {"position", {{"x", n.position.x}, {"y", n.position.y}}},
        {"arc", {{"start", n.arc_start}, {"span", n.arc_span}}},
        {"detail", n.detail},
    });
  }
  const json doc = {
      {"schema_version", kTraceSchemaVersion},
      {"rng_seed", map.rng_seed()},
      {"canvas", {{"width", map.canvas.width}, {"height", map.canvas.height}}},
      {"config", detail::to_json(map.config)},
      {"nodes", nodes},
  };
  return doc.dump(2) + "\n";
}

MindMap parse_trace(std::string_view json_text) {
  try {
    const auto doc = json::parse(json_text);
    if (doc.at("schema_version").get<int>() != kTraceSchemaVersion) {
      throw FormatError("unsupported trace schema_version");
    }
    MindMap map;
    map.config = detail::generation_config_from_json(doc.at("config"));
    map.config.mix.rng_seed = doc.at("rng_seed").get<std::uint64_t>();
    map.canvas.width = doc.at("canvas").at("width").get<double>();
    map.canvas.height = doc.at("canvas").at("height").get<double>();
    const auto& nodes = doc.at("nodes");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const auto& r = nodes[i];
      if (r.at("id").get<std::size_t>() != i) throw FormatError("node ids must be 0..n-1 in order");
      MindMapNode n;
      n.word = r.at("word").get<std::string>();
      if (!r.at("provenance").is_null()) n.provenance = parse_provenance(r.at("provenance").get<std::string>());
      n.domain = parse_painting_domain(r.at("domain").get<std::string>());
      n.element = painting_element(n.domain);
      if (r.at("glyph").get<std::string>() != n.element.glyph) throw FormatError("glyph does not match domain");
      if (!r.at("parent").is_null()) {
        n.parent = r.at("parent").get<std::size_t>();
        if (*n.parent >= i) throw FormatError("parent must precede its child");
      }
      if (!r.at("similarity").is_null()) n.similarity = r.at("similarity").get<double>();
      n.iteration = r.at("iteration").get<std::size_t>();
      n.path_length = r.at("path_length").get<double>();
      n.position = {r.at("position").at("x").get<double>(), r.at("position").at("y").get<double>()};
      n.arc_start = r.at("arc").at("start").get<double>();
      n.arc_span = r.at("arc").at("span").get<double>();
      n.detail = r.at("detail").get<std::string>();
      map.nodes.push_back(std::move(n));
    }
    return map;
  } catch (const json::exception& e) {
    throw FormatError(std::string("trace: ") + e.what());
  } catch (const ConfigError& e) {
    throw FormatError(std::string("trace: ") + e.what());
  }
}

}  // namespace mindmap
