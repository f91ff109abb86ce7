// Copyright 2026 The Mindmap Authors.
// Licensed under the Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "mindmap/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <cmath>
#include <functional>
#include <map>

#include "config_json.hpp"
#include "mindmap/errors.hpp"

namespace mindmap {
namespace {

namespace pt = boost::property_tree;

std::string where(const std::string& section, const std::string& key) { return "[" + section + "] " + key; }

std::size_t to_size(const std::string& v, const std::string& at) {
  std::size_t out = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size()) throw ConfigError(at + ": expected a non-negative integer");
  return out;
}

std::uint64_t to_u64(const std::string& v, const std::string& at) {
  std::uint64_t out = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size()) throw ConfigError(at + ": expected an unsigned 64-bit integer");
  return out;
}

double to_double(const std::string& v, const std::string& at) {
  double out = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size() || !std::isfinite(out)) throw ConfigError(at + ": expected a number");
  return out;
}

bool to_bool(const std::string& v, const std::string& at) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError(at + ": expected true or false");
}

HomophoneScope to_scope(const std::string& v, const std::string& at) {
  if (v == "any") return HomophoneScope::AnySyllable;
  if (v == "whole-word") return HomophoneScope::WholeWord;
  throw ConfigError(at + ": expected any or whole-word");
}

using Setter = std::function<void(Settings&, const std::string&, const std::string&)>;

const std::map<std::string, std::map<std::string, Setter>>& setters() {
  static const std::map<std::string, std::map<std::string, Setter>> table = {
      {"vocabulary",
       {{"max_chars", [](Settings& s, const std::string& v, const std::string& at) { s.filter.max_chars = to_size(v, at); }}}},
      {"mix",
       {{"max_candidates",
         [](Settings& s, const std::string& v, const std::string& at) { s.generation.mix.max_candidates = to_size(v, at); }},
        {"rng_seed",
         [](Settings& s, const std::string& v, const std::string& at) { s.generation.mix.rng_seed = to_u64(v, at); }}}},
      {"quotas",
       {{"semantic", [](Settings& s, const std::string& v, const std::string& at) { s.generation.mix.quotas[0] = to_double(v, at); }},
        {"linguistic", [](Settings& s, const std::string& v, const std::string& at) { s.generation.mix.quotas[1] = to_double(v, at); }},
        {"dadaism", [](Settings& s, const std::string& v, const std::string& at) { s.generation.mix.quotas[2] = to_double(v, at); }},
        {"author", [](Settings& s, const std::string& v, const std::string& at) { s.generation.mix.quotas[3] = to_double(v, at); }}}},
      {"linguistic",
       {{"min_shared", [](Settings& s, const std::string& v, const std::string& at) { s.generation.mix.min_shared = to_size(v, at); }},
        {"tone_mode",
         [](Settings& s, const std::string& v, const std::string&) {
           s.generation.mix.tone_mode = parse_tone_mode(v);
           s.generation.mix.dada.tone_mode = s.generation.mix.tone_mode;
           s.eval.tone_mode = s.generation.mix.tone_mode;
         }},
        {"homophone_scope",
         [](Settings& s, const std::string& v, const std::string& at) { s.generation.mix.homophone_scope = to_scope(v, at); }}}},
      {"graph",
       {{"depth", [](Settings& s, const std::string& v, const std::string& at) { s.generation.mix.graph_depth = to_size(v, at); }}}},
      {"dada",
       {{"semantic_ceiling",
         [](Settings& s, const std::string& v, const std::string& at) { s.generation.mix.dada.semantic_ceiling = to_double(v, at); }},
        {"forbid_shared_char",
         [](Settings& s, const std::string& v, const std::string& at) { s.generation.mix.dada.forbid_shared_char = to_bool(v, at); }},
        {"forbid_shared_syllable",
         [](Settings& s, const std::string& v, const std::string& at) {
           s.generation.mix.dada.forbid_shared_syllable = to_bool(v, at);
         }}}},
      {"generate",
       {{"iterations", [](Settings& s, const std::string& v, const std::string& at) { s.generation.iterations = to_size(v, at); }},
        {"seeds_per_iteration",
         [](Settings& s, const std::string& v, const std::string& at) { s.generation.seeds_per_iteration = to_size(v, at); }},
        {"canvas_width", [](Settings& s, const std::string& v, const std::string& at) { s.generation.canvas.width = to_double(v, at); }},
        {"canvas_height", [](Settings& s, const std::string& v, const std::string& at) { s.generation.canvas.height = to_double(v, at); }},
        {"min_len", [](Settings& s, const std::string& v, const std::string& at) { s.generation.min_len = to_double(v, at); }},
        {"max_len", [](Settings& s, const std::string& v, const std::string& at) { s.generation.max_len = to_double(v, at); }},
        {"overlap_epsilon",
         [](Settings& s, const std::string& v, const std::string& at) { s.generation.overlap_epsilon = to_double(v, at); }},
        {"rotation_step_deg",
         [](Settings& s, const std::string& v, const std::string& at) { s.generation.rotation_step_deg = to_double(v, at); }}}},
      {"eval",
       {{"semantic_floor", [](Settings& s, const std::string& v, const std::string& at) { s.eval.semantic_floor = to_double(v, at); }}}},
  };
  return table;
}

}  // namespace

Settings default_settings() { return Settings{}; }

Settings load_settings(const std::filesystem::path& path) { return load_settings(path, default_settings()); }

Settings load_settings(const std::filesystem::path& path, Settings s) {
  pt::ptree tree;
  try {
    pt::read_ini(path.string(), tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(e.what());
  }
  const auto base_dir = path.parent_path();
  bool floor_set = false;
  for (const auto& [section, keys] : tree) {
    if (keys.empty() && !keys.data().empty()) throw ConfigError("key outside a section: " + section);
    if (section == "assets") {
      const std::map<std::string, std::filesystem::path AssetPaths::*> fields = {
          {"embeddings", &AssetPaths::embeddings}, {"phonetic", &AssetPaths::phonetic},
          {"pos", &AssetPaths::pos},               {"domains", &AssetPaths::domains},
          {"graph", &AssetPaths::graph},           {"prototypes", &AssetPaths::prototypes},
          {"allowlist", &AssetPaths::allowlist}};
      for (const auto& [key, node] : keys) {
        auto it = fields.find(key);
        if (it == fields.end()) throw ConfigError("unknown key " + where(section, key));
        std::filesystem::path p = node.data();
        s.assets.*(it->second) = p.is_absolute() || p.empty() ? p : base_dir / p;
      }
      continue;
    }
    const auto sec = setters().find(section);
    if (sec == setters().end()) throw ConfigError("unknown section [" + section + "]");
    for (const auto& [key, node] : keys) {
      auto it = sec->second.find(key);
      if (it == sec->second.end()) throw ConfigError("unknown key " + where(section, key));
      it->second(s, node.data(), where(section, key));
      if (section == "eval" && key == "semantic_floor") floor_set = true;
    }
  }
  if (!floor_set) s.eval.semantic_floor = s.generation.mix.dada.semantic_ceiling;
  s.filter.validate();
  s.generation.validate();
  return s;
}

namespace detail {

nlohmann::json to_json(const MixConfig& m) {
  nlohmann::json q = nlohmann::json::object();
  for (auto p : kProvenances) q[std::string(short_name(p))] = m.quotas[index_of(p)];
  return {
      {"max_candidates", m.max_candidates},
      {"quotas", q},
      {"rng_seed", m.rng_seed},
      {"min_shared", m.min_shared},
      {"tone_mode", std::string(to_string(m.tone_mode))},
      {"homophone_scope", m.homophone_scope == HomophoneScope::WholeWord ? "whole-word" : "any"},
      {"graph_depth", m.graph_depth},
      {"dada",
       {{"semantic_ceiling", m.dada.semantic_ceiling},
        {"forbid_shared_char", m.dada.forbid_shared_char},
        {"forbid_shared_syllable", m.dada.forbid_shared_syllable},
        {"tone_mode", std::string(to_string(m.dada.tone_mode))}}},
  };
}

MixConfig mix_config_from_json(const nlohmann::json& j) {
  MixConfig m;
  m.max_candidates = j.at("max_candidates").get<std::size_t>();
  for (auto p : kProvenances) m.quotas[index_of(p)] = j.at("quotas").at(std::string(short_name(p))).get<double>();
  m.rng_seed = j.at("rng_seed").get<std::uint64_t>();
  m.min_shared = j.at("min_shared").get<std::size_t>();
  m.tone_mode = parse_tone_mode(j.at("tone_mode").get<std::string>());
  m.homophone_scope =
      j.at("homophone_scope").get<std::string>() == "whole-word" ? HomophoneScope::WholeWord : HomophoneScope::AnySyllable;
  m.graph_depth = j.at("graph_depth").get<std::size_t>();
  const auto& d = j.at("dada");
  m.dada.semantic_ceiling = d.at("semantic_ceiling").get<double>();
  m.dada.forbid_shared_char = d.at("forbid_shared_char").get<bool>();
  m.dada.forbid_shared_syllable = d.at("forbid_shared_syllable").get<bool>();
  m.dada.tone_mode = parse_tone_mode(d.at("tone_mode").get<std::string>());
  return m;
}

nlohmann::json to_json(const GenerationConfig& g) {
  return {
      {"iterations", g.iterations},
      {"seeds_per_iteration", g.seeds_per_iteration},
      {"canvas", {{"width", g.canvas.width}, {"height", g.canvas.height}}},
      {"min_len", g.min_len},
      {"max_len", g.max_len},
      {"overlap_epsilon", g.overlap_epsilon},
      {"rotation_step_deg", g.rotation_step_deg},
      {"mix", to_json(g.mix)},
  };
}

GenerationConfig generation_config_from_json(const nlohmann::json& j) {
  GenerationConfig g;
  g.iterations = j.at("iterations").get<std::size_t>();
  g.seeds_per_iteration = j.at("seeds_per_iteration").get<std::size_t>();
  g.canvas.width = j.at("canvas").at("width").get<double>();
  g.canvas.height = j.at("canvas").at("height").get<double>();
  g.min_len = j.at("min_len").get<double>();
  g.max_len = j.at("max_len").get<double>();
  g.overlap_epsilon = j.at("overlap_epsilon").get<double>();
  g.rotation_step_deg = j.at("rotation_step_deg").get<double>();
  g.mix = mix_config_from_json(j.at("mix"));
  return g;
}

nlohmann::json to_json(const EvalThresholds& t) {
  return {{"semantic_floor", t.semantic_floor}, {"tone_mode", std::string(to_string(t.tone_mode))}};
}

}  // namespace detail
}  // namespace mindmap
