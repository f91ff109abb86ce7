// Copyright 2026 The Mindmap Authors.
// Licensed under the Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

// mindmap: expand seed words, generate mind-map SVGs, and report provenance
// distributions.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mindmap/config.hpp"
#include "mindmap/errors.hpp"
#include "mindmap/eval.hpp"
#include "mindmap/generator.hpp"
#include "mindmap/mixer.hpp"
#include "mindmap/render.hpp"

namespace fs = std::filesystem;
using namespace mindmap;

namespace {

struct Flags {
  std::string config;
  AssetPaths assets;
  std::optional<std::uint64_t> rng_seed;
  std::optional<std::size_t> iterations;
  std::optional<std::size_t> max_candidates;
  std::vector<std::string> quotas;
  std::string out = ".";
  std::string name = "mindmap";
  bool json = false;
};

Settings resolve(const Flags& f) {
  Settings s = f.config.empty() ? default_settings() : load_settings(f.config);
  const auto override_path = [](fs::path& target, const fs::path& flag) {
    if (!flag.empty()) target = flag;
  };
  override_path(s.assets.embeddings, f.assets.embeddings);
  override_path(s.assets.phonetic, f.assets.phonetic);
  override_path(s.assets.pos, f.assets.pos);
  override_path(s.assets.domains, f.assets.domains);
  override_path(s.assets.graph, f.assets.graph);
  override_path(s.assets.prototypes, f.assets.prototypes);
  override_path(s.assets.allowlist, f.assets.allowlist);
  if (f.rng_seed) s.generation.mix.rng_seed = *f.rng_seed;
  if (f.iterations) s.generation.iterations = *f.iterations;
  if (f.max_candidates) s.generation.mix.max_candidates = *f.max_candidates;
  if (!f.quotas.empty()) {
    // Quotas not named on the command line drop to zero.
    Quotas q{};
    for (const auto& item : f.quotas) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw ConfigError("--quota expects name=share, got '" + item + "'");
      const auto p = parse_provenance(item.substr(0, eq));
      try {
        q[index_of(p)] = std::stod(item.substr(eq + 1));
      } catch (const std::exception&) {
        throw ConfigError("--quota: bad share in '" + item + "'");
      }
    }
    s.generation.mix.quotas = q;
  }
  s.generation.validate();
  return s;
}

Assets load(const Settings& s) {
  for (const fs::path* p : {&s.assets.embeddings, &s.assets.phonetic, &s.assets.pos, &s.assets.domains,
                            &s.assets.graph, &s.assets.prototypes, &s.assets.allowlist}) {
    if (!p->empty() && !fs::exists(*p)) throw ConfigError("file not found: " + p->string());
  }
  auto assets = load_assets(s.assets, s.filter);
  for (const auto& w : assets.warnings()) std::cerr << "mindmap: warning: " << w << "\n";
  return assets;
}

// Writes via a temporary sibling and rename so a failed run never leaves a
// partial file behind.
void write_atomic(const fs::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) {
      fs::remove(tmp);
      throw Error("write failed: " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
  }
}

fs::path prepare_out_dir(const std::string& dir) {
  fs::path out(dir);
  std::error_code ec;
  fs::create_directories(out, ec);
  if (ec || !fs::is_directory(out)) throw Error("output directory not usable: " + dir);
  return out;
}

std::string fmt_similarity(const std::optional<double>& s) {
  if (!s) return "unknown";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", *s);
  return buf;
}

int cmd_expand(const Flags& f, const std::string& seed) {
  const auto s = resolve(f);
  const auto assets = load(s);
  const auto candidates = expand(seed, s.generation.mix, assets);
  if (f.json) {
    auto arr = nlohmann::json::array();
    for (const auto& c : candidates) {
      arr.push_back({{"word", c.word},
                     {"provenance", std::string(to_string(c.provenance))},
                     {"similarity", c.similarity ? nlohmann::json(*c.similarity) : nlohmann::json(nullptr)},
                     {"detail", c.detail}});
    }
    std::cout << nlohmann::json{{"seed", seed}, {"candidates", arr}}.dump(2) << "\n";
    return 0;
  }
  std::printf("%-12s %-20s %10s  %s\n", "word", "provenance", "similarity", "detail");
  for (const auto& c : candidates) {
    std::printf("%-12s %-20s %10s  %s\n", c.word.c_str(), std::string(to_string(c.provenance)).c_str(),
                fmt_similarity(c.similarity).c_str(), c.detail.c_str());
  }
  return 0;
}

int cmd_generate(const Flags& f, const std::vector<std::string>& seeds) {
  const auto s = resolve(f);
  const auto out = prepare_out_dir(f.out);
  const auto assets = load(s);
  const auto map = generate(seeds, s.generation, assets);
  const auto svg_path = out / (f.name + ".svg");
  const auto trace_path = out / (f.name + ".trace.json");
  write_atomic(svg_path, render_svg(map));
  write_atomic(trace_path, export_trace(map));
  std::cout << svg_path.string() << "\n" << trace_path.string() << "\n";
  std::cerr << "mindmap: " << map.nodes.size() << " nodes, " << map.edge_count() << " edges\n";
  return 0;
}

int cmd_report(const Flags& f, const std::string& seed_file) {
  const auto s = resolve(f);
  const auto seeds = load_word_list(seed_file);
  if (seeds.empty()) throw ConfigError("seed list is empty: " + seed_file);
  const auto out = prepare_out_dir(f.out);
  const auto assets = load(s);
  const auto cmp = compare_configs(seeds, s.generation.mix, assets, s.eval);
  const auto json = comparison_json(cmp);
  const auto json_path = out / (f.name + ".report.json");
  write_atomic(json_path, json);
  if (f.json) {
    std::cout << json;
  } else {
    std::cout << format_reports({cmp.baseline.report, cmp.proposed.report}, s.eval);
    std::cout << "generator/annotator disagreements: baseline " << cmp.baseline.disagreements.size()
              << ", proposed " << cmp.proposed.disagreements.size() << "\n";
    std::cout << json_path.string() << "\n";
  }
  return 0;
}

int cmd_classify(const Flags& f, const std::vector<std::string>& words) {
  const auto s = resolve(f);
  const auto assets = load(s);
  if (assets.prototypes.empty()) throw ConfigError("classify needs --prototypes");
  for (const auto& w : words) {
    const auto cls = assets.prototypes.classify(w, assets.store);
    const auto el = painting_element(cls.domain);
    std::printf("%-12s %-13s %8.4f  %s\n", w.c_str(), std::string(to_string(cls.domain)).c_str(), cls.confidence,
                std::string(el.glyph).c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mind-map generator: imaginative word expansion rendered as SVG"};
  app.require_subcommand(1);
  app.fallthrough();

  Flags f;
  app.add_option("--config", f.config, "INI configuration file (flags override it)");
  app.add_option("--embeddings", f.assets.embeddings, "word-vector text file");
  app.add_option("--phonetic", f.assets.phonetic, "word<TAB>syllables lexicon");
  app.add_option("--pos", f.assets.pos, "word<TAB>part-of-speech lexicon");
  app.add_option("--domains", f.assets.domains, "word<TAB>topical-domain lexicon");
  app.add_option("--graph", f.assets.graph, "artist graph, parent<TAB>child");
  app.add_option("--prototypes", f.assets.prototypes, "painting-domain prototypes, domain<TAB>word");
  app.add_option("--allowlist", f.assets.allowlist, "restrict all candidates to these words");
  app.add_option("--rng-seed", f.rng_seed, "random seed");
  app.add_option("--iterations", f.iterations, "frontier rounds for generate");
  app.add_option("--max-candidates", f.max_candidates, "candidates per seed");
  app.add_option("--quota", f.quotas, "strategy share, e.g. semantic=1 (repeatable; unnamed shares become 0)");
  app.add_option("--out", f.out, "output directory")->capture_default_str();
  app.add_option("--name", f.name, "output file stem")->capture_default_str();
  app.add_flag("--json", f.json, "print JSON instead of a table");

  std::string seed;
  auto* expand_cmd = app.add_subcommand("expand", "expand one seed into candidates");
  expand_cmd->add_option("seed", seed, "seed word")->required();

  std::vector<std::string> seeds;
  auto* generate_cmd = app.add_subcommand("generate", "write <name>.svg and <name>.trace.json");
  generate_cmd->add_option("seeds", seeds, "seed words")->required();

  std::string seed_file;
  auto* report_cmd = app.add_subcommand("report", "baseline vs proposed provenance distribution");
  report_cmd->add_option("seed_file", seed_file, "file with one seed word per line")->required();

  std::vector<std::string> words;
  auto* classify_cmd = app.add_subcommand("classify", "map words to painting domains");
  classify_cmd->add_option("words", words, "words to classify")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*expand_cmd) return cmd_expand(f, seed);
    if (*generate_cmd) return cmd_generate(f, seeds);
    if (*report_cmd) return cmd_report(f, seed_file);
    if (*classify_cmd) return cmd_classify(f, words);
  } catch (const std::exception& e) {
    std::cerr << "mindmap: error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
