// Copyright 2026 The Mindmap Authors.
// Licensed under the Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "mindmap/lexicon.hpp"

#include <algorithm>

#include "mindmap/errors.hpp"
#include "mindmap/utf8.hpp"
#include "text_io.hpp"

namespace mindmap {

std::string_view to_string(ToneMode mode) noexcept {
  return mode == ToneMode::Sensitive ? "sensitive" : "insensitive";
}

ToneMode parse_tone_mode(std::string_view text) {
  if (text == "sensitive") return ToneMode::Sensitive;
  if (text == "insensitive") return ToneMode::Insensitive;
  throw ConfigError("unknown tone mode '" + std::string(text) + "' (expected sensitive|insensitive)");
}

Syllable Syllable::parse(std::string_view text) {
  Syllable s;
  if (!text.empty() && text.back() >= '0' && text.back() <= '9') {
    s.tone = text.back() - '0';
    if (s.tone > 5) throw FormatError("tone digit out of range in syllable '" + std::string(text) + "'");
    text.remove_suffix(1);
  }
  if (text.empty()) throw FormatError("empty syllable base");
  s.base = std::string(text);
  return s;
}

std::string Syllable::key(ToneMode mode) const {
  return mode == ToneMode::Sensitive ? base + std::to_string(tone) : base;
}

PhoneticLexicon PhoneticLexicon::load(const std::filesystem::path& path) {
  auto in = detail::open_input(path);
  PhoneticLexicon lex;
  std::string line;
  std::size_t line_no = 0;
  while (detail::read_line(in, line)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw FormatError("expected word<TAB>syllables", line_no);
    const auto word = detail::trim(std::string_view(line).substr(0, tab));
    if (word.empty() || !utf8::valid(word)) throw FormatError("bad word field", line_no);
    std::vector<Syllable> syllables;
    for (auto field : detail::split(detail::trim(std::string_view(line).substr(tab + 1)), ' ')) {
      if (field.empty()) continue;
      try {
        syllables.push_back(Syllable::parse(field));
      } catch (const FormatError& e) {
        throw FormatError(e.what(), line_no);
      }
    }
    if (syllables.empty()) throw FormatError("word has no syllables", line_no);
    lex.insert(std::string(word), std::move(syllables));
  }
  lex.build_index();
  return lex;
}

PhoneticLexicon PhoneticLexicon::from_entries(
    const std::vector<std::pair<std::string, std::vector<Syllable>>>& entries) {
  PhoneticLexicon lex;
  for (const auto& [word, syllables] : entries) {
    if (syllables.empty()) throw FormatError("word has no syllables: " + word);
    for (const auto& s : syllables) {
      if (s.base.empty()) throw FormatError("empty syllable base for word: " + word);
    }
    lex.insert(word, syllables);
  }
  lex.build_index();
  return lex;
}

void PhoneticLexicon::insert(std::string word, std::vector<Syllable> syllables) {
  auto [it, fresh] = entries_.try_emplace(std::move(word));
  if (!fresh) warnings_.push_back("duplicate phonetic entry for '" + it->first + "', last line wins");
  it->second = std::move(syllables);
}

void PhoneticLexicon::build_index() {
  by_base_.clear();
  by_toned_.clear();
  for (const auto& [word, syllables] : entries_) {
    for (const auto mode : {ToneMode::Insensitive, ToneMode::Sensitive}) {
      auto& index = mode == ToneMode::Sensitive ? by_toned_ : by_base_;
      for (const auto& key : keys(word, mode)) index[key].push_back(word);
    }
  }
  for (auto* index : {&by_base_, &by_toned_}) {
    for (auto& [key, words] : *index) std::sort(words.begin(), words.end());
  }
}

const std::vector<Syllable>* PhoneticLexicon::syllables(std::string_view word) const {
  auto it = entries_.find(word);
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<std::string> PhoneticLexicon::keys(std::string_view word, ToneMode mode) const {
  std::vector<std::string> out;
  if (const auto* syl = syllables(word)) {
    for (const auto& s : *syl) out.push_back(s.key(mode));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return out;
}

const std::vector<std::string>& PhoneticLexicon::words_with(std::string_view key, ToneMode mode) const {
  static const std::vector<std::string> kNone;
  const auto& index = mode == ToneMode::Sensitive ? by_toned_ : by_base_;
  auto it = index.find(key);
  return it == index.end() ? kNone : it->second;
}

std::vector<std::string> PhoneticLexicon::words() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [word, _] : entries_) out.push_back(word);
  std::sort(out.begin(), out.end());
  return out;
}

TagLexicon TagLexicon::load(const std::filesystem::path& pos_path, const std::filesystem::path& domain_path) {
  TagLexicon lex;
  if (!pos_path.empty()) load_index(pos_path, lex.pos_, lex.warnings_);
  if (!domain_path.empty()) load_index(domain_path, lex.domain_, lex.warnings_);
  return lex;
}

void TagLexicon::load_index(const std::filesystem::path& path, Index& index, std::vector<std::string>& warnings) {
  auto in = detail::open_input(path);
  std::string line;
  std::size_t line_no = 0;
  while (detail::read_line(in, line)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;
    const auto fields = detail::split(line, '\t');
    if (fields.size() != 2) throw FormatError("expected word<TAB>tag in " + path.string(), line_no);
    const auto word = detail::trim(fields[0]);
    const auto tag = detail::trim(fields[1]);
    if (word.empty() || tag.empty()) throw FormatError("empty word or tag in " + path.string(), line_no);
    auto [it, fresh] = index.try_emplace(std::string(word), tag);
    if (!fresh && it->second != tag) {
      warnings.push_back(path.filename().string() + ":" + std::to_string(line_no) + ": conflicting tag for '" +
                         it->first + "' ('" + it->second + "' -> '" + std::string(tag) + "'), last line wins");
      it->second = std::string(tag);
    }
  }
}

void TagLexicon::set_pos(std::string word, std::string tag) {
  if (tag.empty()) throw FormatError("empty POS tag for word: " + word);
  pos_[std::move(word)] = std::move(tag);
}

void TagLexicon::set_domain(std::string word, std::string tag) {
  if (tag.empty()) throw FormatError("empty domain tag for word: " + word);
  domain_[std::move(word)] = std::move(tag);
}

std::string_view TagLexicon::pos(std::string_view word) const {
  auto it = pos_.find(word);
  return it == pos_.end() ? kUntagged : std::string_view(it->second);
}

std::string_view TagLexicon::domain(std::string_view word) const {
  auto it = domain_.find(word);
  return it == domain_.end() ? kUntagged : std::string_view(it->second);
}

}  // namespace mindmap
