// Copyright 2026 The Mindmap Authors.
// Licensed under the Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mindmap/words.hpp"

namespace mindmap {

enum class ToneMode { Insensitive, Sensitive };

std::string_view to_string(ToneMode mode) noexcept;
ToneMode parse_tone_mode(std::string_view text);

struct Syllable {
  std::string base;
  int tone = 0;  // 0 = untoned, 1-5 otherwise

  /// Parses `shu4` / `shu`. Throws FormatError.
  static Syllable parse(std::string_view text);

  /// Matching key: base alone when tone-insensitive, base+tone otherwise.
  std::string key(ToneMode mode) const;
  std::string str() const { return tone == 0 ? base : base + std::to_string(tone); }

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// word → syllables, plus reverse indexes syllable-key → words for both tone
/// modes. Duplicate words: the last line wins and a warning is recorded.
class PhoneticLexicon {
 public:
  PhoneticLexicon() = default;

  static PhoneticLexicon load(const std::filesystem::path& path);
  static PhoneticLexicon from_entries(const std::vector<std::pair<std::string, std::vector<Syllable>>>& entries);

  bool contains(std::string_view word) const { return entries_.find(word) != entries_.end(); }
  std::size_t size() const noexcept { return entries_.size(); }

  /// nullptr when the word is absent.
  const std::vector<Syllable>* syllables(std::string_view word) const;

  /// Sorted, de-duplicated syllable keys of `word`; empty when absent.
  std::vector<std::string> keys(std::string_view word, ToneMode mode) const;

  /// Words containing the syllable key, in code-point order.
  const std::vector<std::string>& words_with(std::string_view key, ToneMode mode) const;

  /// Every lexicon word in code-point order.
  std::vector<std::string> words() const;

  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

 private:
  void insert(std::string word, std::vector<Syllable> syllables);
  void build_index();

  std::unordered_map<std::string, std::vector<Syllable>, StringHash, std::equal_to<>> entries_;
  std::map<std::string, std::vector<std::string>, std::less<>> by_base_;
  std::map<std::string, std::vector<std::string>, std::less<>> by_toned_;
  std::vector<std::string> warnings_;
};

inline constexpr std::string_view kUntagged = "untagged";

/// Part-of-speech and topical-domain tags. Lookups of unknown words return
/// kUntagged rather than failing.
class TagLexicon {
 public:
  TagLexicon() = default;

  /// Either path may be empty, in which case that index stays empty.
  static TagLexicon load(const std::filesystem::path& pos_path, const std::filesystem::path& domain_path);

  void set_pos(std::string word, std::string tag);
  void set_domain(std::string word, std::string tag);

  std::string_view pos(std::string_view word) const;
  std::string_view domain(std::string_view word) const;
  bool has_pos(std::string_view word) const { return pos_.find(word) != pos_.end(); }
  bool has_domain(std::string_view word) const { return domain_.find(word) != domain_.end(); }

  std::size_t pos_size() const noexcept { return pos_.size(); }
  std::size_t domain_size() const noexcept { return domain_.size(); }

  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

 private:
  using Index = std::unordered_map<std::string, std::string, StringHash, std::equal_to<>>;
  static void load_index(const std::filesystem::path& path, Index& index, std::vector<std::string>& warnings);

  Index pos_;
  Index domain_;
  std::vector<std::string> warnings_;
};

}  // namespace mindmap
