// Copyright 2026 The Mindmap Authors.
// Licensed under the Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <stdexcept>
#include <string>

namespace mindmap {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file. Carries the 1-based line number when one applies.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class DuplicateError : public Error {
 public:
  explicit DuplicateError(const std::string& word)
      : Error("duplicate word: " + word), word_(word) {}
  const std::string& word() const noexcept { return word_; }

 private:
  std::string word_;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class DegenerateVectorError : public Error {
 public:
  using Error::Error;
};

class OutOfVocabularyError : public Error {
 public:
  explicit OutOfVocabularyError(const std::string& word)
      : Error("word not in embedding store: " + word), word_(word) {}
  const std::string& word() const noexcept { return word_; }

 private:
  std::string word_;
};

class OutOfLexiconError : public Error {
 public:
  explicit OutOfLexiconError(const std::string& word)
      : Error("word not in phonetic lexicon: " + word), word_(word) {}
  const std::string& word() const noexcept { return word_; }

 private:
  std::string word_;
};

/// Knowledge graph violates the forest property (cycle or second parent).
class StructureError : public Error {
 public:
  StructureError(const std::string& what, const std::string& vertex)
      : Error(what + ": " + vertex), vertex_(vertex) {}
  const std::string& vertex() const noexcept { return vertex_; }

 private:
  std::string vertex_;
};

class MissingTagError : public Error {
 public:
  MissingTagError(const std::string& kind, const std::string& word)
      : Error("no " + kind + " tag for word: " + word) {}
};

class InvalidSeedError : public Error {
 public:
  InvalidSeedError(const std::string& word, const std::string& reason)
      : Error("invalid seed '" + word + "': " + reason), word_(word) {}
  const std::string& word() const noexcept { return word_; }

 private:
  std::string word_;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace mindmap
