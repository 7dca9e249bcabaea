/*
 * Copyright 2026 The headline-scorer Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <filesystem>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace headline {

struct Token {
  std::string surface;  // NFC, original case
  std::string lower;    // simple lowercase of surface

  friend bool operator==(const Token&, const Token&) = default;
};

/// Splits a headline into word tokens.
///
/// The text is NFC-normalized and split on Unicode whitespace. Each fragment
/// loses any leading and trailing characters that are not letters, decimal
/// digits or apostrophes ('\'' and U+2019); fragments left empty are dropped.
/// Apostrophes and hyphens inside a fragment are kept, so "Here's" and
/// "well-known" are single tokens.
std::vector<Token> tokenize(std::string_view text);

/// Per-code-point simple lowercase mapping.
std::string to_lower(std::string_view utf8);

/// Number of Unicode code points in a UTF-8 string.
std::size_t code_point_count(std::string_view utf8);

/// An immutable set of lowercase words read from a one-word-per-line file.
class WordList {
 public:
  WordList() = default;

  /// Throws ValidationError on uppercase or whitespace inside an entry, or
  /// when no entries remain.
  explicit WordList(std::vector<std::string> words);

  /// Blank lines and lines starting with '#' are ignored.
  static WordList load(const std::filesystem::path& path);

  bool contains(std::string_view word) const { return words_.find(word) != words_.end(); }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }

  auto begin() const { return words_.begin(); }
  auto end() const { return words_.end(); }

 private:
  std::set<std::string, std::less<>> words_;
};

using StopwordList = WordList;

std::size_t count_stopwords(std::span<const Token> tokens, const StopwordList& stops);

}  // namespace headline
