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

#include "headline/text.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <algorithm>

#include "headline/errors.hpp"
#include "headline/io.hpp"

namespace headline {
namespace {

bool is_apostrophe(UChar32 c) { return c == 0x27 || c == 0x2019; }

bool is_word_char(UChar32 c) {
  return u_isalpha(c) || u_isdigit(c) || is_apostrophe(c);
}

std::string nfc(std::string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* normalizer = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) return std::string(text);
  const icu::UnicodeString source =
      icu::UnicodeString::fromUTF8(icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  icu::UnicodeString normalized = normalizer->normalize(source, status);
  if (U_FAILURE(status)) return std::string(text);
  std::string out;
  normalized.toUTF8String(out);
  return out;
}

struct CodePoint {
  UChar32 value;
  std::size_t begin;
  std::size_t end;
};

// Invalid bytes decode to U+FFFD (a symbol) and so are treated as neither
// whitespace nor word characters.
std::vector<CodePoint> decode(std::string_view utf8) {
  std::vector<CodePoint> out;
  out.reserve(utf8.size());
  const auto* s = reinterpret_cast<const uint8_t*>(utf8.data());
  const auto length = static_cast<int32_t>(utf8.size());
  int32_t i = 0;
  while (i < length) {
    const int32_t start = i;
    UChar32 c = 0;
    U8_NEXT(s, i, length, c);
    if (c < 0) c = 0xFFFD;
    out.push_back({c, static_cast<std::size_t>(start), static_cast<std::size_t>(i)});
  }
  return out;
}

}  // namespace

std::string to_lower(std::string_view utf8) {
  std::string out;
  out.reserve(utf8.size());
  for (const CodePoint& cp : decode(utf8)) {
    const UChar32 lower = u_tolower(cp.value);
    char buf[U8_MAX_LENGTH];
    int32_t n = 0;
    U8_APPEND_UNSAFE(reinterpret_cast<uint8_t*>(buf), n, lower);
    out.append(buf, static_cast<std::size_t>(n));
  }
  return out;
}

std::size_t code_point_count(std::string_view utf8) { return decode(utf8).size(); }

std::vector<Token> tokenize(std::string_view text) {
  const std::string normalized = nfc(text);
  const std::vector<CodePoint> cps = decode(normalized);

  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < cps.size()) {
    while (i < cps.size() && u_isUWhiteSpace(cps[i].value)) ++i;
    std::size_t j = i;
    while (j < cps.size() && !u_isUWhiteSpace(cps[j].value)) ++j;

    std::size_t first = i;
    std::size_t last = j;
    while (first < last && !is_word_char(cps[first].value)) ++first;
    while (last > first && !is_word_char(cps[last - 1].value)) --last;
    if (first < last) {
      const std::size_t begin = cps[first].begin;
      const std::size_t end = cps[last - 1].end;
      std::string surface = normalized.substr(begin, end - begin);
      std::string lower = to_lower(surface);
      tokens.push_back({std::move(surface), std::move(lower)});
    }
    i = j;
  }
  return tokens;
}

WordList::WordList(std::vector<std::string> words) {
  for (std::string& word : words) {
    if (to_lower(word) != word) throw ValidationError("word list entry is not lowercase: " + word);
    const bool has_space = std::any_of(word.begin(), word.end(), [](unsigned char c) {
      return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
    });
    if (word.empty() || has_space) throw ValidationError("malformed word list entry: '" + word + "'");
    words_.insert(std::move(word));
  }
  if (words_.empty()) throw ValidationError("word list is empty");
}

WordList WordList::load(const std::filesystem::path& path) {
  const std::string content = read_file(path);
  std::vector<std::string> words;
  for_each_line(content, [&](std::size_t, std::string_view line) {
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') return;
    const auto last = line.find_last_not_of(" \t");
    words.emplace_back(line.substr(first, last - first + 1));
  });
  try {
    return WordList(std::move(words));
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

std::size_t count_stopwords(std::span<const Token> tokens, const StopwordList& stops) {
  return static_cast<std::size_t>(std::count_if(
      tokens.begin(), tokens.end(), [&](const Token& t) { return stops.contains(t.lower); }));
}

}  // namespace headline
