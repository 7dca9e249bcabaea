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

#include "headline/features.hpp"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include <algorithm>
#include <cstdio>

#include "headline/errors.hpp"

namespace headline {
namespace {

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool starts_with_decimal_digit(std::string_view utf8) {
  if (utf8.empty()) return false;
  const auto* s = reinterpret_cast<const uint8_t*>(utf8.data());
  int32_t i = 0;
  UChar32 c = 0;
  U8_NEXT(s, i, static_cast<int32_t>(utf8.size()), c);
  return c >= 0 && u_isdigit(c);
}

}  // namespace

FeatureLexicons FeatureLexicons::load(const std::filesystem::path& dir) {
  return {WordList::load(dir / kFileNames[0]), WordList::load(dir / kFileNames[1]),
          WordList::load(dir / kFileNames[2]), WordList::load(dir / kFileNames[3])};
}

// Length thresholds count code points: "-ing" words need at least five,
// "-est" words at least four.
bool is_gerund(std::string_view lower, const FeatureLexicons& lex) {
  return ends_with(lower, "ing") && code_point_count(lower) >= 5 && !lex.gerund_exceptions.contains(lower);
}

bool is_superlative(std::string_view lower, const FeatureLexicons& lex) {
  if (lex.superlative_irregulars.contains(lower)) return true;
  return ends_with(lower, "est") && code_point_count(lower) >= 4 &&
         !lex.superlative_exclusions.contains(lower);
}

HandcraftedFeatures extract_handcrafted(std::span<const Token> tokens, const StopwordList& stops,
                                        const FeatureLexicons& lex) {
  HandcraftedFeatures hc;
  hc.n_words = tokens.size();
  hc.n_stopwords = count_stopwords(tokens, stops);
  if (!tokens.empty()) {
    std::size_t chars = 0;
    for (const Token& t : tokens) chars += code_point_count(t.surface);
    hc.avg_word_len = static_cast<double>(chars) / static_cast<double>(tokens.size());
    hc.starts_with_digit = starts_with_decimal_digit(tokens.front().surface);
  }
  for (const Token& t : tokens) {
    hc.has_question_form = hc.has_question_form || lex.question_words.contains(t.lower);
    hc.has_gerund = hc.has_gerund || is_gerund(t.lower, lex);
    hc.has_superlative = hc.has_superlative || is_superlative(t.lower, lex);
  }
  return hc;
}

HandcraftedFeatures extract_handcrafted(std::string_view text, const StopwordList& stops,
                                        const FeatureLexicons& lex) {
  const std::vector<Token> tokens = tokenize(text);
  return extract_handcrafted(tokens, stops, lex);
}

Eigen::VectorXd assemble(const HandcraftedFeatures& hc, const Eigen::Ref<const Eigen::VectorXd>& embedding,
                         Eigen::Index embedding_dim) {
  if (embedding.size() != embedding_dim)
    throw DimensionError("embedding has " + std::to_string(embedding.size()) + " components, expected " +
                         std::to_string(embedding_dim));
  Eigen::VectorXd values(kHandcraftedCount + embedding_dim);
  values.head<kHandcraftedCount>() << static_cast<double>(hc.n_words), static_cast<double>(hc.n_stopwords),
      hc.avg_word_len, hc.has_question_form ? 1.0 : 0.0, hc.starts_with_digit ? 1.0 : 0.0,
      hc.has_gerund ? 1.0 : 0.0, hc.has_superlative ? 1.0 : 0.0;
  values.tail(embedding_dim) = embedding;
  return values;
}

std::vector<std::string> feature_column_names(Eigen::Index embedding_dim) {
  std::vector<std::string> names(kHandcraftedNames.begin(), kHandcraftedNames.end());
  char buf[32];
  for (Eigen::Index k = 0; k < embedding_dim; ++k) {
    std::snprintf(buf, sizeof buf, "emb_%03ld", static_cast<long>(k));
    names.emplace_back(buf);
  }
  return names;
}

Eigen::VectorXd Featurizer::operator()(std::string_view text) const {
  const std::vector<Token> tokens = tokenize(text);
  return assemble(extract_handcrafted(tokens, stops_, lex_), average_embedding(tokens, table_),
                  table_.dimension());
}

Eigen::MatrixXd Featurizer::matrix(std::span<const std::string_view> texts) const {
  Eigen::MatrixXd rows(static_cast<Eigen::Index>(texts.size()), dimension());
  for (std::size_t i = 0; i < texts.size(); ++i)
    rows.row(static_cast<Eigen::Index>(i)) = (*this)(texts[i]).transpose();
  return rows;
}

FeaturizedData featurize_dataset(const LabeledDataset& dataset, const EmbeddingTable& table,
                                 const StopwordList& stops, const FeatureLexicons& lex) {
  const Featurizer featurize(table, stops, lex);
  FeaturizedData out;
  const auto n = static_cast<Eigen::Index>(dataset.size());
  out.features.resize(n, featurize.dimension());
  out.targets.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const LabeledRecord& record = dataset.records[static_cast<std::size_t>(i)];
    out.features.row(i) = featurize(record.instance.post_text).transpose();
    out.targets(i) = record.truth.mean;
  }
  return out;
}

}  // namespace headline
