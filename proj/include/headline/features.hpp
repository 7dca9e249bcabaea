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

#include <Eigen/Core>
#include <array>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "headline/corpus.hpp"
#include "headline/embeddings.hpp"
#include "headline/text.hpp"

namespace headline {

inline constexpr Eigen::Index kHandcraftedCount = 7;
inline constexpr Eigen::Index kDefaultEmbeddingDim = 300;

/// Column names of the hand-crafted block, in feature-vector order.
inline constexpr std::array<std::string_view, kHandcraftedCount> kHandcraftedNames = {
    "n_words", "n_stopwords", "avg_word_len", "has_question_form",
    "starts_with_digit", "has_gerund", "has_superlative"};

struct HandcraftedFeatures {
  std::size_t n_words = 0;
  std::size_t n_stopwords = 0;
  double avg_word_len = 0.0;  // code points per token
  bool has_question_form = false;
  bool starts_with_digit = false;
  bool has_gerund = false;
  bool has_superlative = false;

  friend bool operator==(const HandcraftedFeatures&, const HandcraftedFeatures&) = default;
};

struct FeatureLexicons {
  WordList question_words;
  WordList gerund_exceptions;
  WordList superlative_irregulars;
  WordList superlative_exclusions;

  /// Reads question_words.txt, gerund_exceptions.txt,
  /// superlative_irregulars.txt and superlative_exclusions.txt from `dir`.
  static FeatureLexicons load(const std::filesystem::path& dir);

  static constexpr std::array<std::string_view, 4> kFileNames = {
      "question_words.txt", "gerund_exceptions.txt", "superlative_irregulars.txt",
      "superlative_exclusions.txt"};
};

bool is_gerund(std::string_view lower, const FeatureLexicons& lex);
bool is_superlative(std::string_view lower, const FeatureLexicons& lex);

HandcraftedFeatures extract_handcrafted(std::span<const Token> tokens, const StopwordList& stops,
                                        const FeatureLexicons& lex);
HandcraftedFeatures extract_handcrafted(std::string_view text, const StopwordList& stops,
                                        const FeatureLexicons& lex);

/// [hand-crafted block | embedding]. Throws DimensionError unless
/// `embedding.size() == embedding_dim`.
Eigen::VectorXd assemble(const HandcraftedFeatures& hc, const Eigen::Ref<const Eigen::VectorXd>& embedding,
                         Eigen::Index embedding_dim = kDefaultEmbeddingDim);

/// n_words..has_superlative, then emb_000 .. emb_{dim-1}.
std::vector<std::string> feature_column_names(Eigen::Index embedding_dim);

/// Maps a headline to its feature vector. Holds references; the table and
/// word lists must outlive it.
class Featurizer {
 public:
  Featurizer(const EmbeddingTable& table, const StopwordList& stops, const FeatureLexicons& lex)
      : table_(table), stops_(stops), lex_(lex) {}

  Eigen::Index dimension() const noexcept { return kHandcraftedCount + table_.dimension(); }

  Eigen::VectorXd operator()(std::string_view text) const;

  /// One row per text, in input order.
  Eigen::MatrixXd matrix(std::span<const std::string_view> texts) const;

 private:
  const EmbeddingTable& table_;
  const StopwordList& stops_;
  const FeatureLexicons& lex_;
};

struct FeaturizedData {
  Eigen::MatrixXd features;  // n x (7 + dim)
  Eigen::VectorXd targets;   // truth means
};

FeaturizedData featurize_dataset(const LabeledDataset& dataset, const EmbeddingTable& table,
                                 const StopwordList& stops, const FeatureLexicons& lex);

}  // namespace headline
