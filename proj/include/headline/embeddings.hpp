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
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "headline/errors.hpp"
#include "headline/text.hpp"

namespace headline {

/// Word vectors keyed by lowercase token. Components are stored in single
/// precision, one row per word.
class EmbeddingTable {
 public:
  using Storage = Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  using ConstRow = Eigen::Map<const Eigen::VectorXf>;

  EmbeddingTable() = default;

  /// Builds a table from in-memory entries (keys are lowercased). Throws
  /// FormatError on a vector of the wrong length or a non-finite component.
  static EmbeddingTable from_entries(Eigen::Index dimension,
                                     const std::vector<std::pair<std::string, std::vector<float>>>& entries,
                                     Warnings* warnings = nullptr);

  Eigen::Index dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return index_.size(); }

  /// `lower` must already be lowercase.
  std::optional<ConstRow> find(std::string_view lower) const;

 private:
  friend class EmbeddingTableBuilder;

  Eigen::Index dimension_ = 0;
  std::vector<float> data_;
  std::unordered_map<std::string, Eigen::Index> index_;
};

/// Reads a GloVe text file: `<token> <f1> ... <fD>` per line, no header.
/// The dimension comes from the first line and must equal `expected_dim`
/// when given. A token seen twice keeps its first vector.
EmbeddingTable load_embeddings(const std::filesystem::path& path,
                               std::optional<Eigen::Index> expected_dim = std::nullopt,
                               Warnings* warnings = nullptr);

EmbeddingTable parse_embeddings(std::string_view text, std::string_view source = "<input>",
                                std::optional<Eigen::Index> expected_dim = std::nullopt,
                                Warnings* warnings = nullptr);

/// Mean of the vectors of the in-vocabulary tokens, accumulated in double
/// precision in token order. Unknown tokens are skipped; with no known
/// token the result is the zero vector.
Eigen::VectorXd average_embedding(std::span<const Token> tokens, const EmbeddingTable& table);

}  // namespace headline
