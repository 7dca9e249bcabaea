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

#include "headline/embeddings.hpp"

#include <charconv>
#include <cmath>

#include "headline/io.hpp"

namespace headline {

// Accumulates rows while keeping the invariants of EmbeddingTable.
class EmbeddingTableBuilder {
 public:
  EmbeddingTableBuilder(Eigen::Index dimension, std::size_t expected_rows, Warnings* warnings)
      : warnings_(warnings) {
    table_.dimension_ = dimension;
    table_.data_.reserve(expected_rows * static_cast<std::size_t>(dimension));
    table_.index_.reserve(expected_rows);
  }

  // Returns the slot for a new row, or nullptr when the key is a duplicate.
  float* add(std::string key, std::string_view where) {
    const auto row = static_cast<Eigen::Index>(table_.index_.size());
    if (!table_.index_.emplace(std::move(key), row).second) {
      ++duplicates_;
      if (warnings_ && duplicates_ <= kMaxDuplicateWarnings)
        warnings_->push_back(std::string(where) + ": duplicate token, keeping the first vector");
      return nullptr;
    }
    table_.data_.resize(table_.data_.size() + static_cast<std::size_t>(table_.dimension_));
    return table_.data_.data() + row * table_.dimension_;
  }

  EmbeddingTable finish() && {
    if (warnings_ && duplicates_ > kMaxDuplicateWarnings)
      warnings_->push_back(std::to_string(duplicates_) + " duplicate tokens in total");
    table_.data_.shrink_to_fit();
    return std::move(table_);
  }

 private:
  static constexpr std::size_t kMaxDuplicateWarnings = 20;

  EmbeddingTable table_;
  Warnings* warnings_;
  std::size_t duplicates_ = 0;
};

namespace {

// The token is everything before the first space; components follow, each
// separated by single or repeated spaces/tabs.
struct SplitLine {
  std::string_view token;
  std::vector<std::string_view> fields;
};

void split_line(std::string_view line, SplitLine& out) {
  out.fields.clear();
  const auto first_space = line.find(' ');
  out.token = line.substr(0, first_space);
  if (first_space == std::string_view::npos) return;
  std::size_t pos = first_space;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    out.fields.push_back(line.substr(pos, end - pos));
    pos = end;
  }
}

FormatError format_error(std::string_view source, std::size_t line_no, const std::string& what) {
  return FormatError(std::string(source) + ":" + std::to_string(line_no) + ": " + what);
}

}  // namespace

std::optional<EmbeddingTable::ConstRow> EmbeddingTable::find(std::string_view lower) const {
  const auto it = index_.find(std::string(lower));
  if (it == index_.end()) return std::nullopt;
  return ConstRow(data_.data() + it->second * dimension_, dimension_);
}

EmbeddingTable EmbeddingTable::from_entries(Eigen::Index dimension,
                                            const std::vector<std::pair<std::string, std::vector<float>>>& entries,
                                            Warnings* warnings) {
  if (dimension <= 0) throw FormatError("embedding dimension must be positive");
  EmbeddingTableBuilder builder(dimension, entries.size(), warnings);
  for (const auto& [word, vec] : entries) {
    if (static_cast<Eigen::Index>(vec.size()) != dimension)
      throw FormatError("embedding for '" + word + "' has " + std::to_string(vec.size()) +
                        " components, expected " + std::to_string(dimension));
    for (float x : vec)
      if (!std::isfinite(x)) throw FormatError("embedding for '" + word + "' has a non-finite component");
    if (float* slot = builder.add(to_lower(word), word)) std::copy(vec.begin(), vec.end(), slot);
  }
  return std::move(builder).finish();
}

EmbeddingTable parse_embeddings(std::string_view text, std::string_view source,
                                std::optional<Eigen::Index> expected_dim, Warnings* warnings) {
  std::optional<EmbeddingTableBuilder> builder;
  Eigen::Index dimension = 0;
  SplitLine parts;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (is_blank(line)) return;
    split_line(line, parts);
    const auto count = static_cast<Eigen::Index>(parts.fields.size());
    if (!builder) {
      if (count == 0) throw format_error(source, line_no, "no vector components");
      if (expected_dim && *expected_dim != count)
        throw FormatError(std::string(source) + ": embedding dimension " + std::to_string(count) +
                          " does not match the expected " + std::to_string(*expected_dim));
      dimension = count;
      const std::size_t estimate = text.size() / (line.size() + 1) + 1;
      builder.emplace(dimension, estimate + estimate / 8, warnings);
    }
    if (count != dimension)
      throw format_error(source, line_no,
                         "expected " + std::to_string(dimension) + " components, found " + std::to_string(count));

    float* slot = builder->add(to_lower(parts.token), std::string(source) + ":" + std::to_string(line_no));
    float ignored = 0.0f;
    for (Eigen::Index k = 0; k < dimension; ++k) {
      const std::string_view field = parts.fields[static_cast<std::size_t>(k)];
      float& value = slot ? slot[k] : ignored;
      const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (ec != std::errc() || ptr != field.data() + field.size() || !std::isfinite(value))
        throw format_error(source, line_no,
                           "component " + std::to_string(k + 1) + " is not a finite number: '" +
                               std::string(field) + "'");
    }
  });
  if (!builder) throw FormatError(std::string(source) + ": empty embedding file");
  return std::move(*builder).finish();
}

EmbeddingTable load_embeddings(const std::filesystem::path& path, std::optional<Eigen::Index> expected_dim,
                               Warnings* warnings) {
  return parse_embeddings(read_file(path), path.string(), expected_dim, warnings);
}

Eigen::VectorXd average_embedding(std::span<const Token> tokens, const EmbeddingTable& table) {
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(table.dimension());
  std::size_t found = 0;
  for (const Token& token : tokens) {
    if (const auto row = table.find(token.lower)) {
      sum += row->cast<double>();
      ++found;
    }
  }
  if (found > 0) sum /= static_cast<double>(found);
  return sum;
}

}  // namespace headline
