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

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "headline/errors.hpp"

namespace headline {

enum class ClickbaitClass { clickbait, no_clickbait };

std::string_view to_string(ClickbaitClass c) noexcept;

/// One tweet post. `raw` is the source JSON line, kept so that subsets of a
/// corpus can be written back out unchanged.
struct Instance {
  std::string id;
  std::string post_text;
  std::string raw;
};

struct TruthLabel {
  std::string id;
  std::vector<double> judgments;
  double mean = 0.0;
  ClickbaitClass class_label = ClickbaitClass::no_clickbait;
  std::string raw;
};

struct LabeledRecord {
  Instance instance;
  TruthLabel truth;
};

struct ClassCounts {
  std::size_t clickbait = 0;
  std::size_t no_clickbait = 0;

  std::size_t total() const noexcept { return clickbait + no_clickbait; }
  friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

struct LabeledDataset {
  std::vector<LabeledRecord> records;
  std::vector<std::string> provenance;

  std::size_t size() const noexcept { return records.size(); }
  bool empty() const noexcept { return records.empty(); }
  ClassCounts class_counts() const noexcept;
};

struct JoinReport {
  std::size_t matched = 0;
  std::size_t instances_without_truth = 0;
  std::size_t truths_without_instance = 0;
};

struct Split {
  LabeledDataset train;
  LabeledDataset validation;
};

/// Parses Clickbait Challenge instances (JSONL). `source` names the input in
/// error messages.
std::vector<Instance> parse_instances(std::string_view jsonl, std::string_view source = "<input>");
std::vector<Instance> load_instances(const std::filesystem::path& path);

/// Parses truth labels. A stored mean that disagrees with the judgments, or
/// a stored class that disagrees with the mean, is reported in `warnings`.
std::vector<TruthLabel> parse_truth(std::string_view jsonl, std::string_view source = "<input>",
                                    Warnings* warnings = nullptr);
std::vector<TruthLabel> load_truth(const std::filesystem::path& path, Warnings* warnings = nullptr);

/// Pairs instances with labels by id, in instance order. Ids present on only
/// one side are dropped and counted in `report`. Throws CorpusError on a
/// duplicate id within either input.
LabeledDataset join(std::span<const Instance> instances, std::span<const TruthLabel> truths,
                    JoinReport* report = nullptr, Warnings* warnings = nullptr);

/// Concatenates `a` and `b`, keeps every record of the minority class plus a
/// uniform sample (without replacement) of equally many majority records,
/// shuffles, and puts round-half-up(train_fraction * size) records in the
/// train half. All randomness comes from `seed`.
Split merge_balance_split(const LabeledDataset& a, const LabeledDataset& b, double train_fraction,
                          std::uint64_t seed);

/// Number of train records for a pool of `n`.
std::size_t train_size(std::size_t n, double train_fraction);

}  // namespace headline
