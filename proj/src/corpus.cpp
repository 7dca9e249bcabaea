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

#include "headline/corpus.hpp"

#include <cmath>
#include <json.hpp>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "headline/io.hpp"
#include "headline/rng.hpp"

namespace headline {
namespace {

using nlohmann::json;

constexpr double kMeanTolerance = 1e-6;

json parse_line(std::string_view line, std::string_view source, std::size_t line_no) {
  try {
    json value = json::parse(line);
    if (!value.is_object()) throw ParseError(std::string(source), line_no, "expected a JSON object");
    return value;
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(source), line_no, std::string("malformed JSON: ") + e.what());
  }
}

std::string read_id(const json& obj, std::string_view source, std::size_t line_no) {
  const auto it = obj.find("id");
  if (it == obj.end()) throw ParseError(std::string(source), line_no, "missing 'id'");
  std::string id;
  if (it->is_string()) {
    id = it->get<std::string>();
  } else if (it->is_number_integer() || it->is_number_unsigned()) {
    id = it->dump();
  } else {
    throw ParseError(std::string(source), line_no, "'id' must be a string or an integer");
  }
  if (id.empty()) throw ParseError(std::string(source), line_no, "empty 'id'");
  return id;
}

std::string read_post_text(const json& obj, std::string_view source, std::size_t line_no) {
  const auto it = obj.find("postText");
  if (it == obj.end()) throw ParseError(std::string(source), line_no, "missing 'postText'");
  if (it->is_string()) return it->get<std::string>();
  if (!it->is_array()) throw ParseError(std::string(source), line_no, "'postText' must be a string or array");
  std::string joined;
  for (std::size_t i = 0; i < it->size(); ++i) {
    const json& part = (*it)[i];
    if (!part.is_string()) throw ParseError(std::string(source), line_no, "'postText' array holds a non-string");
    if (i > 0) joined += ' ';
    joined += part.get_ref<const std::string&>();
  }
  return joined;
}

double read_unit_number(const json& value, std::string_view field, std::string_view source,
                        std::size_t line_no) {
  if (!value.is_number()) throw ParseError(std::string(source), line_no, std::string(field) + " must be a number");
  const double x = value.get<double>();
  if (!std::isfinite(x) || x < 0.0 || x > 1.0)
    throw ValidationError(std::string(source) + ":" + std::to_string(line_no) + ": " + std::string(field) +
                          " outside [0,1]: " + value.dump());
  return x;
}

}  // namespace

std::string_view to_string(ClickbaitClass c) noexcept {
  return c == ClickbaitClass::clickbait ? "clickbait" : "no-clickbait";
}

ClassCounts LabeledDataset::class_counts() const noexcept {
  ClassCounts counts;
  for (const LabeledRecord& r : records) {
    if (r.truth.class_label == ClickbaitClass::clickbait)
      ++counts.clickbait;
    else
      ++counts.no_clickbait;
  }
  return counts;
}

std::vector<Instance> parse_instances(std::string_view jsonl, std::string_view source) {
  std::vector<Instance> out;
  for_each_line(jsonl, [&](std::size_t line_no, std::string_view line) {
    if (is_blank(line)) return;
    const json obj = parse_line(line, source, line_no);
    out.push_back({read_id(obj, source, line_no), read_post_text(obj, source, line_no), std::string(line)});
  });
  return out;
}

std::vector<Instance> load_instances(const std::filesystem::path& path) {
  return parse_instances(read_file(path), path.string());
}

std::vector<TruthLabel> parse_truth(std::string_view jsonl, std::string_view source, Warnings* warnings) {
  std::vector<TruthLabel> out;
  for_each_line(jsonl, [&](std::size_t line_no, std::string_view line) {
    if (is_blank(line)) return;
    const json obj = parse_line(line, source, line_no);
    TruthLabel label;
    label.id = read_id(obj, source, line_no);
    label.raw = std::string(line);

    if (const auto it = obj.find("truthJudgments"); it != obj.end()) {
      if (!it->is_array()) throw ParseError(std::string(source), line_no, "'truthJudgments' must be an array");
      for (const json& j : *it) label.judgments.push_back(read_unit_number(j, "truthJudgments", source, line_no));
    }

    const auto mean_it = obj.find("truthMean");
    if (mean_it == obj.end()) throw ParseError(std::string(source), line_no, "missing 'truthMean'");
    label.mean = read_unit_number(*mean_it, "truthMean", source, line_no);

    const std::string where = std::string(source) + ":" + std::to_string(line_no) + ": id " + label.id + ": ";
    if (!label.judgments.empty()) {
      const double average = std::accumulate(label.judgments.begin(), label.judgments.end(), 0.0) /
                             static_cast<double>(label.judgments.size());
      if (std::abs(average - label.mean) > kMeanTolerance && warnings)
        warnings->push_back(where + "truthMean " + format_double(label.mean) +
                            " differs from the average of truthJudgments " + format_double(average));
    }

    const ClickbaitClass by_mean = label.mean > 0.5 ? ClickbaitClass::clickbait : ClickbaitClass::no_clickbait;
    label.class_label = by_mean;
    if (const auto it = obj.find("truthClass"); it != obj.end()) {
      if (!it->is_string()) throw ParseError(std::string(source), line_no, "'truthClass' must be a string");
      const std::string& name = it->get_ref<const std::string&>();
      if (name == "clickbait")
        label.class_label = ClickbaitClass::clickbait;
      else if (name == "no-clickbait")
        label.class_label = ClickbaitClass::no_clickbait;
      else
        throw ParseError(std::string(source), line_no, "unknown truthClass '" + name + "'");
      if (label.class_label != by_mean && warnings)
        warnings->push_back(where + "truthClass '" + name + "' disagrees with truthMean " +
                            format_double(label.mean));
    }
    out.push_back(std::move(label));
  });
  return out;
}

std::vector<TruthLabel> load_truth(const std::filesystem::path& path, Warnings* warnings) {
  return parse_truth(read_file(path), path.string(), warnings);
}

LabeledDataset join(std::span<const Instance> instances, std::span<const TruthLabel> truths,
                    JoinReport* report, Warnings* warnings) {
  std::unordered_map<std::string_view, const TruthLabel*> by_id;
  by_id.reserve(truths.size());
  for (const TruthLabel& t : truths) {
    if (!by_id.emplace(t.id, &t).second) throw CorpusError("duplicate id in truth labels: " + t.id);
  }

  LabeledDataset dataset;
  std::unordered_set<std::string_view> seen;
  seen.reserve(instances.size());
  std::size_t missing_truth = 0;
  for (const Instance& inst : instances) {
    if (!seen.insert(inst.id).second) throw CorpusError("duplicate id in instances: " + inst.id);
    const auto it = by_id.find(inst.id);
    if (it == by_id.end()) {
      ++missing_truth;
      continue;
    }
    dataset.records.push_back({inst, *it->second});
  }

  const std::size_t missing_instance = truths.size() - dataset.records.size();
  if (warnings && missing_truth > 0)
    warnings->push_back(std::to_string(missing_truth) + " instance(s) have no truth label and were dropped");
  if (warnings && missing_instance > 0)
    warnings->push_back(std::to_string(missing_instance) + " truth label(s) have no instance and were dropped");
  if (report) *report = {dataset.records.size(), missing_truth, missing_instance};
  return dataset;
}

std::size_t train_size(std::size_t n, double train_fraction) {
  return static_cast<std::size_t>(std::floor(train_fraction * static_cast<double>(n) + 0.5));
}

Split merge_balance_split(const LabeledDataset& a, const LabeledDataset& b, double train_fraction,
                          std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0))
    throw ValidationError("train fraction must lie strictly between 0 and 1");

  std::vector<const LabeledRecord*> clickbait;
  std::vector<const LabeledRecord*> no_clickbait;
  for (const LabeledDataset* ds : {&a, &b}) {
    for (const LabeledRecord& r : ds->records)
      (r.truth.class_label == ClickbaitClass::clickbait ? clickbait : no_clickbait).push_back(&r);
  }
  if (clickbait.empty() || no_clickbait.empty())
    throw CorpusError("cannot balance: one class is empty after merging");

  // Ties go to no-clickbait as the majority; with equal sizes the sample is
  // simply a permutation of the whole class.
  auto& minority = clickbait.size() <= no_clickbait.size() ? clickbait : no_clickbait;
  auto& majority = clickbait.size() <= no_clickbait.size() ? no_clickbait : clickbait;
  const std::size_t m = minority.size();

  Xorshift64Star rng(seed);
  sample_prefix(std::span(majority), m, rng);

  std::vector<const LabeledRecord*> pool;
  pool.reserve(2 * m);
  pool.insert(pool.end(), minority.begin(), minority.end());
  pool.insert(pool.end(), majority.begin(), majority.begin() + static_cast<std::ptrdiff_t>(m));
  shuffle(std::span(pool), rng);

  const std::size_t n_train = train_size(pool.size(), train_fraction);
  Split split;
  std::vector<std::string> provenance = a.provenance;
  provenance.insert(provenance.end(), b.provenance.begin(), b.provenance.end());
  split.train.provenance = provenance;
  split.validation.provenance = provenance;
  split.train.records.reserve(n_train);
  split.validation.records.reserve(pool.size() - n_train);
  for (std::size_t i = 0; i < pool.size(); ++i)
    (i < n_train ? split.train : split.validation).records.push_back(*pool[i]);
  return split;
}

}  // namespace headline
