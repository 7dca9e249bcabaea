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

#include "headline/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <unordered_map>

#include "headline/io.hpp"
#include "headline/model.hpp"

namespace headline {

namespace detail {

RegressionMetrics regression_metrics(const Eigen::Ref<const Eigen::VectorXd>& truth,
                                     const Eigen::Ref<const Eigen::VectorXd>& predicted) {
  if (truth.size() != predicted.size())
    throw ValidationError("truth has " + std::to_string(truth.size()) + " values but there are " +
                          std::to_string(predicted.size()) + " predictions");
  if (truth.size() < 2) throw ValidationError("regression metrics need at least two values");

  const auto n = static_cast<double>(truth.size());
  const Eigen::ArrayXd residual = truth.array() - predicted.array();
  const Eigen::ArrayXd abs_residual = residual.abs();

  RegressionMetrics m;
  const double ss_res = residual.square().sum();
  m.mse = ss_res / n;
  m.mae = abs_residual.sum() / n;
  m.median_ae = median(std::vector<double>(abs_residual.begin(), abs_residual.end()));

  const double ss_tot = (truth.array() - truth.mean()).square().sum();
  if (ss_tot > 0.0) {
    const double r2 = 1.0 - ss_res / ss_tot;
    m.r2 = r2;
    m.nmse = 1.0 - r2;
    const double residual_var = (residual - residual.mean()).square().sum() / n;
    m.explained_variance = 1.0 - residual_var / (ss_tot / n);
  }
  return m;
}

}  // namespace detail

double median(std::vector<double> values) {
  if (values.empty()) throw ValidationError("median of an empty sequence");
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid), values.end());
  const double upper = values[mid];
  if (values.size() % 2 == 1) return upper;
  const double lower = *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
  return (lower + upper) / 2.0;
}

double f1_score(double precision, double recall) {
  const double sum = precision + recall;
  return sum > 0.0 ? 2.0 * precision * recall / sum : 0.0;
}

ClassificationMetrics classification_metrics(std::span<const ClickbaitClass> truth,
                                             const Eigen::Ref<const Eigen::VectorXd>& scores, double threshold) {
  if (static_cast<Eigen::Index>(truth.size()) != scores.size())
    throw ValidationError("truth has " + std::to_string(truth.size()) + " labels but there are " +
                          std::to_string(scores.size()) + " scores");
  if (truth.empty()) throw ValidationError("classification metrics need at least one value");

  ClassificationMetrics m;
  Confusion& c = m.confusion;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const bool predicted = scores(static_cast<Eigen::Index>(i)) >= threshold;
    const bool actual = truth[i] == ClickbaitClass::clickbait;
    if (predicted && actual) ++c.tp;
    else if (predicted) ++c.fp;
    else if (actual) ++c.fn;
    else ++c.tn;
  }
  const auto ratio = [](std::size_t num, std::size_t den) {
    return den > 0 ? static_cast<double>(num) / static_cast<double>(den) : 0.0;
  };
  m.precision = ratio(c.tp, c.tp + c.fp);
  m.recall = ratio(c.tp, c.tp + c.fn);
  m.f1 = f1_score(m.precision, m.recall);
  m.accuracy = ratio(c.tp + c.tn, c.total());
  return m;
}

std::string MetricsReport::to_json() const {
  using nlohmann::ordered_json;
  const auto optional = [](const std::optional<double>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); };
  ordered_json doc;
  doc["mean_squared_error"] = regression.mse;
  doc["median_absolute_error"] = regression.median_ae;
  doc["f1_score"] = classification.f1;
  doc["precision"] = classification.precision;
  doc["recall"] = classification.recall;
  doc["accuracy"] = classification.accuracy;
  doc["normalised_mean_squared_error"] = optional(regression.nmse);
  doc["mean_absolute_error"] = regression.mae;
  doc["explained_variance"] = optional(regression.explained_variance);
  doc["r2_score"] = optional(regression.r2);
  const Confusion& c = classification.confusion;
  doc["confusion"] = {{"tp", c.tp}, {"fp", c.fp}, {"tn", c.tn}, {"fn", c.fn}};
  doc["n"] = n;
  doc["threshold"] = threshold;
  return doc.dump(2) + "\n";
}

std::vector<ScoredPost> parse_predictions(std::string_view jsonl, std::string_view source) {
  using nlohmann::json;
  std::vector<ScoredPost> out;
  for_each_line(jsonl, [&](std::size_t line_no, std::string_view line) {
    if (is_blank(line)) return;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string(source), line_no, std::string("malformed JSON: ") + e.what());
    }
    if (!obj.is_object()) throw ParseError(std::string(source), line_no, "expected a JSON object");
    const auto id = obj.find("id");
    if (id == obj.end() || !(id->is_string() || id->is_number_integer() || id->is_number_unsigned()))
      throw ParseError(std::string(source), line_no, "missing or invalid 'id'");
    const auto score = obj.find("clickbaitScore");
    if (score == obj.end() || !score->is_number())
      throw ParseError(std::string(source), line_no, "missing or non-numeric 'clickbaitScore'");
    const double value = score->get<double>();
    if (!std::isfinite(value)) throw ParseError(std::string(source), line_no, "non-finite 'clickbaitScore'");
    out.push_back({id->is_string() ? id->get<std::string>() : id->dump(), value});
  });
  return out;
}

std::vector<ScoredPost> load_predictions(const std::filesystem::path& path) {
  return parse_predictions(read_file(path), path.string());
}

MetricsReport evaluate(std::span<const ScoredPost> predictions, std::span<const TruthLabel> truths,
                       double threshold, Warnings* warnings) {
  std::unordered_map<std::string_view, const ScoredPost*> by_id;
  for (const ScoredPost& p : predictions) {
    if (!by_id.emplace(p.id, &p).second) throw CorpusError("duplicate id in predictions: " + p.id);
  }

  std::vector<double> truth_mean;
  std::vector<double> score;
  std::vector<ClickbaitClass> truth_class;
  std::size_t clamped = 0;
  for (const TruthLabel& t : truths) {
    const auto it = by_id.find(t.id);
    if (it == by_id.end()) continue;
    const double raw = it->second->score;
    const double s = clamp_score(raw);
    if (s != raw) ++clamped;
    truth_mean.push_back(t.mean);
    score.push_back(s);
    truth_class.push_back(t.class_label);
  }
  if (truth_mean.size() < 2)
    throw CorpusError("predictions and truth share " + std::to_string(truth_mean.size()) +
                      " id(s); evaluation needs at least two");
  if (warnings) {
    if (clamped > 0) warnings->push_back(std::to_string(clamped) + " score(s) outside [0,1] were clamped");
    if (truth_mean.size() < truths.size())
      warnings->push_back(std::to_string(truths.size() - truth_mean.size()) + " truth label(s) have no prediction");
    if (truth_mean.size() < predictions.size())
      warnings->push_back(std::to_string(predictions.size() - truth_mean.size()) +
                          " prediction(s) have no truth label");
  }

  const Eigen::Map<const Eigen::VectorXd> y(truth_mean.data(), static_cast<Eigen::Index>(truth_mean.size()));
  const Eigen::Map<const Eigen::VectorXd> yhat(score.data(), static_cast<Eigen::Index>(score.size()));
  MetricsReport report;
  report.regression = regression_metrics(y, yhat);
  report.classification = classification_metrics(truth_class, yhat, threshold);
  report.n = truth_mean.size();
  report.threshold = threshold;
  return report;
}

MetricsReport evaluate(const std::filesystem::path& predictions, const std::filesystem::path& truths,
                       double threshold, Warnings* warnings) {
  const std::vector<ScoredPost> scored = load_predictions(predictions);
  const std::vector<TruthLabel> labels = load_truth(truths, warnings);
  return evaluate(scored, labels, threshold, warnings);
}

}  // namespace headline
