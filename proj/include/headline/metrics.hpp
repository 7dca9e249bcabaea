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
#include <vector>

#include "headline/corpus.hpp"
#include "headline/errors.hpp"

namespace headline {

/// Variance-based entries are empty when the truth scores have zero
/// variance. All variances are population variances.
struct RegressionMetrics {
  double mse = 0.0;
  double mae = 0.0;
  double median_ae = 0.0;
  std::optional<double> nmse;
  std::optional<double> explained_variance;
  std::optional<double> r2;
};

struct Confusion {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t tn = 0;
  std::size_t fn = 0;

  std::size_t total() const noexcept { return tp + fp + tn + fn; }
  friend bool operator==(const Confusion&, const Confusion&) = default;
};

struct ClassificationMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double accuracy = 0.0;
  Confusion confusion;
};

struct MetricsReport {
  RegressionMetrics regression;
  ClassificationMetrics classification;
  std::size_t n = 0;
  double threshold = 0.5;

  /// Metric names in snake_case plus `confusion` and `n`; undefined values
  /// are written as null.
  std::string to_json() const;
};

namespace detail {
RegressionMetrics regression_metrics(const Eigen::Ref<const Eigen::VectorXd>& truth,
                                     const Eigen::Ref<const Eigen::VectorXd>& predicted);
}  // namespace detail

/// MSE, MAE, median absolute error (mean of the two middle values for even
/// n), and the variance-normalized trio. r2 = 1 - SS_res / SS_tot and
/// nmse = 1 - r2, so the identity between them is exact.
///
/// Throws ValidationError on a length mismatch or fewer than two values.
template <typename DerivedY, typename DerivedP>
RegressionMetrics regression_metrics(const Eigen::DenseBase<DerivedY>& truth,
                                     const Eigen::DenseBase<DerivedP>& predicted) {
  const Eigen::VectorXd y = truth.derived().template cast<double>();
  const Eigen::VectorXd yhat = predicted.derived().template cast<double>();
  return detail::regression_metrics(y, yhat);
}

/// Clickbait is the positive class; a score >= threshold predicts it.
/// Precision, recall and F1 are 0 where their denominator is 0.
ClassificationMetrics classification_metrics(std::span<const ClickbaitClass> truth,
                                             const Eigen::Ref<const Eigen::VectorXd>& scores,
                                             double threshold = 0.5);

/// Harmonic mean; 0 when both inputs are 0.
double f1_score(double precision, double recall);

double median(std::vector<double> values);

struct ScoredPost {
  std::string id;
  double score = 0.0;
};

/// Reads `{"id": ..., "clickbaitScore": ...}` lines.
std::vector<ScoredPost> parse_predictions(std::string_view jsonl, std::string_view source = "<input>");
std::vector<ScoredPost> load_predictions(const std::filesystem::path& path);

/// Joins predictions to truth labels by id and scores the joined pairs:
/// regression metrics against the truth mean, classification against the
/// stored class. Scores are clamped to [0, 1] first. Throws CorpusError
/// when fewer than two ids are shared.
MetricsReport evaluate(std::span<const ScoredPost> predictions, std::span<const TruthLabel> truths,
                       double threshold = 0.5, Warnings* warnings = nullptr);

MetricsReport evaluate(const std::filesystem::path& predictions, const std::filesystem::path& truths,
                       double threshold = 0.5, Warnings* warnings = nullptr);

}  // namespace headline
