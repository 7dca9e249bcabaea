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
#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "headline/errors.hpp"

namespace headline {

struct ModelMetadata {
  std::string embedding_file;
  std::map<std::string, std::string> lexicon_checksums;  // file name -> FNV-1a
  std::size_t training_records = 0;
  std::optional<std::uint64_t> seed;

  friend bool operator==(const ModelMetadata&, const ModelMetadata&) = default;
};

struct LinearModel {
  Eigen::VectorXd weights;
  double intercept = 0.0;
  ModelMetadata metadata;

  Eigen::Index feature_dimension() const noexcept { return weights.size(); }
};

struct Prediction {
  std::string id;
  double raw_score = 0.0;
  double clamped_score = 0.0;
};

inline double clamp_score(double raw) noexcept { return std::min(1.0, std::max(0.0, raw)); }

namespace detail {
LinearModel fit_least_squares(const Eigen::Ref<const Eigen::MatrixXd>& features,
                              const Eigen::Ref<const Eigen::VectorXd>& targets);
}  // namespace detail

/// Unregularized least squares with an intercept.
///
/// Solves min ||y - Xw - b||^2 through a thin SVD of the augmented matrix
/// [X | 1]. Singular values below max(n, d+1) * eps * sigma_max are
/// treated as zero, so rank-deficient problems get the minimum-norm
/// solution over (w, b). Any real scalar type is accepted; the solve runs
/// in double precision.
///
/// Throws SolverError when n == 0 or an input is not finite.
template <typename DerivedX, typename DerivedY>
LinearModel fit(const Eigen::MatrixBase<DerivedX>& features, const Eigen::MatrixBase<DerivedY>& targets) {
  static_assert(DerivedY::ColsAtCompileTime == 1 || DerivedY::ColsAtCompileTime == Eigen::Dynamic,
                "targets must be a column vector");
  const Eigen::MatrixXd x = features.template cast<double>();
  const Eigen::VectorXd y = targets.template cast<double>();
  return detail::fit_least_squares(x, y);
}

/// raw = w.x + b, clamped to [0, 1]. Throws DimensionError on a length
/// mismatch.
Prediction predict(const LinearModel& model, const Eigen::Ref<const Eigen::VectorXd>& x, std::string id = {});

/// Unclamped scores for every row of `features`.
Eigen::VectorXd predict_raw(const LinearModel& model, const Eigen::Ref<const Eigen::MatrixXd>& features);

/// Format version written by `to_json` and accepted by `model_from_json`.
inline constexpr int kModelFormatVersion = 1;

/// JSON with every parameter written to 17 significant digits, so parsing
/// it back gives bit-identical doubles.
std::string to_json(const LinearModel& model);

/// Throws MalformedModelError, ModelVersionError or ModelDimensionError.
LinearModel model_from_json(std::string_view text);

void save_model(const LinearModel& model, const std::filesystem::path& path);
LinearModel load_model(const std::filesystem::path& path);

}  // namespace headline
