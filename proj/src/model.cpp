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

#include "headline/model.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <json.hpp>
#include <limits>

#include "headline/io.hpp"

namespace headline {
namespace detail {

LinearModel fit_least_squares(const Eigen::Ref<const Eigen::MatrixXd>& features,
                              const Eigen::Ref<const Eigen::VectorXd>& targets) {
  const Eigen::Index n = features.rows();
  const Eigen::Index d = features.cols();
  if (n == 0) throw SolverError("cannot fit a model on zero records");
  if (targets.size() != n)
    throw SolverError("feature matrix has " + std::to_string(n) + " rows but there are " +
                      std::to_string(targets.size()) + " targets");
  if (!features.allFinite() || !targets.allFinite()) throw SolverError("training data holds a non-finite value");

  Eigen::MatrixXd augmented(n, d + 1);
  augmented.leftCols(d) = features;
  augmented.col(d).setOnes();

  Eigen::BDCSVD<Eigen::MatrixXd> svd(augmented, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(static_cast<double>(std::max(n, d + 1)) * std::numeric_limits<double>::epsilon());
  const Eigen::VectorXd theta = svd.solve(targets);
  if (!theta.allFinite()) throw SolverError("least-squares solve produced non-finite parameters");

  LinearModel model;
  model.weights = theta.head(d);
  model.intercept = theta(d);
  model.metadata.training_records = static_cast<std::size_t>(n);
  return model;
}

}  // namespace detail

Prediction predict(const LinearModel& model, const Eigen::Ref<const Eigen::VectorXd>& x, std::string id) {
  if (x.size() != model.feature_dimension())
    throw DimensionError("feature vector has " + std::to_string(x.size()) + " components, model expects " +
                         std::to_string(model.feature_dimension()));
  const double raw = model.weights.dot(x) + model.intercept;
  return {std::move(id), raw, clamp_score(raw)};
}

Eigen::VectorXd predict_raw(const LinearModel& model, const Eigen::Ref<const Eigen::MatrixXd>& features) {
  if (features.cols() != model.feature_dimension())
    throw DimensionError("feature matrix has " + std::to_string(features.cols()) + " columns, model expects " +
                         std::to_string(model.feature_dimension()));
  return (features * model.weights).array() + model.intercept;
}

std::string to_json(const LinearModel& model) {
  using nlohmann::json;
  const ModelMetadata& meta = model.metadata;
  std::string out = "{\n";
  out += "  \"format_version\": " + std::to_string(kModelFormatVersion) + ",\n";
  out += "  \"feature_dimension\": " + std::to_string(model.feature_dimension()) + ",\n";
  out += "  \"intercept\": " + format_double(model.intercept) + ",\n";
  out += "  \"weights\": [";
  for (Eigen::Index i = 0; i < model.weights.size(); ++i) {
    out += i == 0 ? "\n    " : ",\n    ";
    out += format_double(model.weights(i));
  }
  out += model.weights.size() > 0 ? "\n  ],\n" : "],\n";
  out += "  \"metadata\": {\n";
  out += "    \"embedding_file\": " + json(meta.embedding_file).dump() + ",\n";
  out += "    \"lexicon_checksums\": " + json(meta.lexicon_checksums).dump() + ",\n";
  out += "    \"training_records\": " + std::to_string(meta.training_records) + ",\n";
  out += "    \"seed\": " + (meta.seed ? std::to_string(*meta.seed) : std::string("null")) + "\n";
  out += "  }\n}\n";
  return out;
}

LinearModel model_from_json(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw MalformedModelError(std::string("model file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw MalformedModelError("model file must hold a JSON object");

  const auto version = doc.find("format_version");
  if (version == doc.end() || !version->is_number_integer())
    throw MalformedModelError("model file has no integer 'format_version'");
  if (version->get<int>() != kModelFormatVersion)
    throw ModelVersionError("unsupported model format version " + version->dump() + " (expected " +
                            std::to_string(kModelFormatVersion) + ")");

  try {
    const auto dimension = doc.at("feature_dimension").get<std::int64_t>();
    const json& weights = doc.at("weights");
    if (!weights.is_array()) throw MalformedModelError("'weights' must be an array");
    if (dimension <= 0 || static_cast<std::int64_t>(weights.size()) != dimension)
      throw ModelDimensionError("model declares feature_dimension " + std::to_string(dimension) + " but has " +
                                std::to_string(weights.size()) + " weights");

    LinearModel model;
    model.weights.resize(dimension);
    for (Eigen::Index i = 0; i < dimension; ++i) {
      const json& w = weights[static_cast<std::size_t>(i)];
      if (!w.is_number()) throw MalformedModelError("weight " + std::to_string(i) + " is not a number");
      model.weights(i) = w.get<double>();
    }
    const json& intercept = doc.at("intercept");
    if (!intercept.is_number()) throw MalformedModelError("'intercept' is not a number");
    model.intercept = intercept.get<double>();
    if (!model.weights.allFinite() || !std::isfinite(model.intercept))
      throw MalformedModelError("model parameters must be finite");

    if (const auto meta = doc.find("metadata"); meta != doc.end() && meta->is_object()) {
      model.metadata.embedding_file = meta->value("embedding_file", std::string());
      if (const auto sums = meta->find("lexicon_checksums"); sums != meta->end() && sums->is_object())
        model.metadata.lexicon_checksums = sums->get<std::map<std::string, std::string>>();
      model.metadata.training_records = meta->value("training_records", std::size_t{0});
      if (const auto seed = meta->find("seed"); seed != meta->end() && !seed->is_null())
        model.metadata.seed = seed->get<std::uint64_t>();
    }
    return model;
  } catch (const json::exception& e) {
    throw MalformedModelError(std::string("model file is missing or has mistyped fields: ") + e.what());
  }
}

void save_model(const LinearModel& model, const std::filesystem::path& path) { write_file(path, to_json(model)); }

LinearModel load_model(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  try {
    return model_from_json(text);
  } catch (const ModelVersionError& e) {
    throw ModelVersionError(path.string() + ": " + e.what());
  } catch (const ModelDimensionError& e) {
    throw ModelDimensionError(path.string() + ": " + e.what());
  } catch (const MalformedModelError& e) {
    throw MalformedModelError(path.string() + ": " + e.what());
  }
}

}  // namespace headline
