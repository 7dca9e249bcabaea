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

#include <cstdlib>
#include <iostream>
#include <map>
#include <json.hpp>
#include <sstream>

#include "headline/cli.hpp"
#include "headline/corpus.hpp"
#include "headline/embeddings.hpp"
#include "headline/errors.hpp"
#include "headline/features.hpp"
#include "headline/io.hpp"
#include "headline/metrics.hpp"
#include "headline/model.hpp"

namespace headline::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

constexpr std::string_view kStopwordFile = "stopwords_en.txt";

void flush_warnings(Warnings& warnings, std::ostream& err) {
  for (const std::string& w : warnings) err << "warning: " << w << "\n";
  warnings.clear();
}

const fs::path& require(const std::optional<fs::path>& value, std::string_view flag) {
  if (!value) throw InputError("missing required option --" + std::string(flag));
  return *value;
}

void require_file(const fs::path& path, std::string_view flag) {
  if (!fs::is_regular_file(path)) throw IoError("--" + std::string(flag) + " file not found: " + path.string());
}

void require_pairs(const RunConfig& config, std::size_t min_pairs, std::size_t max_pairs) {
  if (config.instances.size() != config.truth.size())
    throw InputError("--instances and --truth must be given the same number of times");
  if (config.instances.size() < min_pairs || config.instances.size() > max_pairs)
    throw InputError("expected between " + std::to_string(min_pairs) + " and " + std::to_string(max_pairs) +
                     " --instances/--truth pairs");
  for (const fs::path& p : config.instances) require_file(p, "instances");
  for (const fs::path& p : config.truth) require_file(p, "truth");
}

struct Lexicons {
  StopwordList stops;
  FeatureLexicons lex;
  std::map<std::string, std::string> checksums;
};

Lexicons load_lexicons(const RunConfig& config) {
  const fs::path dir = resolve_data_dir(config);
  Lexicons out{WordList::load(dir / kStopwordFile), FeatureLexicons::load(dir), {}};
  out.checksums[std::string(kStopwordFile)] = file_checksum(dir / kStopwordFile);
  for (std::string_view name : FeatureLexicons::kFileNames)
    out.checksums[std::string(name)] = file_checksum(dir / name);
  return out;
}

LabeledDataset load_labeled(const fs::path& instances, const fs::path& truth, std::ostream& err,
                            ordered_json* summary = nullptr) {
  Warnings warnings;
  const std::vector<Instance> inst = load_instances(instances);
  const std::vector<TruthLabel> labels = load_truth(truth, &warnings);
  JoinReport report;
  LabeledDataset ds = join(inst, labels, &report, &warnings);
  ds.provenance = {instances.filename().string(), truth.filename().string()};
  flush_warnings(warnings, err);
  if (summary) {
    const ClassCounts counts = ds.class_counts();
    *summary = {{"instances", instances.string()},
                {"truth", truth.string()},
                {"records", ds.size()},
                {"clickbait", counts.clickbait},
                {"no_clickbait", counts.no_clickbait},
                {"instances_without_truth", report.instances_without_truth},
                {"truths_without_instance", report.truths_without_instance}};
  }
  return ds;
}

std::string to_jsonl(const LabeledDataset& ds, bool truth) {
  std::string out;
  for (const LabeledRecord& r : ds.records) {
    out += truth ? r.truth.raw : r.instance.raw;
    out += '\n';
  }
  return out;
}

ordered_json counts_json(const ClassCounts& c) {
  return {{"total", c.total()}, {"clickbait", c.clickbait}, {"no_clickbait", c.no_clickbait}};
}

Eigen::Index expected_dims(const RunConfig& config) {
  const long dims = config.dims.value_or(kDefaultEmbeddingDim);
  if (dims <= 0) throw InputError("--dims must be positive");
  return dims;
}

int cmd_split(const RunConfig& config, std::ostream& out, std::ostream& err) {
  require_pairs(config, 1, 2);
  const fs::path& out_dir = require(config.out, "out");

  ordered_json sources = ordered_json::array();
  std::vector<LabeledDataset> corpora;
  for (std::size_t i = 0; i < config.instances.size(); ++i) {
    ordered_json summary;
    corpora.push_back(load_labeled(config.instances[i], config.truth[i], err, &summary));
    sources.push_back(std::move(summary));
  }
  const LabeledDataset empty;
  const Split split =
      merge_balance_split(corpora[0], corpora.size() > 1 ? corpora[1] : empty, config.train_fraction, config.seed);

  fs::create_directories(out_dir);
  write_file(out_dir / "train_instances.jsonl", to_jsonl(split.train, false));
  write_file(out_dir / "train_truth.jsonl", to_jsonl(split.train, true));
  write_file(out_dir / "validation_instances.jsonl", to_jsonl(split.validation, false));
  write_file(out_dir / "validation_truth.jsonl", to_jsonl(split.validation, true));

  const ClassCounts train = split.train.class_counts();
  const ClassCounts validation = split.validation.class_counts();
  const ClassCounts balanced{train.clickbait + validation.clickbait, train.no_clickbait + validation.no_clickbait};
  ordered_json summary = {{"seed", config.seed},
                          {"train_fraction", config.train_fraction},
                          {"sources", sources},
                          {"balanced", counts_json(balanced)},
                          {"train", counts_json(train)},
                          {"validation", counts_json(validation)}};
  const std::string text = summary.dump(2) + "\n";
  write_file(out_dir / "split_summary.json", text);
  out << text;
  return kSuccess;
}

int cmd_train(const RunConfig& config, std::ostream& out, std::ostream& err) {
  require_pairs(config, 1, 2);
  const fs::path& embeddings = require(config.embeddings, "embeddings");
  const fs::path& model_path = require(config.model, "model");
  require_file(embeddings, "embeddings");
  const Eigen::Index dims = expected_dims(config);
  const Lexicons lexicons = load_lexicons(config);

  LabeledDataset data;
  for (std::size_t i = 0; i < config.instances.size(); ++i) {
    LabeledDataset part = load_labeled(config.instances[i], config.truth[i], err);
    data.records.insert(data.records.end(), std::make_move_iterator(part.records.begin()),
                        std::make_move_iterator(part.records.end()));
  }
  if (data.empty()) throw CorpusError("no instance matched a truth label; nothing to train on");

  Warnings warnings;
  const EmbeddingTable table = load_embeddings(embeddings, dims, &warnings);
  flush_warnings(warnings, err);
  err << "loaded " << table.size() << " embeddings of dimension " << table.dimension() << "\n";

  const FeaturizedData featurized = featurize_dataset(data, table, lexicons.stops, lexicons.lex);
  LinearModel model = fit(featurized.features, featurized.targets);
  model.metadata.embedding_file = embeddings.filename().string();
  model.metadata.lexicon_checksums = lexicons.checksums;
  model.metadata.training_records = data.size();
  model.metadata.seed = config.seed;
  save_model(model, model_path);

  const Eigen::VectorXd residual = featurized.targets - predict_raw(model, featurized.features);
  const double n = static_cast<double>(data.size());
  const double target_variance = (featurized.targets.array() - featurized.targets.mean()).square().sum() / n;
  ordered_json report = {{"n", data.size()},
                         {"feature_dimension", model.feature_dimension()},
                         {"training_mse", residual.squaredNorm() / n},
                         {"target_variance", target_variance},
                         {"seed", config.seed},
                         {"model", model_path.string()}};
  out << report.dump(2) << "\n";
  return kSuccess;
}

int cmd_predict(const RunConfig& config, std::ostream& /*out*/, std::ostream& err) {
  const fs::path& model_path = require(config.model, "model");
  const fs::path& embeddings = require(config.embeddings, "embeddings");
  const fs::path& out_path = require(config.out, "out");
  if (config.instances.size() != 1) throw InputError("predict takes exactly one --instances file");
  require_file(model_path, "model");
  require_file(embeddings, "embeddings");
  require_file(config.instances[0], "instances");

  const LinearModel model = load_model(model_path);
  const Lexicons lexicons = load_lexicons(config);
  for (const auto& [name, sum] : model.metadata.lexicon_checksums) {
    const auto it = lexicons.checksums.find(name);
    if (it == lexicons.checksums.end() || it->second != sum)
      err << "warning: " << name << " differs from the copy the model was trained with\n";
  }
  const std::vector<Instance> instances = load_instances(config.instances[0]);

  Warnings warnings;
  const EmbeddingTable table =
      load_embeddings(embeddings, config.dims ? std::optional<Eigen::Index>(*config.dims) : std::nullopt, &warnings);
  flush_warnings(warnings, err);
  const Featurizer featurize(table, lexicons.stops, lexicons.lex);
  if (featurize.dimension() != model.feature_dimension())
    throw DimensionError("embeddings give " + std::to_string(featurize.dimension()) +
                         " features but the model expects " + std::to_string(model.feature_dimension()));

  std::string lines;
  for (const Instance& inst : instances) {
    const Prediction p = predict(model, featurize(inst.post_text), inst.id);
    lines += "{\"id\":" + nlohmann::json(p.id).dump() + ",\"clickbaitScore\":" + format_double(p.clamped_score) + "}\n";
  }
  write_file(out_path, lines);
  err << "wrote " << instances.size() << " predictions to " << out_path.string() << "\n";
  return kSuccess;
}

int cmd_evaluate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const fs::path& predictions = require(config.predictions, "predictions");
  if (config.truth.size() != 1) throw InputError("evaluate takes exactly one --truth file");
  require_file(predictions, "predictions");
  require_file(config.truth[0], "truth");

  Warnings warnings;
  const MetricsReport report = evaluate(predictions, config.truth[0], config.threshold, &warnings);
  flush_warnings(warnings, err);
  const std::string text = report.to_json();
  if (config.out) write_file(*config.out, text);
  out << text;
  return kSuccess;
}

int cmd_features(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const fs::path& embeddings = require(config.embeddings, "embeddings");
  if (config.instances.size() != 1) throw InputError("features takes exactly one --instances file");
  require_file(embeddings, "embeddings");
  require_file(config.instances[0], "instances");
  const Eigen::Index dims = expected_dims(config);
  const Lexicons lexicons = load_lexicons(config);
  const std::vector<Instance> instances = load_instances(config.instances[0]);

  Warnings warnings;
  const EmbeddingTable table = load_embeddings(embeddings, dims, &warnings);
  flush_warnings(warnings, err);
  const Featurizer featurize(table, lexicons.stops, lexicons.lex);

  std::string csv;
  const std::vector<std::string> names = feature_column_names(dims);
  for (std::size_t i = 0; i < names.size(); ++i) csv += (i ? "," : "") + names[i];
  csv += '\n';
  for (const Instance& inst : instances) {
    const Eigen::VectorXd row = featurize(inst.post_text);
    for (Eigen::Index k = 0; k < row.size(); ++k) csv += (k ? "," : "") + format_double(row(k));
    csv += '\n';
  }
  if (config.out)
    write_file(*config.out, csv);
  else
    out << csv;
  return kSuccess;
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  if (name == "split") return Command::split;
  if (name == "train") return Command::train;
  if (name == "predict") return Command::predict;
  if (name == "evaluate") return Command::evaluate;
  if (name == "features") return Command::features;
  return std::nullopt;
}

fs::path resolve_data_dir(const RunConfig& config) {
  if (config.data_dir) return *config.data_dir;
  if (const char* env = std::getenv("HEADLINE_DATA_DIR"); env && *env) return env;
  return HEADLINE_DEFAULT_DATA_DIR;
}

int run(Command command, const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (command) {
      case Command::split: return cmd_split(config, out, err);
      case Command::train: return cmd_train(config, out, err);
      case Command::predict: return cmd_predict(config, out, err);
      case Command::evaluate: return cmd_evaluate(config, out, err);
      case Command::features: return cmd_features(config, out, err);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kNumericError;
  }
  return kInputError;
}

}  // namespace headline::cli
