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

#include <CLI11.hpp>
#include <iostream>

#include "headline/cli.hpp"

int main(int argc, char** argv) {
  using headline::cli::Command;
  headline::cli::RunConfig config;

  CLI::App app{"Clickbait scoring for tweet headlines: split, train, predict, evaluate, features"};
  app.require_subcommand(1);

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--data-dir", config.data_dir, "Directory with stopword and lexicon files");
  };

  CLI::App* split = app.add_subcommand("split", "Merge two labeled corpora, balance classes, split train/validation");
  split->add_option("--instances", config.instances, "Instances JSONL (give once per corpus)")->required();
  split->add_option("--truth", config.truth, "Truth JSONL (same order as --instances)")->required();
  split->add_option("--out", config.out, "Output directory")->required();
  split->add_option("--seed", config.seed, "Random seed")->capture_default_str();
  split->add_option("--train-fraction", config.train_fraction, "Share of the balanced pool used for training")
      ->capture_default_str();

  CLI::App* train = app.add_subcommand("train", "Fit the linear model and write it as JSON");
  train->add_option("--instances", config.instances, "Instances JSONL")->required();
  train->add_option("--truth", config.truth, "Truth JSONL")->required();
  train->add_option("--embeddings", config.embeddings, "GloVe text file")->required();
  train->add_option("--model", config.model, "Output model file")->required();
  train->add_option("--seed", config.seed, "Seed recorded in the model metadata")->capture_default_str();
  train->add_option("--dims", config.dims, "Embedding dimension (default 300)");
  add_common(train);

  CLI::App* predict = app.add_subcommand("predict", "Score instances with a trained model");
  predict->add_option("--model", config.model, "Model file")->required();
  predict->add_option("--instances", config.instances, "Instances JSONL")->required();
  predict->add_option("--embeddings", config.embeddings, "GloVe text file")->required();
  predict->add_option("--out", config.out, "Output predictions JSONL")->required();
  predict->add_option("--dims", config.dims, "Embedding dimension (default: taken from the model)");
  add_common(predict);

  CLI::App* evaluate = app.add_subcommand("evaluate", "Score predictions against truth labels");
  evaluate->add_option("--predictions", config.predictions, "Predictions JSONL")->required();
  evaluate->add_option("--truth", config.truth, "Truth JSONL")->required();
  evaluate->add_option("--threshold", config.threshold, "Clickbait decision threshold")->capture_default_str();
  evaluate->add_option("--out", config.out, "Also write the report here");

  CLI::App* features = app.add_subcommand("features", "Dump the feature matrix as CSV");
  features->add_option("--instances", config.instances, "Instances JSONL")->required();
  features->add_option("--embeddings", config.embeddings, "GloVe text file")->required();
  features->add_option("--out", config.out, "Output CSV (default: stdout)");
  features->add_option("--dims", config.dims, "Embedding dimension (default 300)");
  add_common(features);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : headline::cli::kInputError;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const auto command = headline::cli::parse_command(chosen->get_name());
  return headline::cli::run(*command, config, std::cout, std::cerr);
}
