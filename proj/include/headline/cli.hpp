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
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

namespace headline::cli {

enum ExitCode : int { kSuccess = 0, kInputError = 2, kNumericError = 3 };

enum class Command { split, train, predict, evaluate, features };

std::optional<Command> parse_command(std::string_view name);

struct RunConfig {
  std::vector<std::filesystem::path> instances;
  std::vector<std::filesystem::path> truth;
  std::optional<std::filesystem::path> embeddings;
  std::optional<std::filesystem::path> model;
  std::optional<std::filesystem::path> predictions;
  std::optional<std::filesystem::path> out;
  std::optional<std::filesystem::path> data_dir;
  std::uint64_t seed = 42;
  double train_fraction = 0.8;
  double threshold = 0.5;
  std::optional<long> dims;
};

/// Directory holding the stopword and lexicon files: `config.data_dir`, else
/// $HEADLINE_DATA_DIR, else the data/ directory of the source tree.
std::filesystem::path resolve_data_dir(const RunConfig& config);

/// Runs one subcommand. Machine-readable output goes to `out`, diagnostics
/// to `err`. Returns 0 on success, 2 on input or usage errors and 3 on
/// numeric or model errors.
int run(Command command, const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace headline::cli
