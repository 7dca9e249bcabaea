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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace headline {

/// Non-fatal diagnostics collected by loaders. Callers decide where they go.
using Warnings = std::vector<std::string>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad or missing input: files, formats, user arguments.
class InputError : public Error {
 public:
  using Error::Error;
};

class IoError : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : InputError(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ValidationError : public InputError {
 public:
  using InputError::InputError;
};

class FormatError : public InputError {
 public:
  using InputError::InputError;
};

class CorpusError : public InputError {
 public:
  using InputError::InputError;
};

/// Base of the three distinct model-file load failures.
class ModelFileError : public InputError {
 public:
  using InputError::InputError;
};

class MalformedModelError : public ModelFileError {
 public:
  using ModelFileError::ModelFileError;
};

class ModelVersionError : public ModelFileError {
 public:
  using ModelFileError::ModelFileError;
};

class ModelDimensionError : public ModelFileError {
 public:
  using ModelFileError::ModelFileError;
};

// Numeric or model failures at run time.
class NumericError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public NumericError {
 public:
  using NumericError::NumericError;
};

class SolverError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace headline
