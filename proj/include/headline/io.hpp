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
#include <functional>
#include <string>
#include <string_view>

namespace headline {

/// Reads a whole file; throws IoError naming the path when it cannot.
std::string read_file(const std::filesystem::path& path);

/// Writes `content` to `path`, replacing any existing file.
void write_file(const std::filesystem::path& path, std::string_view content);

/// Calls `fn(line_number, line)` for every line of `text`; line numbers are
/// 1-based and a trailing '\r' is dropped.
void for_each_line(std::string_view text,
                   const std::function<void(std::size_t, std::string_view)>& fn);

bool is_blank(std::string_view line);

/// 64-bit FNV-1a over the bytes of a file, as 16 lowercase hex digits.
std::string file_checksum(const std::filesystem::path& path);

/// 17 significant digits, enough for any double to round-trip exactly.
std::string format_double(double value);

}  // namespace headline
