// Copyright 2026 floqudit Contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FLOQUDIT_TEXT_UTIL_HPP
#define FLOQUDIT_TEXT_UTIL_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace floqudit {

struct ContentLine {
    size_t number;
    std::string_view text;
};

/// Splits into lines, strips `#` comments and surrounding whitespace, and drops empty lines.
std::vector<ContentLine> split_content_lines(std::string_view text);

std::vector<std::string_view> split_tokens(std::string_view text);

/// Parses a non-negative decimal integer; throws std::invalid_argument mentioning the line number.
uint64_t parse_uint(std::string_view token, size_t line_number);

/// Parses a signed decimal integer; throws std::invalid_argument mentioning the line number.
int64_t parse_int(std::string_view token, size_t line_number);

/// Parses `<key>=<uint>`.
uint64_t parse_key_value(std::string_view token, std::string_view key, size_t line_number);

std::string read_file(const std::string &path);
void write_file(const std::string &path, std::string_view contents);

}  // namespace floqudit

#endif
