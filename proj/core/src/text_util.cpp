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

#include "text_util.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

using namespace floqudit;

namespace {

std::string_view trim(std::string_view s) {
    size_t a = 0;
    while (a < s.size() && isspace((unsigned char)s[a])) {
        a++;
    }
    size_t b = s.size();
    while (b > a && isspace((unsigned char)s[b - 1])) {
        b--;
    }
    return s.substr(a, b - a);
}

}  // namespace

std::vector<ContentLine> floqudit::split_content_lines(std::string_view text) {
    std::vector<ContentLine> out;
    size_t number = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        std::string_view line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        number++;
        size_t hash = line.find('#');
        if (hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (!line.empty()) {
            out.push_back({number, line});
        }
        if (end == std::string_view::npos) {
            break;
        }
        start = end + 1;
    }
    return out;
}

std::vector<std::string_view> floqudit::split_tokens(std::string_view text) {
    std::vector<std::string_view> out;
    size_t k = 0;
    while (k < text.size()) {
        while (k < text.size() && isspace((unsigned char)text[k])) {
            k++;
        }
        size_t start = k;
        while (k < text.size() && !isspace((unsigned char)text[k])) {
            k++;
        }
        if (k > start) {
            out.push_back(text.substr(start, k - start));
        }
    }
    return out;
}

uint64_t floqudit::parse_uint(std::string_view token, size_t line_number) {
    uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
        std::stringstream ss;
        ss << "Line " << line_number << ": expected a non-negative integer but got '" << token << "'.";
        throw std::invalid_argument(ss.str());
    }
    return v;
}

int64_t floqudit::parse_int(std::string_view token, size_t line_number) {
    int64_t v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
        std::stringstream ss;
        ss << "Line " << line_number << ": expected an integer but got '" << token << "'.";
        throw std::invalid_argument(ss.str());
    }
    return v;
}

uint64_t floqudit::parse_key_value(std::string_view token, std::string_view key, size_t line_number) {
    if (token.size() <= key.size() || token.substr(0, key.size()) != key || token[key.size()] != '=') {
        std::stringstream ss;
        ss << "Line " << line_number << ": expected '" << key << "=<value>' but got '" << token << "'.";
        throw std::invalid_argument(ss.str());
    }
    return parse_uint(token.substr(key.size() + 1), line_number);
}

std::string floqudit::read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("Failed to open '" + path + "' for reading.");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void floqudit::write_file(const std::string &path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("Failed to open '" + path + "' for writing.");
    }
    out.write(contents.data(), (std::streamsize)contents.size());
    if (!out) {
        throw std::runtime_error("Failed to write '" + path + "'.");
    }
}
