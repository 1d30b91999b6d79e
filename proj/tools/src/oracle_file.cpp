// Copyright 2026 The cavity-dj Authors
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

#include <fstream>
#include <sstream>

#include "cavitydj_cli/cli.hpp"

namespace cavitydj::cli {

OracleParseError::OracleParseError(std::size_t line, std::size_t column, const std::string &what)
    : OracleError("oracle file line " + std::to_string(line) + ", column " +
                  std::to_string(column) + ": " + what),
      line_(line), column_(column) {}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t nl = text.find('\n', start);
        std::string_view line = text.substr(start, nl == std::string_view::npos ? nl : nl - start);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        lines.push_back(line);
        if (nl == std::string_view::npos) {
            break;
        }
        start = nl + 1;
    }
    return lines;
}

}  // namespace

OracleSpec parse_oracle_text(std::string_view text) {
    auto lines = split_lines(text);
    // A final empty line only means the file ended with a newline.
    if (lines.size() > 2 && lines.back().empty()) {
        lines.pop_back();
    }
    if (lines.empty() || lines[0].empty()) {
        throw OracleParseError(1, 1, "expected the input size n");
    }
    std::size_t n = 0;
    for (std::size_t c = 0; c < lines[0].size(); ++c) {
        const char ch = lines[0][c];
        if (ch < '0' || ch > '9') {
            throw OracleParseError(1, c + 1, "expected a decimal digit");
        }
        n = n * 10 + static_cast<std::size_t>(ch - '0');
        if (n > kMaxOracleBits) {
            throw OracleParseError(1, 1, "n exceeds " + std::to_string(kMaxOracleBits));
        }
    }
    if (n == 0) {
        throw OracleParseError(1, 1, "n must be at least 1");
    }
    if (lines.size() < 2) {
        throw OracleParseError(2, 1, "missing truth table");
    }
    if (lines.size() > 2) {
        throw OracleParseError(3, 1, "unexpected content after the truth table");
    }
    const std::string_view table = lines[1];
    const std::size_t expected = std::size_t{1} << n;
    for (std::size_t c = 0; c < table.size(); ++c) {
        if (table[c] != '0' && table[c] != '1') {
            throw OracleParseError(2, c + 1, "truth table characters must be '0' or '1'");
        }
    }
    if (table.size() != expected) {
        throw OracleParseError(2, std::min(table.size(), expected) + 1,
                               "truth table has " + std::to_string(table.size()) +
                                   " entries, expected " + std::to_string(expected));
    }
    return OracleSpec::from_bits(n, table);
}

OracleSpec parse_oracle_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw OracleError("cannot open oracle file " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_oracle_text(buf.str());
}

}  // namespace cavitydj::cli
