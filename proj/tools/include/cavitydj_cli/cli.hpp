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

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "cavitydj/errors.hpp"
#include "cavitydj/oracle.hpp"

namespace cavitydj::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitOracle = 2,
    kExitNumeric = 3,
};

/// Malformed oracle file; carries the 1-based position of the problem.
class OracleParseError : public OracleError {
  public:
    OracleParseError(std::size_t line, std::size_t column, const std::string &what);

    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

/// Oracle file contents:
///   line 1  decimal n
///   line 2  2^n characters '0'/'1'; character X is F(X), A1 = MSB
/// A trailing newline is optional.
OracleSpec parse_oracle_text(std::string_view text);
OracleSpec parse_oracle_file(const std::filesystem::path &path);

/// Angle literal: "pi", "2pi", "-pi", "pi/2", "3pi/4" or decimal radians.
double parse_angle(std::string_view text);

/// Serializes with members in insertion order and doubles at 17 significant
/// digits. Values within 1e-14 of an integer are written as that integer
/// with one decimal ("1.0", "0.0").
std::string write_json(const nlohmann::ordered_json &report);

/// key,value rows with dotted paths for nested members.
std::string write_csv(const nlohmann::ordered_json &report);

/// Register outcome counts from `shots` Born samples of `distribution`, one
/// derived RNG stream per shot.
std::vector<std::size_t> sample_counts(const std::vector<double> &distribution,
                                       std::uint64_t seed, std::size_t shots);

/// Entry point shared by the executable and the tests. `env_seed` stands in
/// for the CAVITY_DJ_SEED environment variable.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
        std::optional<std::string> env_seed = std::nullopt);

}  // namespace cavitydj::cli
