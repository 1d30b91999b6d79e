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

/**
 * @file
 * Boolean oracles F: {0,1}^n -> {0,1} promised to be constant or balanced,
 * and the register-level gates that consume them.
 *
 * Bit order: an input X = x_{n-1} ... x_0 is the flat register index with
 * atom A1 holding the most significant bit x_{n-1}.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cavitydj/hilbert.hpp"

namespace cavitydj {

enum class OracleClass { Constant, Balanced };

std::string_view to_string(OracleClass c);

/// Largest register size accepted anywhere in the library.
inline constexpr std::size_t kMaxOracleBits = 20;

class OracleSpec {
  public:
    /// Validates that the table is constant or balanced; throws OracleError
    /// ("oracle class violation ...") with the ones-count otherwise.
    OracleSpec(std::size_t n, std::vector<std::uint8_t> truth_table);

    static OracleSpec constant(std::size_t n, bool value);
    /// F(X) = x_{n-1} xor ... xor x_0.
    static OracleSpec parity(std::size_t n);
    /// Uniformly shuffled table with exactly 2^{n-1} ones.
    static OracleSpec random_balanced(std::size_t n, std::uint64_t seed);
    /// Parses a 2^n character string of '0'/'1', entry X at position X.
    static OracleSpec from_bits(std::size_t n, std::string_view bits);

    [[nodiscard]] std::size_t n() const { return n_; }
    [[nodiscard]] std::size_t size() const { return table_.size(); }
    [[nodiscard]] OracleClass oracle_class() const { return class_; }
    [[nodiscard]] bool operator()(std::size_t x) const { return table_[x] != 0; }
    [[nodiscard]] std::size_t ones() const;
    [[nodiscard]] const std::vector<std::uint8_t> &truth_table() const { return table_; }
    [[nodiscard]] std::string bits() const;

    /// True when F(X) = c xor parity(X) for a fixed bit c.
    [[nodiscard]] bool is_affine_parity() const;

  private:
    std::size_t n_;
    std::vector<std::uint8_t> table_;
    OracleClass class_;
};

/// X.Y = xor_i x_i y_i over bit strings of equal length. Throws
/// std::invalid_argument on a length mismatch or a character other than 0/1.
int bitwise_dot(std::string_view x, std::string_view y);

/// X.Y over the low n bits of integer encodings.
int bitwise_dot(std::uint64_t x, std::uint64_t y);

/// |X> -> (-1)^{F(X)} |X> on an n-qubit register.
StateVector ideal_oracle_apply(const StateVector &reg, const OracleSpec &oracle);

/// F-gate |x, y> -> |x, y xor F(x)> on n register qubits followed by one
/// target qubit (the last subsystem).
StateVector f_gate_apply(const StateVector &state, const OracleSpec &oracle);

/// H on every qubit of a register whose subsystems all have dimension 2.
StateVector hadamard_transform(const StateVector &reg);

/// Dispersive phase that reproduces the oracle with one uniform interaction
/// per atom: 2*pi for constant tables, pi for parity tables, nullopt when no
/// uniform phase reproduces (-1)^{F(X)} up to a global sign.
std::optional<double> physical_phi_for(const OracleSpec &oracle);

}  // namespace cavitydj
