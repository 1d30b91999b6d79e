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

#include "cavitydj/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numbers>
#include <random>
#include <stdexcept>

#include "cavitydj/dynamics.hpp"
#include "cavitydj/errors.hpp"
#include "cavitydj/random.hpp"

namespace cavitydj {

std::string_view to_string(OracleClass c) {
    return c == OracleClass::Constant ? "constant" : "balanced";
}

namespace {

std::size_t checked_size(std::size_t n) {
    if (n < 1 || n > kMaxOracleBits) {
        throw OracleError("oracle input size must be between 1 and " +
                          std::to_string(kMaxOracleBits) + " bits");
    }
    return std::size_t{1} << n;
}

bool parity_bit(std::uint64_t x) { return (std::popcount(x) & 1) != 0; }

}  // namespace

OracleSpec::OracleSpec(std::size_t n, std::vector<std::uint8_t> truth_table)
    : n_(n), table_(std::move(truth_table)) {
    const std::size_t size = checked_size(n_);
    if (table_.size() != size) {
        throw OracleError("truth table has " + std::to_string(table_.size()) +
                          " entries, expected " + std::to_string(size));
    }
    for (auto &v : table_) {
        if (v > 1) {
            throw OracleError("truth table entries must be 0 or 1");
        }
    }
    const std::size_t k = ones();
    if (k == 0 || k == size) {
        class_ = OracleClass::Constant;
    } else if (k == size / 2) {
        class_ = OracleClass::Balanced;
    } else {
        throw OracleError("oracle class violation: " + std::to_string(k) + " ones out of " +
                          std::to_string(size) + " is neither constant nor balanced");
    }
}

OracleSpec OracleSpec::constant(std::size_t n, bool value) {
    return OracleSpec(n, std::vector<std::uint8_t>(checked_size(n), value ? 1 : 0));
}

OracleSpec OracleSpec::parity(std::size_t n) {
    std::vector<std::uint8_t> t(checked_size(n));
    for (std::size_t x = 0; x < t.size(); ++x) {
        t[x] = parity_bit(x) ? 1 : 0;
    }
    return OracleSpec(n, std::move(t));
}

OracleSpec OracleSpec::random_balanced(std::size_t n, std::uint64_t seed) {
    const std::size_t size = checked_size(n);
    std::vector<std::uint8_t> t(size, 0);
    std::fill(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(size / 2), 1);
    std::mt19937_64 rng(seed);
    for (std::size_t i = size - 1; i > 0; --i) {
        std::swap(t[i], t[uniform_below(rng, i + 1)]);
    }
    return OracleSpec(n, std::move(t));
}

OracleSpec OracleSpec::from_bits(std::size_t n, std::string_view bits) {
    std::vector<std::uint8_t> t;
    t.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw OracleError("truth table characters must be '0' or '1'");
        }
        t.push_back(c == '1' ? 1 : 0);
    }
    return OracleSpec(n, std::move(t));
}

std::size_t OracleSpec::ones() const {
    return static_cast<std::size_t>(std::count(table_.begin(), table_.end(), 1));
}

std::string OracleSpec::bits() const {
    std::string s;
    s.reserve(table_.size());
    for (auto v : table_) {
        s.push_back(v ? '1' : '0');
    }
    return s;
}

bool OracleSpec::is_affine_parity() const {
    const bool c = table_[0] != 0;
    for (std::size_t x = 0; x < table_.size(); ++x) {
        if ((table_[x] != 0) != (c != parity_bit(x))) {
            return false;
        }
    }
    return true;
}

int bitwise_dot(std::string_view x, std::string_view y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("bitwise_dot: length mismatch");
    }
    int acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if ((x[i] != '0' && x[i] != '1') || (y[i] != '0' && y[i] != '1')) {
            throw std::invalid_argument("bitwise_dot: bit strings must contain only 0 and 1");
        }
        acc ^= (x[i] == '1' && y[i] == '1') ? 1 : 0;
    }
    return acc;
}

int bitwise_dot(std::uint64_t x, std::uint64_t y) { return std::popcount(x & y) & 1; }

namespace {

void require_qubits(const CompositeSpace &space, std::size_t count, const char *what) {
    if (space.num_subsystems() < count) {
        throw OracleError(std::string(what) + ": register size mismatch");
    }
    for (std::size_t k = 0; k < count; ++k) {
        if (space.dim(k) != 2) {
            throw DimensionError(std::string(what) + ": subsystem " + std::to_string(k) +
                                 " is not a qubit");
        }
    }
}

}  // namespace

StateVector ideal_oracle_apply(const StateVector &reg, const OracleSpec &oracle) {
    const CompositeSpace &space = reg.space();
    if (space.num_subsystems() != oracle.n()) {
        throw OracleError("ideal_oracle_apply: register has " +
                          std::to_string(space.num_subsystems()) + " subsystems, oracle expects " +
                          std::to_string(oracle.n()));
    }
    require_qubits(space, oracle.n(), "ideal_oracle_apply");
    std::vector<Complex> amps(reg.amplitudes().begin(), reg.amplitudes().end());
    for (std::size_t x = 0; x < amps.size(); ++x) {
        if (oracle(x)) {
            amps[x] = -amps[x];
        }
    }
    return StateVector::from_amplitudes(space, std::move(amps));
}

StateVector f_gate_apply(const StateVector &state, const OracleSpec &oracle) {
    const CompositeSpace &space = state.space();
    if (space.num_subsystems() != oracle.n() + 1) {
        throw OracleError("f_gate_apply: expected n register qubits plus one target");
    }
    require_qubits(space, oracle.n() + 1, "f_gate_apply");
    std::vector<Complex> amps(state.size());
    for (std::size_t i = 0; i < state.size(); ++i) {
        const std::size_t x = i >> 1;
        const std::size_t y = i & 1;
        amps[(x << 1) | (y ^ (oracle(x) ? 1 : 0))] = state[i];
    }
    return StateVector::from_amplitudes(space, std::move(amps));
}

StateVector hadamard_transform(const StateVector &reg) {
    const CompositeSpace &space = reg.space();
    require_qubits(space, space.num_subsystems(), "hadamard_transform");
    const Operator h = hadamard();
    StateVector out = reg;
    for (std::size_t k = 0; k < space.num_subsystems(); ++k) {
        out = apply_on(h, out, k);
    }
    return out;
}

std::optional<double> physical_phi_for(const OracleSpec &oracle) {
    if (oracle.oracle_class() == OracleClass::Constant) {
        return 2.0 * std::numbers::pi;
    }
    if (oracle.is_affine_parity()) {
        return std::numbers::pi;
    }
    return std::nullopt;
}

}  // namespace cavitydj
