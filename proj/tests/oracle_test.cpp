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

#include <gtest/gtest.h>

#include <numbers>

#include "cavitydj/dynamics.hpp"
#include "cavitydj/errors.hpp"
#include "test_util.hpp"

using namespace cavitydj;
using namespace cavitydj::testing;

namespace {

int popcount_parity_dot(std::uint64_t x, std::uint64_t y, std::size_t n) {
    int ones = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (((x >> i) & 1) && ((y >> i) & 1)) ++ones;
    }
    return ones % 2;
}

std::string bits_of(std::uint64_t x, std::size_t n) {
    std::string s(n, '0');
    for (std::size_t k = 0; k < n; ++k) {
        if ((x >> (n - 1 - k)) & 1) s[k] = '1';
    }
    return s;
}

StateVector uniform_register(std::size_t n) {
    CompositeSpace sp(std::vector<std::size_t>(n, 2));
    return hadamard_transform(StateVector::basis(sp, 0));
}

// Every table over n bits with exactly 2^{n-1} ones.
std::vector<OracleSpec> all_balanced(std::size_t n) {
    std::vector<OracleSpec> out;
    const std::size_t size = std::size_t{1} << n;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << size); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != size / 2) continue;
        std::vector<std::uint8_t> t(size);
        for (std::size_t x = 0; x < size; ++x) t[x] = (mask >> x) & 1;
        out.emplace_back(n, std::move(t));
    }
    return out;
}

}  // namespace

TEST(OracleSpec, Classification) {
    EXPECT_EQ(OracleSpec::constant(3, false).oracle_class(), OracleClass::Constant);
    EXPECT_EQ(OracleSpec::constant(3, true).oracle_class(), OracleClass::Constant);
    EXPECT_EQ(OracleSpec::parity(3).oracle_class(), OracleClass::Balanced);
    EXPECT_EQ(OracleSpec::parity(3).bits(), "01101001");
    EXPECT_EQ(OracleSpec::from_bits(2, "0110").oracle_class(), OracleClass::Balanced);
    EXPECT_THROW(OracleSpec::from_bits(2, "0100"), OracleError);
    try {
        OracleSpec::from_bits(2, "0100");
    } catch (const OracleError &e) {
        EXPECT_NE(std::string(e.what()).find("oracle class violation"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("1 ones"), std::string::npos);
    }
    EXPECT_THROW(OracleSpec::from_bits(2, "011"), OracleError);
    EXPECT_THROW(OracleSpec::from_bits(2, "01x0"), OracleError);
    EXPECT_THROW(OracleSpec::constant(0, false), OracleError);
}

TEST(OracleSpec, RandomBalancedIsBalancedAndSeeded) {
    for (std::size_t n = 1; n <= 10; ++n) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            auto o = OracleSpec::random_balanced(n, seed);
            EXPECT_EQ(o.ones(), std::size_t{1} << (n - 1));
            EXPECT_EQ(o.bits(), OracleSpec::random_balanced(n, seed).bits());
        }
    }
    EXPECT_NE(OracleSpec::random_balanced(6, 1).bits(), OracleSpec::random_balanced(6, 2).bits());
}

TEST(BitwiseDot, Examples) {
    EXPECT_EQ(bitwise_dot("000", "101"), 0);
    EXPECT_EQ(bitwise_dot("11", "11"), 0);
    EXPECT_EQ(bitwise_dot("110", "011"), 1);
    EXPECT_THROW(bitwise_dot("10", "101"), std::invalid_argument);
    EXPECT_THROW(bitwise_dot("1a", "10"), std::invalid_argument);
}

TEST(BitwiseDot, ExhaustiveAgainstPopcountParity) {
    const std::size_t n = 3;
    for (std::uint64_t x = 0; x < 8; ++x) {
        for (std::uint64_t y = 0; y < 8; ++y) {
            const int expected = popcount_parity_dot(x, y, n);
            EXPECT_EQ(bitwise_dot(bits_of(x, n), bits_of(y, n)), expected);
            EXPECT_EQ(bitwise_dot(x, y), expected);
        }
    }
}

TEST(HadamardTransform, Examples) {
    auto u = hadamard_transform(StateVector::basis(CompositeSpace({2, 2}), 0));
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(u[i] - 0.5), 0.0, 1e-15);
    auto m = hadamard_transform(StateVector::qudit_basis(2, 1));
    EXPECT_LE(max_abs_diff(m, qubit(kInvSqrt2, -kInvSqrt2)), 1e-16);
    EXPECT_THROW(hadamard_transform(StateVector::basis(CompositeSpace({2, 3}), 0)),
                 DimensionError);
}

TEST(HadamardTransform, MatchesSignedSumFormula) {
    for (std::size_t n = 1; n <= 6; ++n) {
        CompositeSpace sp(std::vector<std::size_t>(n, 2));
        const double scale = 1.0 / std::sqrt(static_cast<double>(sp.total_dim()));
        for (std::size_t x = 0; x < sp.total_dim(); ++x) {
            auto out = hadamard_transform(StateVector::basis(sp, x));
            for (std::size_t y = 0; y < sp.total_dim(); ++y) {
                const double expected = popcount_parity_dot(x, y, n) ? -scale : scale;
                EXPECT_NEAR(std::abs(out[y] - expected), 0.0, 1e-12);
            }
        }
    }
}

TEST(IdealOracle, Examples) {
    auto psi = uniform_register(3);
    EXPECT_LE(max_abs_diff(ideal_oracle_apply(psi, OracleSpec::constant(3, false)), psi), 0.0);
    auto neg = ideal_oracle_apply(psi, OracleSpec::constant(3, true));
    EXPECT_NEAR(fidelity_up_to_phase(neg, psi), 1.0, 1e-15);
    EXPECT_LE(max_abs_diff(neg, psi.scaled(-1.0)), 0.0);

    auto plus = qubit(kInvSqrt2, kInvSqrt2);
    auto out = ideal_oracle_apply(plus, OracleSpec::parity(1));
    EXPECT_LE(max_abs_diff(out, qubit(kInvSqrt2, -kInvSqrt2)), 0.0);
    EXPECT_THROW(ideal_oracle_apply(plus, OracleSpec::parity(2)), OracleError);
}

TEST(FGate, PhaseKickbackEqualsPhaseOracle) {
    std::mt19937_64 rng(31);
    for (std::size_t n = 1; n <= 4; ++n) {
        CompositeSpace reg_space(std::vector<std::size_t>(n, 2));
        auto reg = random_state(reg_space, rng);
        auto target = qubit(kInvSqrt2, -kInvSqrt2);
        for (auto oracle : {OracleSpec::constant(n, true), OracleSpec::parity(n),
                            OracleSpec::random_balanced(n, 9)}) {
            auto out = f_gate_apply(tensor(reg, target), oracle);
            auto expected = tensor(ideal_oracle_apply(reg, oracle), target);
            EXPECT_LE(max_abs_diff(out, expected), 1e-15);
        }
    }
}

TEST(FGate, ComputationalBasisAction) {
    auto oracle = OracleSpec::from_bits(1, "10");
    CompositeSpace sp({2, 2});
    // |x, y> -> |x, y xor F(x)>
    for (std::size_t x = 0; x < 2; ++x) {
        for (std::size_t y = 0; y < 2; ++y) {
            auto out = f_gate_apply(StateVector::basis(sp, 2 * x + y), oracle);
            const std::size_t fy = y ^ (oracle(x) ? 1 : 0);
            EXPECT_EQ(out[2 * x + fy], Complex(1.0));
        }
    }
}

TEST(PhysicalPhi, Examples) {
    EXPECT_EQ(physical_phi_for(OracleSpec::parity(1)), std::numbers::pi);
    EXPECT_EQ(physical_phi_for(OracleSpec::from_bits(1, "10")), std::numbers::pi);
    EXPECT_EQ(physical_phi_for(OracleSpec::constant(3, false)), 2.0 * std::numbers::pi);
    EXPECT_EQ(physical_phi_for(OracleSpec::constant(3, true)), 2.0 * std::numbers::pi);
    // F(X) = x1 (the MSB) is balanced but not a uniform-phase pattern
    EXPECT_EQ(physical_phi_for(OracleSpec::from_bits(2, "0011")), std::nullopt);
}

TEST(PhysicalPhi, RealizabilityMatchesUniformPhaseSimulation) {
    // Brute force: run every atom of a two-level register through U1(pi)
    // with the cavity in (|0> - |1>)/sqrt2 and compare the register against
    // the ideal phase oracle up to a global phase.
    for (std::size_t n = 1; n <= 3; ++n) {
        auto reg = uniform_register(n);
        auto cavity = qubit(kInvSqrt2, -kInvSqrt2);
        auto s = tensor(reg, cavity);
        for (std::size_t k = 0; k < n; ++k) {
            s = apply_joint(u1_dispersive(std::numbers::pi, 2), s, {k, n});
        }
        std::vector<std::size_t> atoms(n);
        for (std::size_t k = 0; k < n; ++k) atoms[k] = k;
        auto physical = dominant_factor(s, atoms);
        for (const auto &oracle : all_balanced(n)) {
            const bool matches =
                fidelity_up_to_phase(physical, ideal_oracle_apply(reg, oracle)) > 1.0 - 1e-10;
            EXPECT_EQ(physical_phi_for(oracle).has_value(), matches) << oracle.bits();
        }
    }
}
