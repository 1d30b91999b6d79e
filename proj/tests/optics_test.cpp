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

#include "cavitydj/optics.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cavitydj/errors.hpp"
#include "test_util.hpp"

using namespace cavitydj;
using namespace cavitydj::testing;

namespace {

// Poisson tail by forward summation in long double, independent of the
// log-gamma evaluation in the library.
long double brute_tail(long double mean, std::size_t n_max) {
    long double term = std::exp(-mean);
    long double tail = 0.0L;
    for (std::size_t n = 1; n <= 400; ++n) {
        term *= mean / static_cast<long double>(n);
        if (n > n_max) tail += term;
    }
    return tail;
}

}  // namespace

TEST(CoherentState, VacuumForZeroAmplitude) {
    auto s = coherent_state(CoherentSpec{0.0, FockTruncation{3, 1e-12}});
    EXPECT_EQ(s[0], Complex(1.0));
    for (std::size_t n = 1; n < s.size(); ++n) EXPECT_EQ(s[n], Complex(0.0));
}

TEST(CoherentState, LeadingAmplitude) {
    EXPECT_NEAR(coherent_amplitude(2.0, 0).real(), 0.1353352832366127, 1e-15);
    EXPECT_NEAR(std::abs(coherent_amplitude(Complex(0.0, 2.0), 0)), 0.1353352832366127, 1e-15);
}

TEST(CoherentState, OverlapWithMirrorImage) {
    const FockTruncation t{24, 1e-12};
    auto a = coherent_state(CoherentSpec{1.0, t});
    auto b = coherent_state(CoherentSpec{-1.0, t});
    EXPECT_NEAR(a.inner(b).real(), std::exp(-2.0), 1e-8);
    EXPECT_NEAR(a.inner(b).imag(), 0.0, 1e-15);
}

TEST(CoherentState, InsufficientTruncationThrows) {
    EXPECT_THROW(coherent_state(CoherentSpec{2.0, FockTruncation{5, 1e-12}}), TruncationError);
    try {
        coherent_state(CoherentSpec{2.0, FockTruncation{5, 1e-12}});
    } catch (const TruncationError &e) {
        EXPECT_NE(std::string(e.what()).find("insufficient Fock truncation"), std::string::npos);
    }
}

TEST(CoherentState, MeanPhotonNumberAndNorm) {
    for (double a : {0.5, 1.0, 2.0, 3.0}) {
        const auto t = choose_truncation(a);
        auto s = coherent_state(CoherentSpec{a, t});
        EXPECT_NEAR(s.norm(), 1.0, 1e-12);
        EXPECT_NEAR(mean_photon_number(s), a * a, 100.0 * t.tail_epsilon * a * a);
    }
}

TEST(CatState, OddHasNoVacuumComponent) {
    for (double a : {0.3, 1.0, 2.0}) {
        auto s = cat_state(CatState{CatParity::Odd, a, choose_truncation(a)});
        EXPECT_EQ(s[0], Complex(0.0));
    }
}

TEST(CatState, SmallOddCatIsSinglePhoton) {
    const double a = 0.1;
    auto s = cat_state(CatState{CatParity::Odd, a, choose_truncation(a)});
    const double f = fidelity_up_to_phase(s, StateVector::qudit_basis(s.size(), 1));
    EXPECT_GE(f, 0.999);
    EXPECT_EQ(s.size(), 5u);
    // |alpha| / sqrt(sum over odd n <= 4 of |alpha|^{2n} / n!), 40-digit arithmetic
    EXPECT_NEAR(f, 0.99999166677083189, 1e-14);
    // untruncated closed form |alpha| / sqrt(sinh |alpha|^2), off by the dropped tail
    EXPECT_NEAR(f, 0.99999166672916616, 1e-10);
}

TEST(CatState, ParitySupportAndOrthogonality) {
    for (Complex a : {Complex(0.7), Complex(2.0), Complex(1.5)}) {
        const auto t = choose_truncation(a);
        auto even = cat_state(CatState{CatParity::Even, a, t});
        auto odd = cat_state(CatState{CatParity::Odd, a, t});
        for (std::size_t n = 0; n < t.dim(); ++n) {
            if (n % 2 == 0) EXPECT_LE(std::abs(odd[n]), 1e-12);
            else EXPECT_LE(std::abs(even[n]), 1e-12);
        }
        EXPECT_LE(std::abs(even.inner(odd)), 1e-10);
        EXPECT_NEAR(even.norm(), 1.0, 1e-12);
        EXPECT_NEAR(odd.norm(), 1.0, 1e-12);
    }
}

TEST(CatState, NormalizationConstant) {
    CatState c{CatParity::Odd, 2.0, choose_truncation(2.0)};
    EXPECT_NEAR(c.normalization(), 2.0 * (1.0 - std::exp(-8.0)), 1e-15);
    c.parity = CatParity::Even;
    EXPECT_NEAR(c.normalization(), 2.0 * (1.0 + std::exp(-8.0)), 1e-15);
    // Odd cat from the truncated sum matches (|a> - |-a>)/sqrt(N-)
    const auto t = choose_truncation(2.0);
    auto odd = cat_state(CatState{CatParity::Odd, 2.0, t});
    const double nm = std::sqrt(CatState{CatParity::Odd, 2.0, t}.normalization());
    for (std::size_t n = 1; n < t.dim(); n += 2) {
        const Complex expected = 2.0 * coherent_amplitude(2.0, n) / nm;
        EXPECT_NEAR(std::abs(odd[n] - expected), 0.0, 1e-12);
    }
}

TEST(NumberPhase, SpecialAngles) {
    EXPECT_LE(number_phase_op(0.0, 8).max_deviation(Operator::identity(8)), 0.0);
    EXPECT_LE(number_phase_op(2.0 * std::numbers::pi, 64).max_deviation(Operator::identity(64)),
              1e-12);
    EXPECT_THROW(number_phase_op(1.0, 1), DimensionError);
}

TEST(NumberPhase, PiMirrorsCoherentState) {
    const auto t = choose_truncation(2.0);
    auto a = coherent_state(CoherentSpec{2.0, t});
    auto mirrored = apply_on(number_phase_op(std::numbers::pi, t.dim()), a, 0);
    auto expected = coherent_state(CoherentSpec{-2.0, t});
    EXPECT_GE(fidelity_up_to_phase(mirrored, expected), 1.0 - 10.0 * t.tail_epsilon);
}

TEST(NumberPhase, ComposesAdditively) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> angle(-10.0, 10.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double p1 = angle(rng);
        const double p2 = angle(rng);
        auto lhs = number_phase_op(p1, 16) * number_phase_op(p2, 16);
        EXPECT_LE(lhs.max_deviation(number_phase_op(p1 + p2, 16)), 1e-13);
        EXPECT_EQ(lhs.max_offdiagonal(), 0.0);
    }
}

TEST(Truncation, MinimumForVacuum) {
    EXPECT_EQ(choose_truncation(0.0, 1e-12).n_max, 1u);
}

TEST(Truncation, AlphaTwoMatchesBruteForceTail) {
    const auto t = choose_truncation(2.0, 1e-12);
    EXPECT_EQ(t.n_max, 25u);
    EXPECT_LE(brute_tail(4.0L, t.n_max), 1e-12L);
    EXPECT_GT(brute_tail(4.0L, t.n_max - 1), 1e-12L);
    EXPECT_NEAR(poisson_tail(4.0, 25), static_cast<double>(brute_tail(4.0L, 25)), 1e-25);
}

TEST(Truncation, Monotonicity) {
    std::size_t prev = 0;
    for (double a = 0.0; a <= 4.0; a += 0.25) {
        const auto n = choose_truncation(a, 1e-10).n_max;
        EXPECT_GE(n, prev);
        prev = n;
    }
    for (double a : {0.5, 1.0, 2.5}) {
        std::size_t last = 0;
        for (double eps : {1e-3, 1e-6, 1e-9, 1e-12, 1e-14}) {
            const auto n = choose_truncation(a, eps).n_max;
            EXPECT_GE(n, last);
            last = n;
        }
    }
    EXPECT_THROW(choose_truncation(1.0, 0.0), std::invalid_argument);
    EXPECT_THROW(choose_truncation(1.0, 1.0), std::invalid_argument);
}
