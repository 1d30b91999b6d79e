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

#include "cavitydj/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "cavitydj/errors.hpp"
#include "format_real.hpp"
#include "cavitydj/optics.hpp"

namespace cavitydj {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr Complex kI{0.0, 1.0};
}  // namespace

double InteractionParams::phi() const { return phi_for_tau(tau, g, delta); }

double tau_for_phi(double phi, double g, double delta) {
    if (g == 0.0) {
        throw std::invalid_argument("coupling constant g must be non-zero");
    }
    if (delta == 0.0) {
        throw std::invalid_argument("detuning must be non-zero in the dispersive regime");
    }
    return phi * delta / (g * g);
}

double phi_for_tau(double tau, double g, double delta) {
    if (delta == 0.0) {
        throw std::invalid_argument("detuning must be non-zero in the dispersive regime");
    }
    return g * g * tau / delta;
}

Operator jc_resonant_op(double g_tau, std::size_t cavity_dim) {
    if (cavity_dim < 2) {
        throw DimensionError("cavity dimension must be >= 2");
    }
    const std::size_t d = two_level::kDim * cavity_dim;
    auto idx = [cavity_dim](std::size_t level, std::size_t n) { return level * cavity_dim + n; };
    std::vector<Complex> u(d * d);
    auto at = [&](std::size_t r, std::size_t c) -> Complex & { return u[r * d + c]; };

    at(idx(two_level::f, 0), idx(two_level::f, 0)) = 1.0;
    at(idx(two_level::e, cavity_dim - 1), idx(two_level::e, cavity_dim - 1)) = 1.0;
    for (std::size_t n = 0; n + 1 < cavity_dim; ++n) {
        const double theta = g_tau * std::sqrt(static_cast<double>(n + 1));
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        const std::size_t en = idx(two_level::e, n);
        const std::size_t fn1 = idx(two_level::f, n + 1);
        at(en, en) = c;
        at(fn1, en) = -kI * s;
        at(en, fn1) = -kI * s;
        at(fn1, fn1) = c;
    }
    return Operator::unitary(d, std::move(u));
}

StateVector jc_resonant(const StateVector &state, double g_tau, std::size_t atom,
                        std::size_t cavity) {
    const CompositeSpace &space = state.space();
    if (space.dim(atom) != two_level::kDim) {
        throw DimensionError("resonant Jaynes-Cummings evolution needs a two-level atom");
    }
    const std::size_t top = space.dim(cavity) - 1;
    double leak = 0.0;
    for (std::size_t i = 0; i < state.size(); ++i) {
        if (space.digit(i, atom) == two_level::e && space.digit(i, cavity) == top) {
            leak += std::norm(state[i]);
        }
    }
    if (leak > 1e-12) {
        throw TruncationError("Jaynes-Cummings evolution leaks out of the Fock truncation "
                              "(population " + detail::format_real(leak) + " on |e, n_max>)");
    }
    return apply_joint(jc_resonant_op(g_tau, space.dim(cavity)), state, {atom, cavity});
}

Operator u1_dispersive(double phi, std::size_t cavity_dim) {
    if (cavity_dim < 2) {
        throw DimensionError("cavity dimension must be >= 2");
    }
    std::vector<Complex> diag(two_level::kDim * cavity_dim);
    for (std::size_t n = 0; n < cavity_dim; ++n) {
        const double nd = static_cast<double>(n);
        diag[two_level::e * cavity_dim + n] = unit_phase(-phi * (nd + 1.0));
        diag[two_level::f * cavity_dim + n] = unit_phase(phi * nd);
    }
    return Operator::diagonal_unitary(diag);
}

Operator u2_dispersive(double phi, std::size_t cavity_dim, std::size_t atom_dim) {
    if (cavity_dim < 2) {
        throw DimensionError("cavity dimension must be >= 2");
    }
    if (atom_dim != 2 && atom_dim != three_level::kDim) {
        throw DimensionError("u2_dispersive acts on a {f, g} or {f, g, e} atom");
    }
    std::vector<Complex> diag(atom_dim * cavity_dim, Complex{1.0, 0.0});
    for (std::size_t n = 0; n < cavity_dim; ++n) {
        diag[three_level::f * cavity_dim + n] = unit_phase(phi * static_cast<double>(n));
    }
    return Operator::diagonal_unitary(diag);
}

Operator hadamard() {
    return Operator::unitary(2, {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2});
}

Operator three_level_hadamard() {
    std::vector<Complex> u(9);
    u[three_level::f * 3 + three_level::f] = kInvSqrt2;
    u[three_level::f * 3 + three_level::g] = kInvSqrt2;
    u[three_level::g * 3 + three_level::f] = kInvSqrt2;
    u[three_level::g * 3 + three_level::g] = -kInvSqrt2;
    u[three_level::e * 3 + three_level::e] = 1.0;
    return Operator::unitary(3, std::move(u));
}

Operator ramsey_r1(Complex c_f, Complex c_g) {
    const double n = std::norm(c_f) + std::norm(c_g);
    if (std::abs(n - 1.0) > kTolerance) {
        throw std::invalid_argument("Ramsey coefficients must satisfy |c_f|^2 + |c_g|^2 = 1");
    }
    return Operator::unitary(2, {c_g, c_f, -std::conj(c_f), std::conj(c_g)});
}

Operator ramsey_r2() {
    return Operator::unitary(2, {kInvSqrt2, -kI * kInvSqrt2, -kI * kInvSqrt2, kInvSqrt2});
}

}  // namespace cavitydj
