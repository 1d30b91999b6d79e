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
 * Atom-field and single-atom unitaries.
 *
 * Atom level encodings (flat index within the atom subsystem):
 *   two-level atom    e -> 0, f -> 1
 *   three-level atom  f -> 0, g -> 1, e -> 2 (e is inert and never populated)
 *
 * Joint atom-cavity operators are laid out as |atom, n> with the atom as the
 * more significant factor, matching apply_joint(op, state, {atom, cavity}).
 */
#pragma once

#include <cstddef>

#include "cavitydj/hilbert.hpp"

namespace cavitydj {

namespace two_level {
inline constexpr std::size_t kDim = 2;
inline constexpr std::size_t e = 0;
inline constexpr std::size_t f = 1;
}  // namespace two_level

namespace three_level {
inline constexpr std::size_t kDim = 3;
inline constexpr std::size_t f = 0;
inline constexpr std::size_t g = 1;
inline constexpr std::size_t e = 2;
}  // namespace three_level

/// Dispersive interaction knobs. Angular quantities are in rad/s, tau in s.
struct InteractionParams {
    double g = 0.0;
    double delta = 0.0;
    double tau = 0.0;

    /// Accumulated dispersive phase g^2 tau / delta.
    [[nodiscard]] double phi() const;
};

/// tau = phi * delta / g^2. Throws std::invalid_argument if g == 0 or delta == 0.
double tau_for_phi(double phi, double g, double delta);

/// phi = g^2 tau / delta. Throws std::invalid_argument if delta == 0.
double phi_for_tau(double tau, double g, double delta);

/// Resonant Jaynes-Cummings propagator for pulse area g*tau on a two-level
/// atom and a cavity of dimension `cavity_dim`. Each manifold
/// {|e,n>, |f,n+1>} rotates by g*tau*sqrt(n+1); |f,0> is fixed. The state
/// |e, n_max> has no partner inside the truncation and is left unchanged.
Operator jc_resonant_op(double g_tau, std::size_t cavity_dim);

/// Applies jc_resonant_op on (atom, cavity). Throws TruncationError if the
/// input puts more than 1e-12 population on |e, n_max>, whose evolution the
/// truncated basis cannot represent.
StateVector jc_resonant(const StateVector &state, double g_tau, std::size_t atom,
                        std::size_t cavity);

/// Dispersive two-level evolution:
///   |e,n> -> e^{-i phi (n+1)} |e,n>,   |f,n> -> e^{i phi n} |f,n>.
Operator u1_dispersive(double phi, std::size_t cavity_dim);

/// Effective three-level evolution: |f,n> -> e^{i phi n} |f,n>, g and e untouched.
/// With atom_dim == 2 the inert e level is dropped and the atom is {f, g}.
Operator u2_dispersive(double phi, std::size_t cavity_dim,
                       std::size_t atom_dim = three_level::kDim);

/// (1/sqrt 2) [[1, 1], [1, -1]].
Operator hadamard();

/// Hadamard on {f, g} of a three-level atom, identity on e.
Operator three_level_hadamard();

/// Ramsey rotation [[c_g, c_f], [-c_f*, c_g*]] on {f, g} (f is row 0).
/// Throws std::invalid_argument unless |c_f|^2 + |c_g|^2 = 1 within 1e-10.
Operator ramsey_r1(Complex c_f, Complex c_g);

/// (1/sqrt 2) [[1, -i], [-i, 1]] on {f, g}.
Operator ramsey_r2();

}  // namespace cavitydj
