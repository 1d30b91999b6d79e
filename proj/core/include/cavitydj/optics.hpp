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
 * Single-mode field states on a truncated Fock basis {|0>, ..., |n_max>}.
 *
 * Coherent and cat states are built from their closed-form number-state
 * amplitudes and renormalized on the truncated space. A truncation is
 * admissible for a given amplitude when the discarded Poisson mass beyond
 * n_max is at most `tail_epsilon`.
 */
#pragma once

#include <cstddef>

#include "cavitydj/hilbert.hpp"

namespace cavitydj {

inline constexpr double kDefaultTailEpsilon = 1e-12;

/// Field amplitude used by protocol runs unless configured otherwise.
inline constexpr double kDefaultAlpha = 2.0;

struct FockTruncation {
    std::size_t n_max = 1;
    double tail_epsilon = kDefaultTailEpsilon;

    [[nodiscard]] std::size_t dim() const { return n_max + 1; }
};

struct CoherentSpec {
    Complex alpha;
    FockTruncation truncation;
};

enum class CatParity { Even, Odd };

struct CatState {
    CatParity parity = CatParity::Odd;
    Complex alpha;
    FockTruncation truncation;

    /// N+- = 2 (1 +- exp(-2|alpha|^2)), the untruncated normalization.
    [[nodiscard]] double normalization() const;
};

/// Poisson mass sum_{n > n_max} e^{-m} m^n / n! for mean photon number m.
double poisson_tail(double mean_photons, std::size_t n_max);

/// Smallest n_max >= 1 with poisson_tail(|alpha|^2, n_max) <= tail_epsilon.
FockTruncation choose_truncation(Complex alpha, double tail_epsilon = kDefaultTailEpsilon);

/// Throws TruncationError when `t` leaves more than t.tail_epsilon of the
/// photon-number distribution of |alpha> outside the space.
void check_truncation(Complex alpha, const FockTruncation &t);

/// e^{-|alpha|^2/2} alpha^n / sqrt(n!), without renormalization.
Complex coherent_amplitude(Complex alpha, std::size_t n);

/// Throws TruncationError("insufficient Fock truncation") if the tail bound fails.
StateVector coherent_state(const CoherentSpec &spec);

/// (|alpha> +- |-alpha>) renormalized on the truncated space.
StateVector cat_state(const CatState &cat);

/// diag(e^{i phi n}), n = 0 .. dim-1.
Operator number_phase_op(double phi, std::size_t dim);

/// <a^dag a> of a single-mode state.
double mean_photon_number(const StateVector &field);

/// exp(i * angle) with exact results at integer multiples of pi/2.
Complex unit_phase(double angle);

}  // namespace cavitydj
