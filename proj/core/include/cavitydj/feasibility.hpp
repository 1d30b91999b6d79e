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
 * Timing budget of a cavity run against atomic and cavity lifetimes.
 */
#pragma once

#include <cstddef>
#include <numbers>
#include <string_view>

namespace cavitydj {

struct HardwareParams {
    double g = 2.0 * std::numbers::pi * 25e3;        ///< coupling, rad/s
    double delta = 2.0 * std::numbers::pi * 100e3;   ///< detuning, rad/s
    double radiative_time = 1e-2;                    ///< s
    double cavity_damping_time = 1e-2;               ///< s, short end of 10-100 ms

    /// Throws std::invalid_argument unless every field is strictly positive.
    void validate() const;
};

enum class Verdict { Feasible, Marginal, Infeasible };

std::string_view to_string(Verdict v);

/// Both margins must exceed this for a feasible verdict.
inline constexpr double kFeasibleMargin = 10.0;
/// Both margins must exceed this for a marginal verdict.
inline constexpr double kMarginalMargin = 1.0;

struct FeasibilityReport {
    double phi;
    double tau_per_atom;
    double prep_pulse_time;  ///< resonant pi/2 pulse preparing the cavity
    std::size_t n_atoms;
    double total_time;
    double radiative_margin;  ///< radiative_time / total_time
    double damping_margin;    ///< cavity_damping_time / total_time
    Verdict verdict;
};

/// total_time = n_atoms * phi * delta / g^2 + (pi/2) / g.
FeasibilityReport feasibility_report(const HardwareParams &hw, double phi, std::size_t n_atoms);

/// Largest atom count with a feasible verdict, 0 if even one atom is not.
std::size_t max_feasible_atoms(const HardwareParams &hw, double phi);

}  // namespace cavitydj
