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

#include "cavitydj/feasibility.hpp"

#include <cmath>
#include <stdexcept>

#include "cavitydj/dynamics.hpp"

namespace cavitydj {

void HardwareParams::validate() const {
    if (!(g > 0.0) || !(delta > 0.0) || !(radiative_time > 0.0) ||
        !(cavity_damping_time > 0.0)) {
        throw std::invalid_argument("hardware parameters must all be strictly positive");
    }
}

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::Feasible:
        return "feasible";
    case Verdict::Marginal:
        return "marginal";
    case Verdict::Infeasible:
        return "infeasible";
    }
    return "unknown";
}

FeasibilityReport feasibility_report(const HardwareParams &hw, double phi, std::size_t n_atoms) {
    hw.validate();
    if (n_atoms < 1) {
        throw std::invalid_argument("feasibility needs at least one atom");
    }
    if (!(phi >= 0.0)) {
        throw std::invalid_argument("dispersive phase must be non-negative");
    }
    FeasibilityReport r{};
    r.phi = phi;
    r.tau_per_atom = tau_for_phi(phi, hw.g, hw.delta);
    r.prep_pulse_time = (std::numbers::pi / 2.0) / hw.g;
    r.n_atoms = n_atoms;
    r.total_time = static_cast<double>(n_atoms) * r.tau_per_atom + r.prep_pulse_time;
    r.radiative_margin = hw.radiative_time / r.total_time;
    r.damping_margin = hw.cavity_damping_time / r.total_time;
    const double worst = std::min(r.radiative_margin, r.damping_margin);
    if (worst > kFeasibleMargin) {
        r.verdict = Verdict::Feasible;
    } else if (worst > kMarginalMargin) {
        r.verdict = Verdict::Marginal;
    } else {
        r.verdict = Verdict::Infeasible;
    }
    return r;
}

std::size_t max_feasible_atoms(const HardwareParams &hw, double phi) {
    hw.validate();
    const double tau = tau_for_phi(phi, hw.g, hw.delta);
    const double prep = (std::numbers::pi / 2.0) / hw.g;
    const double budget = std::min(hw.radiative_time, hw.cavity_damping_time) / kFeasibleMargin;
    if (tau <= 0.0) {
        throw std::invalid_argument("max_feasible_atoms needs a positive interaction time");
    }
    if (prep + tau >= budget) {
        return 0;
    }
    // Closed-form estimate, then settle exactly against the report's strict test.
    auto n = static_cast<std::size_t>(std::floor((budget - prep) / tau));
    while (n > 0 && feasibility_report(hw, phi, n).verdict != Verdict::Feasible) {
        --n;
    }
    while (feasibility_report(hw, phi, n + 1).verdict == Verdict::Feasible) {
        ++n;
    }
    return n;
}

}  // namespace cavitydj
