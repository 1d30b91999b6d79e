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
 * End-to-end procedures: cavity |-> preparation (Fock and cat variants) and
 * the Deutsch / Deutsch-Jozsa runs in three execution modes.
 *
 * Modes:
 *   ideal_gate            n register qubits plus one target qubit, the
 *                         oracle applied as the F-gate |x,y> -> |x, y^F(x)>.
 *   two_level_fock        n two-level atoms and a cavity holding
 *                         (|0> - |1>)/sqrt 2 in a two-state Fock basis,
 *                         oracle realized by the dispersive U1 evolution.
 *   three_level_coherent  n three-level atoms and a cavity holding an odd
 *                         cat state, oracle realized by the effective U2.
 *
 * The physical modes fall back to an ideal phase oracle on the atoms for
 * tables that one uniform dispersive phase cannot realize, and say so in
 * the report.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "cavitydj/hilbert.hpp"
#include "cavitydj/optics.hpp"
#include "cavitydj/oracle.hpp"

namespace cavitydj {

enum class ModeKind { IdealGate, TwoLevelFock, ThreeLevelCoherent };

std::string_view to_string(ModeKind mode);

/// Accepts canonical names ("ideal_gate", ...) and the short CLI spellings
/// ("ideal", "two-level", "three-level", "coherent").
std::optional<ModeKind> parse_mode(std::string_view name);

inline constexpr std::size_t kMaxBitsGateModes = 10;
inline constexpr std::size_t kMaxBitsCoherent = 8;

class ExecutionMode {
  public:
    static ExecutionMode ideal_gate();
    static ExecutionMode two_level_fock();
    static ExecutionMode three_level_coherent(Complex alpha = kDefaultAlpha,
                                              double tail_epsilon = kDefaultTailEpsilon);
    /// Explicit truncation; throws TruncationError if it is too small for alpha.
    static ExecutionMode three_level_coherent(Complex alpha, const FockTruncation &truncation);

    [[nodiscard]] ModeKind kind() const { return kind_; }
    /// Field amplitude; throws std::logic_error outside three_level_coherent.
    [[nodiscard]] Complex alpha() const;
    [[nodiscard]] const FockTruncation &truncation() const;
    [[nodiscard]] std::size_t max_bits() const;

  private:
    explicit ExecutionMode(ModeKind kind) : kind_(kind) {}

    ModeKind kind_;
    std::optional<Complex> alpha_;
    std::optional<FockTruncation> truncation_;
};

// ---------------------------------------------------------------------------
// Cavity preparation
// ---------------------------------------------------------------------------

struct FockPreparation {
    StateVector joint;   ///< atom A0 (x) cavity after the pulse
    StateVector cavity;  ///< cavity factor, up to a global phase
    double atom_cavity_purity;
};

/// Sends `atom` (two-level, e/f) through a vacuum cavity of `cavity_dim`
/// levels for a resonant pi/2 pulse. No purity requirement is imposed.
FockPreparation jc_prepare_cavity(const StateVector &atom, std::size_t cavity_dim = 2);

/// Nominal preparation of (|0> - |1>)/sqrt 2 from the atom state
/// (-i|e> + |f>)/sqrt 2. Throws NumericInvariantError if the atom does not
/// factor out (purity below 1 - 1e-10).
StateVector prepare_minus_fock();

/// Joint state of atom B (f -> 0, g -> 1) and the cavity right before B is
/// detected: cavity |-alpha>, B through R1, U2(pi), R2.
StateVector cat_pre_detection_state(Complex c_f, Complex c_g, Complex alpha,
                                    const FockTruncation &truncation);

/// Detection level (three_level::f or three_level::g) that heralds the odd
/// cat for these Ramsey coefficients: f when c_f = i c_g, g when
/// c_f = -i c_g. Throws std::invalid_argument for any other pair.
std::size_t cat_target_level(Complex c_f, Complex c_g);

struct CatPreparation {
    StateVector cavity;  ///< cavity state conditioned on the detected level
    std::size_t detected_level;
    std::size_t target_level;
    double postselect_probability;  ///< Born probability of the target level
    bool success;
    double fidelity_vs_odd_cat;
    FockTruncation truncation;
};

/// Odd cat preparation by post-selection on atom B. An untargeted detection
/// is reported with success == false; retry with another seed.
CatPreparation prepare_odd_cat(Complex c_f, Complex c_g, Complex alpha, std::uint64_t seed,
                               double tail_epsilon = kDefaultTailEpsilon);
CatPreparation prepare_odd_cat(Complex c_f, Complex c_g, Complex alpha, std::uint64_t seed,
                               const FockTruncation &truncation);

struct PostselectionSample {
    std::size_t shots;
    std::size_t hits;
    double empirical_rate;
    double analytic_probability;
};

/// Repeats the detection of atom B `shots` times with per-shot derived seeds.
PostselectionSample sample_postselection(Complex c_f, Complex c_g, Complex alpha,
                                         std::uint64_t seed, std::size_t shots,
                                         double tail_epsilon = kDefaultTailEpsilon);
PostselectionSample sample_postselection(Complex c_f, Complex c_g, Complex alpha,
                                         std::uint64_t seed, std::size_t shots,
                                         const FockTruncation &truncation);

// ---------------------------------------------------------------------------
// Algorithm runs
// ---------------------------------------------------------------------------

enum class OraclePath { FGate, DispersiveSchedule, IdealFallback };

std::string_view to_string(OraclePath path);

struct RunReport {
    ModeKind mode;
    std::optional<Complex> alpha;
    std::optional<FockTruncation> truncation;
    std::uint64_t seed;

    std::size_t n;
    OracleClass oracle_class;
    std::size_t oracle_ones;
    bool oracle_cavity_realizable;
    OraclePath oracle_path;
    std::optional<double> phi;

    /// Probability of each register outcome, indexed by X (A1 = MSB).
    std::vector<double> distribution;
    double p_all_zeros;
    OracleClass decision;

    double register_cavity_purity;
    double cavity_final_fidelity_vs_expected;
    /// Population left on the inert e level (three-level mode).
    double inactive_level_population;
    /// One register outcome drawn from the final state with `seed`.
    std::size_t sampled_outcome;
    std::size_t cat_prep_attempts;

    StateVector pre_hadamard_register;  ///< register after the oracle
    StateVector register_state;         ///< register after the final H layer
    StateVector cavity_state;           ///< final cavity (or target qubit) factor
    StateVector expected_cavity;
};

/// Decision rule on the all-zeros probability.
inline OracleClass classify(double p_all_zeros) {
    return p_all_zeros > 0.5 ? OracleClass::Constant : OracleClass::Balanced;
}

/// Deutsch run; requires oracle.n() == 1.
RunReport run_deutsch(const OracleSpec &oracle, const ExecutionMode &mode, std::uint64_t seed);

/// Deutsch-Jozsa run for n <= mode.max_bits().
RunReport run_deutsch_jozsa(const OracleSpec &oracle, const ExecutionMode &mode,
                            std::uint64_t seed);

}  // namespace cavitydj
