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

#include "cavitydj/protocols.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "cavitydj/dynamics.hpp"
#include "cavitydj/errors.hpp"
#include "cavitydj/random.hpp"

namespace cavitydj {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr Complex kI{0.0, 1.0};
constexpr std::size_t kMaxCatAttempts = 64;

StateVector minus_qubit() { return StateVector::qudit({kInvSqrt2, -kInvSqrt2}); }

}  // namespace

std::string_view to_string(ModeKind mode) {
    switch (mode) {
    case ModeKind::IdealGate:
        return "ideal_gate";
    case ModeKind::TwoLevelFock:
        return "two_level_fock";
    case ModeKind::ThreeLevelCoherent:
        return "three_level_coherent";
    }
    return "unknown";
}

std::optional<ModeKind> parse_mode(std::string_view name) {
    if (name == "ideal" || name == "ideal_gate" || name == "ideal-gate") {
        return ModeKind::IdealGate;
    }
    if (name == "two-level" || name == "two_level" || name == "two_level_fock" ||
        name == "fock") {
        return ModeKind::TwoLevelFock;
    }
    if (name == "three-level" || name == "three_level" || name == "three_level_coherent" ||
        name == "coherent") {
        return ModeKind::ThreeLevelCoherent;
    }
    return std::nullopt;
}

std::string_view to_string(OraclePath path) {
    switch (path) {
    case OraclePath::FGate:
        return "f_gate";
    case OraclePath::DispersiveSchedule:
        return "dispersive_schedule";
    case OraclePath::IdealFallback:
        return "ideal_fallback";
    }
    return "unknown";
}

ExecutionMode ExecutionMode::ideal_gate() { return ExecutionMode(ModeKind::IdealGate); }

ExecutionMode ExecutionMode::two_level_fock() { return ExecutionMode(ModeKind::TwoLevelFock); }

ExecutionMode ExecutionMode::three_level_coherent(Complex alpha, double tail_epsilon) {
    if (std::abs(alpha) == 0.0) {
        throw std::invalid_argument("coherent mode needs a non-zero field amplitude");
    }
    ExecutionMode m(ModeKind::ThreeLevelCoherent);
    m.alpha_ = alpha;
    m.truncation_ = choose_truncation(alpha, tail_epsilon);
    return m;
}

ExecutionMode ExecutionMode::three_level_coherent(Complex alpha, const FockTruncation &truncation) {
    if (std::abs(alpha) == 0.0) {
        throw std::invalid_argument("coherent mode needs a non-zero field amplitude");
    }
    check_truncation(alpha, truncation);
    ExecutionMode m(ModeKind::ThreeLevelCoherent);
    m.alpha_ = alpha;
    m.truncation_ = truncation;
    return m;
}

Complex ExecutionMode::alpha() const {
    if (!alpha_) {
        throw std::logic_error("field amplitude is only defined in three_level_coherent mode");
    }
    return *alpha_;
}

const FockTruncation &ExecutionMode::truncation() const {
    if (!truncation_) {
        throw std::logic_error("Fock truncation is only defined in three_level_coherent mode");
    }
    return *truncation_;
}

std::size_t ExecutionMode::max_bits() const {
    return kind_ == ModeKind::ThreeLevelCoherent ? kMaxBitsCoherent : kMaxBitsGateModes;
}

// ---------------------------------------------------------------------------
// Cavity preparation
// ---------------------------------------------------------------------------

FockPreparation jc_prepare_cavity(const StateVector &atom, std::size_t cavity_dim) {
    if (atom.space().num_subsystems() != 1 || atom.space().dim(0) != two_level::kDim) {
        throw DimensionError("cavity preparation needs a single two-level atom");
    }
    const StateVector vacuum = StateVector::qudit_basis(cavity_dim, 0);
    StateVector joint = jc_resonant(tensor(atom, vacuum), std::numbers::pi / 2.0, 0, 1);
    const double purity = reduced_purity(joint, 1);
    StateVector cavity = dominant_factor(joint, {1});
    return FockPreparation{std::move(joint), std::move(cavity), purity};
}

StateVector prepare_minus_fock() {
    std::vector<Complex> atom(2);
    atom[two_level::e] = -kI * kInvSqrt2;
    atom[two_level::f] = kInvSqrt2;
    auto prep = jc_prepare_cavity(StateVector::qudit(std::move(atom)));
    if (std::abs(prep.atom_cavity_purity - 1.0) > kTolerance) {
        throw NumericInvariantError("cavity preparation left the atom entangled with the field");
    }
    return prep.cavity;
}

StateVector cat_pre_detection_state(Complex c_f, Complex c_g, Complex alpha,
                                    const FockTruncation &truncation) {
    const StateVector b_in = StateVector::qudit_basis(2, three_level::g);
    const StateVector b = apply_on(ramsey_r1(c_f, c_g), b_in, 0);
    const StateVector cavity = coherent_state(CoherentSpec{-alpha, truncation});
    StateVector joint = tensor(b, cavity);
    joint = apply_joint(u2_dispersive(std::numbers::pi, truncation.dim(), 2), joint, {0, 1});
    return apply_on(ramsey_r2(), joint, 0);
}

std::size_t cat_target_level(Complex c_f, Complex c_g) {
    // R1 sends |g> to c_f |f> + conj(c_g) |g>.
    const Complex a_g = std::conj(c_g);
    if (std::abs(c_f - kI * a_g) <= kTolerance) {
        return three_level::f;
    }
    if (std::abs(c_f + kI * a_g) <= kTolerance) {
        return three_level::g;
    }
    throw std::invalid_argument(
        "Ramsey coefficients herald no odd cat: need c_f = i c_g (detect f) or c_f = -i c_g "
        "(detect g)");
}

CatPreparation prepare_odd_cat(Complex c_f, Complex c_g, Complex alpha, std::uint64_t seed,
                               double tail_epsilon) {
    return prepare_odd_cat(c_f, c_g, alpha, seed, choose_truncation(alpha, tail_epsilon));
}

CatPreparation prepare_odd_cat(Complex c_f, Complex c_g, Complex alpha, std::uint64_t seed,
                               const FockTruncation &trunc) {
    const std::size_t target = cat_target_level(c_f, c_g);
    const StateVector pre = cat_pre_detection_state(c_f, c_g, alpha, trunc);
    const double p_target = marginal_probabilities(pre, 0)[target];

    auto outcome = measure_subsystem(pre, 0, seed);
    StateVector cavity = dominant_factor(outcome.post_state, {1});
    const StateVector odd = cat_state(CatState{CatParity::Odd, alpha, trunc});
    const double fid = fidelity_up_to_phase(cavity, odd);
    return CatPreparation{std::move(cavity),
                          outcome.basis_label,
                          target,
                          p_target,
                          outcome.basis_label == target,
                          fid,
                          trunc};
}

PostselectionSample sample_postselection(Complex c_f, Complex c_g, Complex alpha,
                                         std::uint64_t seed, std::size_t shots,
                                         double tail_epsilon) {
    return sample_postselection(c_f, c_g, alpha, seed, shots,
                                choose_truncation(alpha, tail_epsilon));
}

PostselectionSample sample_postselection(Complex c_f, Complex c_g, Complex alpha,
                                         std::uint64_t seed, std::size_t shots,
                                         const FockTruncation &trunc) {
    const std::size_t target = cat_target_level(c_f, c_g);
    const StateVector pre = cat_pre_detection_state(c_f, c_g, alpha, trunc);
    const double p_target = marginal_probabilities(pre, 0)[target];

    std::size_t hits = 0;
    for (std::size_t s = 0; s < shots; ++s) {
        if (measure_subsystem(pre, 0, derive_seed(seed, s)).basis_label == target) {
            ++hits;
        }
    }
    const double rate = shots ? static_cast<double>(hits) / static_cast<double>(shots) : 0.0;
    return PostselectionSample{shots, hits, rate, p_target};
}

// ---------------------------------------------------------------------------
// Algorithm runs
// ---------------------------------------------------------------------------

namespace {

// Maps a state over n atoms (levels 0 and 1 are the qubit states, anything
// above is inactive) onto an n-qubit register.
StateVector qubit_register(const StateVector &atoms) {
    const CompositeSpace &space = atoms.space();
    const std::size_t n = space.num_subsystems();
    CompositeSpace qubits(std::vector<std::size_t>(n, 2));
    std::vector<Complex> amps(qubits.total_dim());
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        std::size_t x = 0;
        bool active = true;
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t d = space.digit(i, k);
            if (d > 1) {
                active = false;
                break;
            }
            x = (x << 1) | d;
        }
        if (active) {
            amps[x] = atoms[i];
        }
    }
    return StateVector::normalized(qubits, std::move(amps));
}

std::vector<std::size_t> first_n(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t k = 0; k < n; ++k) {
        v[k] = k;
    }
    return v;
}

// (-1)^{F(X)} on the first n subsystems, X read from levels 0/1.
StateVector apply_register_phase(const StateVector &state, const OracleSpec &oracle) {
    const CompositeSpace &space = state.space();
    const std::size_t n = oracle.n();
    std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
    for (std::size_t i = 0; i < amps.size(); ++i) {
        std::size_t x = 0;
        bool active = true;
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t d = space.digit(i, k);
            if (d > 1) {
                active = false;
                break;
            }
            x = (x << 1) | d;
        }
        if (active && oracle(x)) {
            amps[i] = -amps[i];
        }
    }
    return StateVector::from_amplitudes(space, std::move(amps));
}

StateVector product_of(const StateVector &single, std::size_t copies) {
    StateVector out = single;
    for (std::size_t k = 1; k < copies; ++k) {
        out = tensor(out, single);
    }
    return out;
}

struct Analysis {
    std::vector<double> distribution;
    double inactive = 0.0;
};

Analysis analyze_register(const StateVector &state, std::size_t n) {
    const CompositeSpace &space = state.space();
    Analysis a;
    a.distribution.assign(std::size_t{1} << n, 0.0);
    for (std::size_t i = 0; i < state.size(); ++i) {
        const double p = std::norm(state[i]);
        std::size_t x = 0;
        bool active = true;
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t d = space.digit(i, k);
            if (d > 1) {
                active = false;
                break;
            }
            x = (x << 1) | d;
        }
        if (active) {
            a.distribution[x] += p;
        } else {
            a.inactive += p;
        }
    }
    return a;
}

std::size_t sample_register(StateVector state, std::size_t n, std::uint64_t seed) {
    std::size_t x = 0;
    for (std::size_t k = 0; k < n; ++k) {
        auto m = measure_subsystem(state, k, derive_seed(seed, k));
        x = (x << 1) | (m.basis_label & 1);
        state = std::move(m.post_state);
    }
    return x;
}

double fidelity_with_reduced(const StateVector &state, std::size_t subsystem,
                             const StateVector &expected) {
    const Operator rho = reduced_density(state, subsystem);
    Complex s = 0.0;
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        for (std::size_t j = 0; j < rho.dim(); ++j) {
            s += std::conj(expected[i]) * rho(i, j) * expected[j];
        }
    }
    return std::sqrt(std::max(0.0, std::min(1.0, s.real())));
}

struct Evolution {
    StateVector before_h;
    StateVector final_state;
    StateVector expected_cavity;
    OraclePath path;
    std::size_t cat_attempts = 0;
};

Evolution evolve_ideal(const OracleSpec &oracle) {
    const std::size_t n = oracle.n();
    CompositeSpace space(std::vector<std::size_t>(n + 1, 2));
    StateVector s = StateVector::basis(space, 1);  // |0...0>|1>
    const Operator h = hadamard();
    for (std::size_t k = 0; k <= n; ++k) {
        s = apply_on(h, s, k);
    }
    s = f_gate_apply(s, oracle);
    StateVector before = s;
    for (std::size_t k = 0; k < n; ++k) {
        s = apply_on(h, s, k);
    }
    return Evolution{std::move(before), std::move(s), minus_qubit(), OraclePath::FGate};
}

Evolution evolve_two_level(const OracleSpec &oracle, const std::optional<double> &phi) {
    const std::size_t n = oracle.n();
    std::vector<Complex> atom(2);
    atom[two_level::e] = kInvSqrt2;
    atom[two_level::f] = kInvSqrt2;
    const StateVector cavity = prepare_minus_fock();
    StateVector s = tensor(product_of(StateVector::qudit(std::move(atom)), n), cavity);

    OraclePath path = OraclePath::IdealFallback;
    StateVector expected = minus_qubit();
    if (phi) {
        const Operator u = u1_dispersive(*phi, cavity.size());
        for (std::size_t k = 0; k < n; ++k) {
            s = apply_joint(u, s, {k, n});
        }
        path = OraclePath::DispersiveSchedule;
        if (std::abs(*phi - std::numbers::pi) < 1e-12) {
            // (|0> - (-1)^n |1>)/sqrt 2
            const double sign = (n % 2 == 0) ? -1.0 : 1.0;
            expected = StateVector::qudit({kInvSqrt2, sign * kInvSqrt2});
        }
    } else {
        s = apply_register_phase(s, oracle);
    }
    StateVector before = s;
    const Operator h = hadamard();
    for (std::size_t k = 0; k < n; ++k) {
        s = apply_on(h, s, k);
    }
    return Evolution{std::move(before), std::move(s), std::move(expected), path};
}

Evolution evolve_three_level(const OracleSpec &oracle, const std::optional<double> &phi,
                             const ExecutionMode &mode, std::uint64_t seed) {
    const std::size_t n = oracle.n();
    const Complex alpha = mode.alpha();
    const FockTruncation &trunc = mode.truncation();

    // Herald the odd cat on f: c_f = i c_g.
    const Complex c_g = kInvSqrt2;
    const Complex c_f = kI * kInvSqrt2;
    const std::uint64_t prep_seed = derive_seed(seed, 0xCA7);
    std::optional<CatPreparation> prep;
    std::size_t attempts = 0;
    while (attempts < kMaxCatAttempts) {
        auto p = prepare_odd_cat(c_f, c_g, alpha, derive_seed(prep_seed, attempts), trunc);
        ++attempts;
        if (p.success) {
            prep = std::move(p);
            break;
        }
    }
    if (!prep) {
        throw NumericInvariantError("odd cat post-selection failed " +
                                    std::to_string(kMaxCatAttempts) + " times");
    }

    std::vector<Complex> atom(three_level::kDim);
    atom[three_level::f] = kInvSqrt2;
    atom[three_level::g] = kInvSqrt2;
    StateVector s = tensor(product_of(StateVector::qudit(std::move(atom)), n), prep->cavity);

    OraclePath path = OraclePath::IdealFallback;
    if (phi) {
        const Operator u = u2_dispersive(*phi, prep->truncation.dim());
        for (std::size_t k = 0; k < n; ++k) {
            s = apply_joint(u, s, {k, n});
        }
        path = OraclePath::DispersiveSchedule;
    } else {
        s = apply_register_phase(s, oracle);
    }
    StateVector before = s;
    const Operator h = three_level_hadamard();
    for (std::size_t k = 0; k < n; ++k) {
        s = apply_on(h, s, k);
    }
    StateVector expected = cat_state(CatState{CatParity::Odd, alpha, prep->truncation});
    return Evolution{std::move(before), std::move(s), std::move(expected), path, attempts};
}

}  // namespace

RunReport run_deutsch_jozsa(const OracleSpec &oracle, const ExecutionMode &mode,
                            std::uint64_t seed) {
    const std::size_t n = oracle.n();
    if (n > mode.max_bits()) {
        throw std::invalid_argument("register of " + std::to_string(n) + " atoms exceeds the " +
                                    std::string(to_string(mode.kind())) + " maximum of " +
                                    std::to_string(mode.max_bits()));
    }
    const std::optional<double> phi = physical_phi_for(oracle);

    Evolution ev = [&] {
        switch (mode.kind()) {
        case ModeKind::IdealGate:
            return evolve_ideal(oracle);
        case ModeKind::TwoLevelFock:
            return evolve_two_level(oracle, phi);
        case ModeKind::ThreeLevelCoherent:
            break;
        }
        return evolve_three_level(oracle, phi, mode, seed);
    }();

    const std::size_t cavity = n;
    Analysis a = analyze_register(ev.final_state, n);
    const double p0 = a.distribution[0];
    const auto atoms = first_n(n);

    std::optional<Complex> alpha;
    std::optional<FockTruncation> trunc;
    if (mode.kind() == ModeKind::ThreeLevelCoherent) {
        alpha = mode.alpha();
        trunc = mode.truncation();
    }

    return RunReport{
        mode.kind(),
        alpha,
        trunc,
        seed,
        n,
        oracle.oracle_class(),
        oracle.ones(),
        phi.has_value(),
        ev.path,
        ev.path == OraclePath::DispersiveSchedule ? phi : std::nullopt,
        std::move(a.distribution),
        p0,
        classify(p0),
        reduced_purity(ev.final_state, cavity),
        fidelity_with_reduced(ev.final_state, cavity, ev.expected_cavity),
        a.inactive,
        sample_register(ev.final_state, n, seed),
        ev.cat_attempts,
        qubit_register(dominant_factor(ev.before_h, atoms)),
        qubit_register(dominant_factor(ev.final_state, atoms)),
        dominant_factor(ev.final_state, {cavity}),
        ev.expected_cavity,
    };
}

RunReport run_deutsch(const OracleSpec &oracle, const ExecutionMode &mode, std::uint64_t seed) {
    if (oracle.n() != 1) {
        throw OracleError("the Deutsch run takes a one-bit oracle");
    }
    return run_deutsch_jozsa(oracle, mode, seed);
}

}  // namespace cavitydj
