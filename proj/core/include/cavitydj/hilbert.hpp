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
 * Dense state vectors and operators over a composite (tensor-product) space.
 *
 * Basis ordering is lexicographic over subsystem indices with subsystem 0 the
 * most significant digit, so a state of atoms A1..An and a cavity C is laid
 * out as |a1 a2 ... an c>.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace cavitydj {

using Complex = std::complex<double>;

/// Default tolerance for norm, unitarity and equality checks.
inline constexpr double kTolerance = 1e-10;

class CompositeSpace {
  public:
    /// Throws DimensionError if dims is empty or any entry is < 2.
    explicit CompositeSpace(std::vector<std::size_t> dims);

    [[nodiscard]] const std::vector<std::size_t> &dims() const { return dims_; }
    [[nodiscard]] std::size_t num_subsystems() const { return dims_.size(); }
    [[nodiscard]] std::size_t dim(std::size_t subsystem) const;
    [[nodiscard]] std::size_t total_dim() const { return total_; }

    /// Distance in the flat index between consecutive levels of `subsystem`.
    [[nodiscard]] std::size_t stride(std::size_t subsystem) const;

    /// Level of `subsystem` encoded in a flat basis index.
    [[nodiscard]] std::size_t digit(std::size_t index, std::size_t subsystem) const;

    [[nodiscard]] CompositeSpace concat(const CompositeSpace &other) const;

    friend bool operator==(const CompositeSpace &, const CompositeSpace &) = default;

  private:
    std::vector<std::size_t> dims_;
    std::vector<std::size_t> strides_;
    std::size_t total_ = 1;
};

class StateVector {
  public:
    /// Basis state |index> of `space`.
    static StateVector basis(const CompositeSpace &space, std::size_t index);

    /// Takes amplitudes that are already normalized within `tol`; throws
    /// NumericInvariantError otherwise.
    static StateVector from_amplitudes(const CompositeSpace &space,
                                       std::vector<Complex> amps,
                                       double tol = kTolerance);

    /// Rescales `amps` to unit norm. Throws NumericInvariantError on a zero vector.
    static StateVector normalized(const CompositeSpace &space, std::vector<Complex> amps);

    /// Single-subsystem convenience constructors.
    static StateVector qudit(std::vector<Complex> amps);
    static StateVector qudit_basis(std::size_t dim, std::size_t level);

    [[nodiscard]] const CompositeSpace &space() const { return space_; }
    [[nodiscard]] std::span<const Complex> amplitudes() const { return amps_; }
    [[nodiscard]] std::size_t size() const { return amps_.size(); }
    [[nodiscard]] Complex operator[](std::size_t i) const { return amps_[i]; }
    [[nodiscard]] double norm() const;

    /// <this|other>; throws DimensionError on a space mismatch.
    [[nodiscard]] Complex inner(const StateVector &other) const;

    [[nodiscard]] StateVector scaled(Complex factor) const;

  private:
    StateVector(CompositeSpace space, std::vector<Complex> amps)
        : space_(std::move(space)), amps_(std::move(amps)) {}

    CompositeSpace space_;
    std::vector<Complex> amps_;
};

/// Dense square matrix, row-major. Built through `unitary()` the matrix is
/// verified to satisfy ||U^dag U - I||_max <= tol and carries the unitary flag.
class Operator {
  public:
    static Operator identity(std::size_t dim);
    static Operator general(std::size_t dim, std::vector<Complex> entries);
    static Operator unitary(std::size_t dim, std::vector<Complex> entries,
                            double tol = kTolerance);
    static Operator diagonal_unitary(std::span<const Complex> diag, double tol = kTolerance);

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] bool is_unitary() const { return unitary_; }
    [[nodiscard]] bool is_diagonal() const { return diagonal_; }
    [[nodiscard]] Complex operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }
    [[nodiscard]] std::span<const Complex> entries() const { return entries_; }

    [[nodiscard]] Operator adjoint() const;

    /// ||U^dag U - I||_max.
    [[nodiscard]] double unitarity_deviation() const;

    /// Largest |entry| off the diagonal.
    [[nodiscard]] double max_offdiagonal() const;

    /// max_ij |this_ij - other_ij|.
    [[nodiscard]] double max_deviation(const Operator &other) const;

    [[nodiscard]] std::vector<Complex> apply(std::span<const Complex> v) const;

    friend Operator operator*(const Operator &a, const Operator &b);

    /// a (x) b with a as the more significant factor.
    static Operator kron(const Operator &a, const Operator &b);

  private:
    Operator(std::size_t dim, std::vector<Complex> entries, bool unitary);

    std::size_t dim_;
    std::vector<Complex> entries_;
    bool unitary_;
    bool diagonal_;
};

struct MeasurementOutcome {
    std::size_t subsystem_index;
    std::size_t basis_label;
    double probability;
    StateVector post_state;
};

/// Kronecker product over the concatenated space; `a` is more significant.
StateVector tensor(const StateVector &a, const StateVector &b);

/// (I (x) ... (x) op (x) ... (x) I)|state>, op acting on subsystem `target`.
/// Requires a unitary operator; the result norm is checked to 1 +- tol.
StateVector apply_on(const Operator &op, const StateVector &state, std::size_t target,
                     double tol = kTolerance);

/// Joint unitary on two distinct subsystems. The operator's basis is
/// |t0 t1> with targets.first the more significant factor.
StateVector apply_joint(const Operator &op, const StateVector &state,
                        std::pair<std::size_t, std::size_t> targets,
                        double tol = kTolerance);

/// |<a|b>|, in [0, 1] for normalized arguments.
double fidelity_up_to_phase(const StateVector &a, const StateVector &b);

/// Reduced density operator of one subsystem (partial trace over the rest).
Operator reduced_density(const StateVector &state, std::size_t subsystem);

/// Tr(rho^2) of the reduced state on `subsystem`.
double reduced_purity(const StateVector &state, std::size_t subsystem);

/// Born probabilities of each level of `subsystem`.
std::vector<double> marginal_probabilities(const StateVector &state, std::size_t subsystem);

/// Projects `subsystem` onto `level` and renormalizes. Throws
/// NumericInvariantError if the branch has zero weight.
StateVector project(const StateVector &state, std::size_t subsystem, std::size_t level);

/// State of the subsystems listed in `keep` (ascending), conditioned on the
/// remaining subsystems sitting at the levels of the largest amplitude. For a
/// product state across that cut this is the exact factor, up to a global
/// phase.
StateVector dominant_factor(const StateVector &state, const std::vector<std::size_t> &keep);

/// Samples a level of `subsystem` by the Born rule and collapses the state.
/// Deterministic for a fixed seed.
MeasurementOutcome measure_subsystem(const StateVector &state, std::size_t subsystem,
                                     std::uint64_t rng_seed);

}  // namespace cavitydj
