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

#include "cavitydj/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "cavitydj/errors.hpp"
#include "format_real.hpp"
#include "cavitydj/random.hpp"

namespace cavitydj {

namespace {

double squared_norm(std::span<const Complex> v) {
    double s = 0.0;
    for (const auto &a : v) {
        s += std::norm(a);
    }
    return s;
}

void check_norm(std::span<const Complex> v, double tol, const char *where) {
    const double n = std::sqrt(squared_norm(v));
    if (std::abs(n - 1.0) > tol) {
        throw NumericInvariantError(std::string(where) + ": norm drifted to " +
                                    std::to_string(n));
    }
}

// Enumerates the flat indices whose digits on `targets` are all zero.
template <typename Fn>
void for_each_base(const CompositeSpace &space, std::span<const std::size_t> targets, Fn &&fn) {
    const std::size_t total = space.total_dim();
    for (std::size_t i = 0; i < total; ++i) {
        bool zero = true;
        for (auto t : targets) {
            if (space.digit(i, t) != 0) {
                zero = false;
                break;
            }
        }
        if (zero) {
            fn(i);
        }
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// CompositeSpace
// ---------------------------------------------------------------------------

CompositeSpace::CompositeSpace(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) {
        throw DimensionError("composite space needs at least one subsystem");
    }
    strides_.assign(dims_.size(), 1);
    for (std::size_t k = dims_.size(); k-- > 0;) {
        if (dims_[k] < 2) {
            throw DimensionError("subsystem dimension must be >= 2");
        }
        strides_[k] = total_;
        total_ *= dims_[k];
    }
}

std::size_t CompositeSpace::dim(std::size_t subsystem) const {
    if (subsystem >= dims_.size()) {
        throw DimensionError("invalid subsystem index " + std::to_string(subsystem));
    }
    return dims_[subsystem];
}

std::size_t CompositeSpace::stride(std::size_t subsystem) const {
    if (subsystem >= dims_.size()) {
        throw DimensionError("invalid subsystem index " + std::to_string(subsystem));
    }
    return strides_[subsystem];
}

std::size_t CompositeSpace::digit(std::size_t index, std::size_t subsystem) const {
    return (index / strides_[subsystem]) % dims_[subsystem];
}

CompositeSpace CompositeSpace::concat(const CompositeSpace &other) const {
    std::vector<std::size_t> d = dims_;
    d.insert(d.end(), other.dims_.begin(), other.dims_.end());
    return CompositeSpace(std::move(d));
}

// ---------------------------------------------------------------------------
// StateVector
// ---------------------------------------------------------------------------

StateVector StateVector::basis(const CompositeSpace &space, std::size_t index) {
    if (index >= space.total_dim()) {
        throw DimensionError("basis index out of range");
    }
    std::vector<Complex> amps(space.total_dim());
    amps[index] = 1.0;
    return StateVector(space, std::move(amps));
}

StateVector StateVector::from_amplitudes(const CompositeSpace &space, std::vector<Complex> amps,
                                         double tol) {
    if (amps.size() != space.total_dim()) {
        throw DimensionError("amplitude count does not match space dimension");
    }
    check_norm(amps, tol, "from_amplitudes");
    return StateVector(space, std::move(amps));
}

StateVector StateVector::normalized(const CompositeSpace &space, std::vector<Complex> amps) {
    if (amps.size() != space.total_dim()) {
        throw DimensionError("amplitude count does not match space dimension");
    }
    const double n = std::sqrt(squared_norm(amps));
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw NumericInvariantError("cannot normalize a zero or non-finite vector");
    }
    for (auto &a : amps) {
        a /= n;
    }
    return StateVector(space, std::move(amps));
}

StateVector StateVector::qudit(std::vector<Complex> amps) {
    CompositeSpace space({amps.size()});
    return from_amplitudes(space, std::move(amps));
}

StateVector StateVector::qudit_basis(std::size_t dim, std::size_t level) {
    return basis(CompositeSpace({dim}), level);
}

double StateVector::norm() const { return std::sqrt(squared_norm(amps_)); }

Complex StateVector::inner(const StateVector &other) const {
    if (!(space_ == other.space_)) {
        throw DimensionError("state spaces differ");
    }
    Complex s = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        s += std::conj(amps_[i]) * other.amps_[i];
    }
    return s;
}

StateVector StateVector::scaled(Complex factor) const {
    std::vector<Complex> amps = amps_;
    for (auto &a : amps) {
        a *= factor;
    }
    return StateVector(space_, std::move(amps));
}

// ---------------------------------------------------------------------------
// Operator
// ---------------------------------------------------------------------------

Operator::Operator(std::size_t dim, std::vector<Complex> entries, bool unitary)
    : dim_(dim), entries_(std::move(entries)), unitary_(unitary), diagonal_(true) {
    for (std::size_t r = 0; r < dim_ && diagonal_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            if (r != c && entries_[r * dim_ + c] != Complex{}) {
                diagonal_ = false;
                break;
            }
        }
    }
}

Operator Operator::identity(std::size_t dim) {
    std::vector<Complex> e(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        e[i * dim + i] = 1.0;
    }
    return Operator(dim, std::move(e), true);
}

Operator Operator::general(std::size_t dim, std::vector<Complex> entries) {
    if (dim == 0 || entries.size() != dim * dim) {
        throw DimensionError("operator entries must form a dim x dim matrix");
    }
    return Operator(dim, std::move(entries), false);
}

Operator Operator::unitary(std::size_t dim, std::vector<Complex> entries, double tol) {
    Operator op = general(dim, std::move(entries));
    const double dev = op.unitarity_deviation();
    if (dev > tol) {
        throw NumericInvariantError("operator is not unitary (deviation " + detail::format_real(dev) +
                                    ")");
    }
    op.unitary_ = true;
    return op;
}

Operator Operator::diagonal_unitary(std::span<const Complex> diag, double tol) {
    const std::size_t d = diag.size();
    std::vector<Complex> e(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        e[i * d + i] = diag[i];
    }
    return unitary(d, std::move(e), tol);
}

Operator Operator::adjoint() const {
    std::vector<Complex> e(entries_.size());
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            e[c * dim_ + r] = std::conj(entries_[r * dim_ + c]);
        }
    }
    return Operator(dim_, std::move(e), unitary_);
}

double Operator::unitarity_deviation() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            Complex s = 0.0;
            for (std::size_t k = 0; k < dim_; ++k) {
                s += std::conj(entries_[k * dim_ + i]) * entries_[k * dim_ + j];
            }
            if (i == j) {
                s -= 1.0;
            }
            worst = std::max(worst, std::abs(s));
        }
    }
    return worst;
}

double Operator::max_offdiagonal() const {
    double worst = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            if (r != c) {
                worst = std::max(worst, std::abs(entries_[r * dim_ + c]));
            }
        }
    }
    return worst;
}

double Operator::max_deviation(const Operator &other) const {
    if (other.dim_ != dim_) {
        throw DimensionError("operator dimensions differ");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        worst = std::max(worst, std::abs(entries_[i] - other.entries_[i]));
    }
    return worst;
}

std::vector<Complex> Operator::apply(std::span<const Complex> v) const {
    if (v.size() != dim_) {
        throw DimensionError("vector length does not match operator dimension");
    }
    std::vector<Complex> out(dim_);
    if (diagonal_) {
        for (std::size_t i = 0; i < dim_; ++i) {
            out[i] = entries_[i * dim_ + i] * v[i];
        }
        return out;
    }
    for (std::size_t r = 0; r < dim_; ++r) {
        Complex s = 0.0;
        for (std::size_t c = 0; c < dim_; ++c) {
            s += entries_[r * dim_ + c] * v[c];
        }
        out[r] = s;
    }
    return out;
}

Operator operator*(const Operator &a, const Operator &b) {
    if (a.dim_ != b.dim_) {
        throw DimensionError("operator dimensions differ");
    }
    const std::size_t d = a.dim_;
    std::vector<Complex> e(d * d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t k = 0; k < d; ++k) {
            const Complex x = a.entries_[r * d + k];
            if (x == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < d; ++c) {
                e[r * d + c] += x * b.entries_[k * d + c];
            }
        }
    }
    return Operator(d, std::move(e), a.unitary_ && b.unitary_);
}

Operator Operator::kron(const Operator &a, const Operator &b) {
    const std::size_t d = a.dim_ * b.dim_;
    std::vector<Complex> e(d * d);
    for (std::size_t ar = 0; ar < a.dim_; ++ar) {
        for (std::size_t ac = 0; ac < a.dim_; ++ac) {
            const Complex x = a(ar, ac);
            for (std::size_t br = 0; br < b.dim_; ++br) {
                for (std::size_t bc = 0; bc < b.dim_; ++bc) {
                    e[(ar * b.dim_ + br) * d + ac * b.dim_ + bc] = x * b(br, bc);
                }
            }
        }
    }
    return Operator(d, std::move(e), a.unitary_ && b.unitary_);
}

// ---------------------------------------------------------------------------
// State operations
// ---------------------------------------------------------------------------

StateVector tensor(const StateVector &a, const StateVector &b) {
    std::vector<Complex> amps(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            amps[i * b.size() + j] = a[i] * b[j];
        }
    }
    return StateVector::from_amplitudes(a.space().concat(b.space()), std::move(amps));
}

namespace {

StateVector apply_local(const Operator &op, const StateVector &state,
                        std::span<const std::size_t> targets, double tol, const char *where) {
    if (!op.is_unitary()) {
        throw NumericInvariantError(std::string(where) + ": operator is not flagged unitary");
    }
    const CompositeSpace &space = state.space();
    std::vector<std::size_t> local_dims;
    std::size_t local = 1;
    for (auto t : targets) {
        local_dims.push_back(space.dim(t));
        local *= space.dim(t);
    }
    if (op.dim() != local) {
        throw DimensionError("subsystem dimension mismatch");
    }

    // Flat offsets of every local basis state relative to a base index.
    std::vector<std::size_t> offsets(local, 0);
    for (std::size_t l = 0; l < local; ++l) {
        std::size_t rem = l;
        std::size_t off = 0;
        for (std::size_t k = targets.size(); k-- > 0;) {
            off += (rem % local_dims[k]) * space.stride(targets[k]);
            rem /= local_dims[k];
        }
        offsets[l] = off;
    }

    std::vector<Complex> in(state.amplitudes().begin(), state.amplitudes().end());
    std::vector<Complex> out(in.size());
    std::vector<Complex> block(local);
    for_each_base(space, targets, [&](std::size_t base) {
        for (std::size_t l = 0; l < local; ++l) {
            block[l] = in[base + offsets[l]];
        }
        const auto res = op.apply(block);
        for (std::size_t l = 0; l < local; ++l) {
            out[base + offsets[l]] = res[l];
        }
    });
    check_norm(out, tol, where);
    return StateVector::from_amplitudes(space, std::move(out), tol);
}

}  // namespace

StateVector apply_on(const Operator &op, const StateVector &state, std::size_t target,
                     double tol) {
    const std::size_t targets[] = {target};
    return apply_local(op, state, targets, tol, "apply_on");
}

StateVector apply_joint(const Operator &op, const StateVector &state,
                        std::pair<std::size_t, std::size_t> targets, double tol) {
    if (targets.first == targets.second) {
        throw DimensionError("repeated target index");
    }
    const std::size_t t[] = {targets.first, targets.second};
    return apply_local(op, state, t, tol, "apply_joint");
}

double fidelity_up_to_phase(const StateVector &a, const StateVector &b) {
    return std::min(1.0, std::abs(a.inner(b)));
}

Operator reduced_density(const StateVector &state, std::size_t subsystem) {
    const CompositeSpace &space = state.space();
    const std::size_t d = space.dim(subsystem);
    const std::size_t stride = space.stride(subsystem);
    const std::size_t targets[] = {subsystem};
    std::vector<Complex> rho(d * d);
    const auto amps = state.amplitudes();
    for_each_base(space, targets, [&](std::size_t base) {
        for (std::size_t i = 0; i < d; ++i) {
            const Complex ai = amps[base + i * stride];
            if (ai == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < d; ++j) {
                rho[i * d + j] += ai * std::conj(amps[base + j * stride]);
            }
        }
    });
    return Operator::general(d, std::move(rho));
}

double reduced_purity(const StateVector &state, std::size_t subsystem) {
    const Operator rho = reduced_density(state, subsystem);
    double p = 0.0;
    for (const auto &x : rho.entries()) {
        p += std::norm(x);  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
    }
    return p;
}

std::vector<double> marginal_probabilities(const StateVector &state, std::size_t subsystem) {
    const CompositeSpace &space = state.space();
    std::vector<double> p(space.dim(subsystem), 0.0);
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        p[space.digit(i, subsystem)] += std::norm(amps[i]);
    }
    return p;
}

StateVector project(const StateVector &state, std::size_t subsystem, std::size_t level) {
    const CompositeSpace &space = state.space();
    if (level >= space.dim(subsystem)) {
        throw DimensionError("level out of range for subsystem");
    }
    std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (space.digit(i, subsystem) != level) {
            amps[i] = 0.0;
        }
    }
    return StateVector::normalized(space, std::move(amps));
}

StateVector dominant_factor(const StateVector &state, const std::vector<std::size_t> &keep) {
    const CompositeSpace &space = state.space();
    if (keep.empty()) {
        throw DimensionError("dominant_factor needs at least one subsystem to keep");
    }
    std::vector<bool> kept(space.num_subsystems(), false);
    std::vector<std::size_t> dims;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] >= space.num_subsystems() || (i > 0 && keep[i] <= keep[i - 1])) {
            throw DimensionError("dominant_factor: keep must list ascending valid subsystems");
        }
        kept[keep[i]] = true;
        dims.push_back(space.dim(keep[i]));
    }
    const auto amps = state.amplitudes();
    std::size_t peak = 0;
    for (std::size_t i = 1; i < amps.size(); ++i) {
        if (std::norm(amps[i]) > std::norm(amps[peak])) {
            peak = i;
        }
    }
    std::size_t base = 0;
    for (std::size_t k = 0; k < space.num_subsystems(); ++k) {
        if (!kept[k]) {
            base += space.digit(peak, k) * space.stride(k);
        }
    }
    CompositeSpace sub(dims);
    std::vector<Complex> out(sub.total_dim());
    for (std::size_t j = 0; j < out.size(); ++j) {
        std::size_t idx = base;
        for (std::size_t i = 0; i < keep.size(); ++i) {
            idx += sub.digit(j, i) * space.stride(keep[i]);
        }
        out[j] = amps[idx];
    }
    return StateVector::normalized(sub, std::move(out));
}

MeasurementOutcome measure_subsystem(const StateVector &state, std::size_t subsystem,
                                     std::uint64_t rng_seed) {
    const auto probs = marginal_probabilities(state, subsystem);
    const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
    std::mt19937_64 rng(rng_seed);
    const double u = uniform_unit(rng) * total;

    std::size_t label = probs.size() - 1;
    double acc = 0.0;
    for (std::size_t k = 0; k < probs.size(); ++k) {
        acc += probs[k];
        if (u < acc) {
            label = k;
            break;
        }
    }
    // Never land on a zero-probability level through rounding at the top end.
    while (probs[label] == 0.0 && label > 0) {
        --label;
    }
    return MeasurementOutcome{subsystem, label, probs[label], project(state, subsystem, label)};
}

}  // namespace cavitydj
