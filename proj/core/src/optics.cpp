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

#include <cmath>
#include <numbers>
#include <vector>

#include "cavitydj/errors.hpp"
#include "format_real.hpp"

namespace cavitydj {

double CatState::normalization() const {
    const double overlap = std::exp(-2.0 * std::norm(alpha));
    return parity == CatParity::Even ? 2.0 * (1.0 + overlap) : 2.0 * (1.0 - overlap);
}

double poisson_tail(double mean_photons, std::size_t n_max) {
    if (mean_photons <= 0.0) {
        return 0.0;
    }
    const double log_mean = std::log(mean_photons);
    double tail = 0.0;
    for (std::size_t n = n_max + 1;; ++n) {
        const double nd = static_cast<double>(n);
        const double term = std::exp(-mean_photons + nd * log_mean - std::lgamma(nd + 1.0));
        tail += term;
        // Past the mode the terms fall off at least geometrically.
        if (nd > mean_photons && (term < 1e-300 || term < tail * 1e-17)) {
            break;
        }
    }
    return tail;
}

FockTruncation choose_truncation(Complex alpha, double tail_epsilon) {
    if (!(tail_epsilon > 0.0 && tail_epsilon < 1.0)) {
        throw std::invalid_argument("tail_epsilon must lie in (0, 1)");
    }
    const double mean = std::norm(alpha);
    std::size_t n_max = 1;
    while (poisson_tail(mean, n_max) > tail_epsilon) {
        ++n_max;
    }
    return FockTruncation{n_max, tail_epsilon};
}

Complex coherent_amplitude(Complex alpha, std::size_t n) {
    Complex c = std::exp(-0.5 * std::norm(alpha));
    for (std::size_t k = 1; k <= n; ++k) {
        c *= alpha / std::sqrt(static_cast<double>(k));
    }
    return c;
}

void check_truncation(Complex alpha, const FockTruncation &t) {
    if (t.n_max < 1 || !(t.tail_epsilon > 0.0)) {
        throw std::invalid_argument("Fock truncation needs n_max >= 1 and tail_epsilon > 0");
    }
    const double tail = poisson_tail(std::norm(alpha), t.n_max);
    if (tail > t.tail_epsilon) {
        throw TruncationError("insufficient Fock truncation: tail mass " + detail::format_real(tail) +
                              " exceeds " + detail::format_real(t.tail_epsilon));
    }
}

namespace {

std::vector<Complex> coherent_amplitudes(Complex alpha, std::size_t dim) {
    std::vector<Complex> c(dim);
    c[0] = std::exp(-0.5 * std::norm(alpha));
    for (std::size_t n = 1; n < dim; ++n) {
        c[n] = c[n - 1] * alpha / std::sqrt(static_cast<double>(n));
    }
    return c;
}

}  // namespace

StateVector coherent_state(const CoherentSpec &spec) {
    check_truncation(spec.alpha, spec.truncation);
    const std::size_t dim = spec.truncation.dim();
    return StateVector::normalized(CompositeSpace({dim}), coherent_amplitudes(spec.alpha, dim));
}

StateVector cat_state(const CatState &cat) {
    check_truncation(cat.alpha, cat.truncation);
    const std::size_t dim = cat.truncation.dim();
    auto c = coherent_amplitudes(cat.alpha, dim);
    // <n|-alpha> = (-1)^n <n|alpha>, so the sum keeps one photon-number parity.
    for (std::size_t n = 0; n < dim; ++n) {
        const bool odd = (n % 2) == 1;
        const bool keep = (cat.parity == CatParity::Odd) == odd;
        c[n] = keep ? 2.0 * c[n] : Complex{};
    }
    return StateVector::normalized(CompositeSpace({dim}), std::move(c));
}

Complex unit_phase(double angle) {
    const double quarter = angle / (std::numbers::pi / 2.0);
    const double r = std::round(quarter);
    if (std::abs(quarter - r) < 1e-15 * std::max(1.0, std::abs(quarter))) {
        switch (((static_cast<long long>(r) % 4) + 4) % 4) {
        case 0:
            return {1.0, 0.0};
        case 1:
            return {0.0, 1.0};
        case 2:
            return {-1.0, 0.0};
        default:
            return {0.0, -1.0};
        }
    }
    return std::polar(1.0, angle);
}

Operator number_phase_op(double phi, std::size_t dim) {
    if (dim < 2) {
        throw DimensionError("number-phase operator needs dim >= 2");
    }
    std::vector<Complex> diag(dim);
    for (std::size_t n = 0; n < dim; ++n) {
        diag[n] = unit_phase(phi * static_cast<double>(n));
    }
    return Operator::diagonal_unitary(diag);
}

double mean_photon_number(const StateVector &field) {
    if (field.space().num_subsystems() != 1) {
        throw DimensionError("mean photon number needs a single-mode state");
    }
    double m = 0.0;
    for (std::size_t n = 0; n < field.size(); ++n) {
        m += static_cast<double>(n) * std::norm(field[n]);
    }
    return m;
}

}  // namespace cavitydj
