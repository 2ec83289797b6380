// Copyright 2026 The lazywalk Authors
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

#include "lazywalk/reduced_model.h"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace lazywalk {

namespace {

void require_reducible(std::size_t n_vertices) {
    if (n_vertices < 3) {
        throw std::invalid_argument("reduced model needs N >= 3, got " + std::to_string(n_vertices));
    }
}

// Gram-Schmidt of |bb> against two orthonormal vectors, phased to a positive
// |bb> overlap.
ReducedState complement(const ReducedState &a, const ReducedState &b) {
    for (Eigen::Index seed : {reduced_basis::kBB, reduced_basis::kAB, reduced_basis::kBA}) {
        ReducedState v = ReducedState::Unit(seed);
        v -= a.dot(v) * a;
        v -= b.dot(v) * b;
        if (v.norm() > 1e-8) {
            v.normalize();
            const std::complex<double> bb = v(reduced_basis::kBB);
            if (std::abs(bb) > 0.0) {
                v *= std::conj(bb) / std::abs(bb);
            }
            return v;
        }
    }
    throw std::logic_error("reduced complement is degenerate");
}

}  // namespace

ReducedOperators build_reduced_operators(std::size_t n_vertices, double phi, double eta) {
    require_reducible(n_vertices);
    using C = std::complex<double>;
    const double n = static_cast<double>(n_vertices);
    const double root = std::sqrt(n - 2.0);
    const C phase = std::polar(1.0, eta);

    ReducedMatrix flip;
    flip << 0, 1, 0,  //
        1, 0, 0,      //
        0, 0, 1;

    ReducedOperators ops;
    ops.shift = std::cos(phi) * flip + C{0.0, std::sin(phi)} * ReducedMatrix::Identity();

    const C off = (1.0 + phase) * root / (n - 1.0);
    ops.coin_oracle << -1, 0, 0,                          //
        0, -(n - 2.0 - phase) / (n - 1.0), off,           //
        0, off, ((n - 2.0) * phase - 1.0) / (n - 1.0);

    ops.step = ops.shift * ops.coin_oracle;
    return ops;
}

ReducedState psi_minus_one(std::size_t n_vertices) {
    require_reducible(n_vertices);
    const double n = static_cast<double>(n_vertices);
    const double root = std::sqrt(n - 2.0);
    ReducedState psi(-root, -root, 1.0);
    return psi / std::sqrt(2.0 * n - 3.0);
}

RotationPlane s_and_w_states(std::size_t n_vertices) {
    require_reducible(n_vertices);
    const double n = static_cast<double>(n_vertices);
    RotationPlane plane;
    plane.s = ReducedState(0.0, 1.0 / std::sqrt(n - 1.0), std::sqrt((n - 2.0) / (n - 1.0)));
    plane.w = ReducedState(1.0, -1.0, 0.0) / std::sqrt(2.0);
    return plane;
}

ReducedState w_perp(std::size_t n_vertices) {
    return complement(psi_minus_one(n_vertices), s_and_w_states(n_vertices).w);
}

ReducedState s_perp(std::size_t n_vertices) {
    return complement(psi_minus_one(n_vertices), s_and_w_states(n_vertices).s);
}

ReducedState reduced_initial_state(std::size_t n_vertices) {
    require_reducible(n_vertices);
    const double n = static_cast<double>(n_vertices);
    return ReducedState(1.0, 1.0, std::sqrt(n - 2.0)) / std::sqrt(n);
}

StateVector embed(const ReducedState &reduced, std::size_t n_vertices, Vertex marked) {
    require_reducible(n_vertices);
    if (marked >= n_vertices) {
        throw std::out_of_range("marked vertex out of range");
    }
    StateVector full(n_vertices);
    const double n = static_cast<double>(n_vertices);
    const Amplitude ab = reduced(reduced_basis::kAB) / std::sqrt(n - 1.0);
    const Amplitude ba = reduced(reduced_basis::kBA) / std::sqrt(n - 1.0);
    const Amplitude bb = reduced(reduced_basis::kBB) / std::sqrt((n - 1.0) * (n - 2.0));
    for (Vertex v = 0; v < n_vertices; ++v) {
        for (Vertex w = 0; w < n_vertices; ++w) {
            if (v == w) {
                continue;
            }
            full.at(v, w) = v == marked ? ab : (w == marked ? ba : bb);
        }
    }
    return full;
}

Projection project(const StateVector &full, Vertex marked) {
    const std::size_t n_vertices = full.n_vertices();
    require_reducible(n_vertices);
    if (marked >= n_vertices) {
        throw std::out_of_range("marked vertex out of range");
    }
    Amplitude sum_ab{}, sum_ba{}, sum_bb{};
    for (Vertex v = 0; v < n_vertices; ++v) {
        for (Vertex w = 0; w < n_vertices; ++w) {
            if (v == w) {
                continue;
            }
            const Amplitude a = full.at(v, w);
            if (v == marked) {
                sum_ab += a;
            } else if (w == marked) {
                sum_ba += a;
            } else {
                sum_bb += a;
            }
        }
    }
    const double n = static_cast<double>(n_vertices);
    const double degree = n - 1.0;
    const double among = (n - 1.0) * (n - 2.0);
    Projection p;
    p.reduced = ReducedState(sum_ab / std::sqrt(degree), sum_ba / std::sqrt(degree), sum_bb / std::sqrt(among));

    // Residual from per-entry deviations against the class means; subtracting
    // captured weight from the total would cancel catastrophically.
    const Amplitude mean_ab = sum_ab / degree;
    const Amplitude mean_ba = sum_ba / degree;
    const Amplitude mean_bb = sum_bb / among;
    double outside = 0.0;
    for (Vertex v = 0; v < n_vertices; ++v) {
        for (Vertex w = 0; w < n_vertices; ++w) {
            if (v == w) {
                continue;
            }
            const Amplitude mean = v == marked ? mean_ab : (w == marked ? mean_ba : mean_bb);
            outside += std::norm(full.at(v, w) - mean);
        }
    }
    p.residual = std::sqrt(outside);
    return p;
}

std::vector<double> reduced_evolve(std::size_t n_vertices, double phi, double eta, std::size_t steps) {
    const ReducedOperators ops = build_reduced_operators(n_vertices, phi, eta);
    ReducedState x = reduced_initial_state(n_vertices);
    std::vector<double> probabilities;
    probabilities.reserve(steps + 1);
    probabilities.push_back(std::norm(x(reduced_basis::kAB)));
    for (std::size_t t = 0; t < steps; ++t) {
        x = ops.step * x;
        probabilities.push_back(std::norm(x(reduced_basis::kAB)));
    }
    return probabilities;
}

double unitarity_error(const ReducedMatrix &m) {
    return (m.adjoint() * m - ReducedMatrix::Identity()).cwiseAbs().maxCoeff();
}

}  // namespace lazywalk
