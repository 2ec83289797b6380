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

#include "lazywalk/ctqw.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace lazywalk {

void CtqwParams::validate() const {
    if (n_vertices < 2) {
        throw std::invalid_argument("ctqw needs N >= 2, got " + std::to_string(n_vertices));
    }
    if (!(epsilon >= 0.0 && epsilon < 1.0)) {
        throw std::invalid_argument("epsilon must lie in [0, 1), got " + std::to_string(epsilon));
    }
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        throw std::invalid_argument("gamma must be positive and finite");
    }
    if (marked >= n_vertices) {
        throw std::invalid_argument("marked vertex out of range");
    }
}

double corrected_gamma(std::size_t n_vertices, double epsilon) {
    if (n_vertices < 2) {
        throw std::invalid_argument("ctqw needs N >= 2");
    }
    if (!(epsilon >= 0.0 && epsilon < 1.0)) {
        throw std::invalid_argument(
            "epsilon must lie in [0, 1) (epsilon = 1 blocks every hop), got " + std::to_string(epsilon));
    }
    return 1.0 / (static_cast<double>(n_vertices) * (1.0 - epsilon));
}

Eigen::Matrix2d effective_hamiltonian(const CtqwParams &params) {
    params.validate();
    const double n = static_cast<double>(params.n_vertices);
    const double hop = params.gamma * (1.0 - params.epsilon);
    const double coupling = -hop * std::sqrt(n - 1.0);
    Eigen::Matrix2d h;
    h << -1.0, coupling,  //
        coupling, -hop * (n - 2.0);
    return h;
}

Eigen::Matrix2cd ctqw_propagator(const CtqwParams &params, double t) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw std::invalid_argument("time must be finite and non-negative");
    }
    const Eigen::Matrix2d h = effective_hamiltonian(params);
    // Eigenvalues mean +- gap; exp(-iHt) = e^{-i mean t} (cos(gap t) I - i sin(gap t)/gap (H - mean I)).
    const double mean = 0.5 * (h(0, 0) + h(1, 1));
    const double half_split = 0.5 * (h(0, 0) - h(1, 1));
    const double gap = std::hypot(half_split, h(0, 1));
    const double sinc = gap > 0.0 ? std::sin(gap * t) / gap : t;
    const Eigen::Matrix2d traceless = h - mean * Eigen::Matrix2d::Identity();

    using C = std::complex<double>;
    Eigen::Matrix2cd u = std::cos(gap * t) * Eigen::Matrix2cd::Identity() - C{0.0, sinc} * traceless.cast<C>();
    return std::polar(1.0, -mean * t) * u;
}

double ctqw_success_probability(const CtqwParams &params, double t) {
    const double n = static_cast<double>(params.n_vertices);
    const Eigen::Vector2cd uniform(1.0 / std::sqrt(n), std::sqrt((n - 1.0) / n));
    const Eigen::Vector2cd evolved = ctqw_propagator(params, t) * uniform;
    return std::norm(evolved(0));
}

double ctqw_runtime(std::size_t n_vertices) {
    if (n_vertices < 2) {
        throw std::invalid_argument("ctqw needs N >= 2");
    }
    return std::numbers::pi * std::sqrt(static_cast<double>(n_vertices)) / 2.0;
}

}  // namespace lazywalk
