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

#include "lazywalk/walk.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace lazywalk {

namespace {

constexpr double kAmplitudeFamilyTolerance = 1e-12;

// Vertex tile edge for the shift; keeps both the row and the transposed
// accesses of a tile resident in cache.
constexpr std::size_t kShiftTile = 64;

Amplitude unit_phase(double angle) {
    return std::polar(1.0, angle);
}

}  // namespace

double WalkParams::alpha() const {
    return std::cos(phi);
}

Amplitude WalkParams::beta() const {
    return {0.0, std::sin(phi)};
}

void WalkParams::validate() const {
    if (n_vertices < 3) {
        throw std::invalid_argument("walk needs at least 3 vertices, got " + std::to_string(n_vertices));
    }
    if (!(phi >= 0.0 && phi <= std::numbers::pi / 2)) {
        throw std::invalid_argument("barrier phase phi must lie in [0, pi/2], got " + std::to_string(phi));
    }
    if (!std::isfinite(eta)) {
        throw std::invalid_argument("correction phase eta must be finite");
    }
    if (marked >= n_vertices) {
        throw std::invalid_argument(
            "marked vertex " + std::to_string(marked) + " out of range for N=" + std::to_string(n_vertices));
    }
}

WalkParams WalkParams::from_amplitudes(
    std::size_t n_vertices, Amplitude alpha, Amplitude beta, double eta, Vertex marked) {
    if (std::abs(alpha.imag()) > kAmplitudeFamilyTolerance || alpha.real() < -kAmplitudeFamilyTolerance) {
        throw std::invalid_argument("hop amplitude alpha must be real and non-negative");
    }
    if (std::abs(beta.real()) > kAmplitudeFamilyTolerance || beta.imag() < -kAmplitudeFamilyTolerance) {
        throw std::invalid_argument("stay amplitude beta must be purely imaginary with non-negative imaginary part");
    }
    if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > kAmplitudeFamilyTolerance) {
        throw std::invalid_argument("|alpha|^2 + |beta|^2 must equal 1");
    }
    WalkParams params{n_vertices, std::atan2(std::max(beta.imag(), 0.0), std::max(alpha.real(), 0.0)), eta, marked};
    params.validate();
    return params;
}

StateVector::StateVector(std::size_t n_vertices) : n_vertices_(n_vertices) {
    if (n_vertices < 2) {
        throw std::invalid_argument("state needs at least 2 vertices");
    }
    amplitudes_.assign(n_vertices * (n_vertices - 1), Amplitude{});
}

StateVector::StateVector(std::size_t n_vertices, std::vector<Amplitude> amplitudes)
    : n_vertices_(n_vertices), amplitudes_(std::move(amplitudes)) {
    if (n_vertices < 2) {
        throw std::invalid_argument("state needs at least 2 vertices");
    }
    if (amplitudes_.size() != n_vertices * (n_vertices - 1)) {
        throw std::invalid_argument(
            "expected " + std::to_string(n_vertices * (n_vertices - 1)) + " amplitudes, got " +
            std::to_string(amplitudes_.size()));
    }
}

double StateVector::norm() const {
    double total = 0.0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

StateVector initial_state(const WalkParams &params) {
    params.validate();
    StateVector state(params.n_vertices);
    const double value = 1.0 / std::sqrt(static_cast<double>(state.size()));
    std::ranges::fill(state.amplitudes(), Amplitude{value, 0.0});
    return state;
}

StateVector apply_lazy_shift(StateVector state, double phi) {
    const double hop = std::cos(phi);
    const Amplitude stay{0.0, std::sin(phi)};
    const std::size_t n = state.n_vertices();
    auto amps = state.amplitudes();
    for (std::size_t v0 = 0; v0 < n; v0 += kShiftTile) {
        const std::size_t v1 = std::min(n, v0 + kShiftTile);
        for (std::size_t w0 = v0; w0 < n; w0 += kShiftTile) {
            const std::size_t w1 = std::min(n, w0 + kShiftTile);
            for (std::size_t v = v0; v < v1; ++v) {
                for (std::size_t w = std::max(w0, v + 1); w < w1; ++w) {
                    Amplitude &out = amps[state.index(v, w)];
                    Amplitude &back = amps[state.index(w, v)];
                    const Amplitude a = out;
                    const Amplitude b = back;
                    out = hop * b + stay * a;
                    back = hop * a + stay * b;
                }
            }
        }
    }
    return state;
}

StateVector apply_coin(StateVector state, double eta) {
    const Amplitude scale = 1.0 + unit_phase(eta);
    const double inv_degree = 1.0 / static_cast<double>(state.degree());
    for (Vertex v = 0; v < state.n_vertices(); ++v) {
        auto block = state.block(v);
        Amplitude sum{};
        for (const auto &a : block) {
            sum += a;
        }
        const Amplitude reflected_mean = scale * (sum * inv_degree);
        for (auto &a : block) {
            a = reflected_mean - a;
        }
    }
    return state;
}

StateVector apply_oracle(StateVector state, Vertex marked, double eta) {
    if (marked >= state.n_vertices()) {
        throw std::out_of_range(
            "marked vertex " + std::to_string(marked) + " out of range for N=" + std::to_string(state.n_vertices()));
    }
    const Amplitude phase = -unit_phase(-eta);
    for (auto &a : state.block(marked)) {
        a *= phase;
    }
    return state;
}

StateVector step(StateVector state, const WalkParams &params) {
    state = apply_oracle(std::move(state), params.marked, params.eta);
    state = apply_coin(std::move(state), params.eta);
    return apply_lazy_shift(std::move(state), params.phi);
}

double success_probability(const StateVector &state, Vertex marked) {
    if (marked >= state.n_vertices()) {
        throw std::out_of_range("marked vertex out of range");
    }
    double total = 0.0;
    for (const auto &a : state.block(marked)) {
        total += std::norm(a);
    }
    return total;
}

std::vector<double> evolve(const WalkParams &params, std::size_t steps) {
    StateVector state = initial_state(params);
    std::vector<double> probabilities;
    probabilities.reserve(steps + 1);
    probabilities.push_back(success_probability(state, params.marked));
    for (std::size_t t = 0; t < steps; ++t) {
        state = step(std::move(state), params);
        probabilities.push_back(success_probability(state, params.marked));
    }
    return probabilities;
}

double SymmetrySpread::max() const {
    return std::max({marked_block, toward_marked, among_unmarked});
}

SymmetrySpread symmetry_spread(const StateVector &state, Vertex marked) {
    if (marked >= state.n_vertices()) {
        throw std::out_of_range("marked vertex out of range");
    }
    // Two passes per class: mean, then max deviation from it.
    Amplitude sum_marked{}, sum_toward{}, sum_among{};
    std::size_t count_among = 0;
    const std::size_t n = state.n_vertices();
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex w = 0; w < n; ++w) {
            if (v == w) {
                continue;
            }
            const Amplitude a = state.at(v, w);
            if (v == marked) {
                sum_marked += a;
            } else if (w == marked) {
                sum_toward += a;
            } else {
                sum_among += a;
                ++count_among;
            }
        }
    }
    const double degree = static_cast<double>(n - 1);
    const Amplitude mean_marked = sum_marked / degree;
    const Amplitude mean_toward = sum_toward / degree;
    const Amplitude mean_among = count_among ? sum_among / static_cast<double>(count_among) : Amplitude{};

    SymmetrySpread spread;
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex w = 0; w < n; ++w) {
            if (v == w) {
                continue;
            }
            const Amplitude a = state.at(v, w);
            if (v == marked) {
                spread.marked_block = std::max(spread.marked_block, std::abs(a - mean_marked));
            } else if (w == marked) {
                spread.toward_marked = std::max(spread.toward_marked, std::abs(a - mean_toward));
            } else {
                spread.among_unmarked = std::max(spread.among_unmarked, std::abs(a - mean_among));
            }
        }
    }
    return spread;
}

}  // namespace lazywalk
