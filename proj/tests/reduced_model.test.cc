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
#include <numbers>
#include <random>

#include "gtest/gtest.h"

#include "lazywalk/phase_matching.h"
#include "test_util.h"

using namespace lazywalk;
using lazywalk::oracle::PairBasis;
using C = std::complex<double>;

namespace {

const double kAsin08 = std::asin(0.8);

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived> &m) {
    return m.cwiseAbs().maxCoeff();
}

double eta_for(double phi, std::size_t n) {
    return std::get<double>(corrected_eta(phi, n));
}

ReducedState random_reduced(unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> normal;
    ReducedState x;
    for (int i = 0; i < 3; ++i) {
        x(i) = C(normal(rng), normal(rng));
    }
    return x.normalized();
}

}  // namespace

TEST(reduced_operators, barrier_free_product_matches_transcribed_factors) {
    for (std::size_t n : {3u, 10u, 1024u}) {
        const double d = static_cast<double>(n);
        ReducedMatrix shift, coin, oracle;
        shift << 0, 1, 0, 1, 0, 0, 0, 0, 1;
        coin << 1, 0, 0,  //
            0, -(d - 3) / (d - 1), 2 * std::sqrt(d - 2) / (d - 1),  //
            0, 2 * std::sqrt(d - 2) / (d - 1), (d - 3) / (d - 1);
        oracle << -1, 0, 0, 0, 1, 0, 0, 0, 1;

        const auto ops = build_reduced_operators(n, 0.0, 0.0);
        EXPECT_LT(max_abs(ops.step - shift * coin * oracle), 1e-15) << "n=" << n;
        EXPECT_LT(max_abs(ops.coin_oracle - coin * oracle), 1e-15);
        EXPECT_EQ(ops.coin_oracle(0, 0), C(-1.0, 0.0));
    }
}

TEST(reduced_operators, match_projection_of_full_space_operators) {
    // E^dagger U E with E the embedded basis, from dense full-space matrices.
    for (std::size_t n : {3u, 5u, 8u}) {
        const PairBasis basis(n);
        for (Vertex marked : {Vertex{0}, n - 1}) {
            const Eigen::MatrixXcd e = oracle::dense_reduced_basis(basis, marked);
            for (double phi : {0.0, 0.3, kAsin08}) {
                for (double eta : {0.0, eta_for(phi, n), 1.3}) {
                    const auto ops = build_reduced_operators(n, phi, eta);
                    const Eigen::MatrixXcd shift = e.adjoint() * oracle::dense_lazy_shift(basis, phi) * e;
                    const Eigen::MatrixXcd co =
                        e.adjoint() * oracle::dense_coin(basis, eta) * oracle::dense_oracle(basis, marked, eta) * e;
                    EXPECT_LT((ops.shift - shift).cwiseAbs().maxCoeff(), 1e-14);
                    EXPECT_LT((ops.coin_oracle - co).cwiseAbs().maxCoeff(), 1e-14);

                    // Invariance: U E = E (E^dagger U E).
                    const Eigen::MatrixXcd u = oracle::dense_step(basis, phi, eta, marked);
                    EXPECT_LT((u * e - e * ops.step).cwiseAbs().maxCoeff(), 1e-14);
                }
            }
        }
    }
}

TEST(reduced_operators, unitary) {
    for (std::size_t n : {3u, 4u, 1024u}) {
        for (double phi : {0.0, 0.3, kAsin08, 1.4}) {
            for (double eta : {0.0, eta_for(phi, n)}) {
                const auto ops = build_reduced_operators(n, phi, eta);
                EXPECT_LT(unitarity_error(ops.shift), 1e-12);
                EXPECT_LT(unitarity_error(ops.coin_oracle), 1e-12);
                EXPECT_LT(unitarity_error(ops.step), 1e-12);
            }
        }
    }
    EXPECT_THROW(build_reduced_operators(2, 0.0, 0.0), std::invalid_argument);
}

TEST(psi_minus_one, closed_form_and_eigen_relations) {
    const auto psi3 = psi_minus_one(3);
    EXPECT_LT(max_abs(psi3 - ReducedState(-1, -1, 1) / std::sqrt(3.0)), 1e-15);

    for (std::size_t n : {3u, 7u, 100u, 1024u}) {
        const auto psi = psi_minus_one(n);
        EXPECT_NEAR(psi.norm(), 1.0, 1e-15);
        for (double phi : {0.0, 0.3, kAsin08}) {
            for (double eta : {0.0, eta_for(phi, n), -2.0}) {
                const auto ops = build_reduced_operators(n, phi, eta);
                EXPECT_LT(max_abs(ops.coin_oracle * psi + psi), 1e-12);
                EXPECT_LT(max_abs(ops.shift * psi - std::polar(1.0, phi) * psi), 1e-12);
            }
        }
    }
}

TEST(rotation_plane, overlap_and_orthogonality) {
    for (std::size_t n : {3u, 10u, 1024u}) {
        const auto [s, w] = s_and_w_states(n);
        const auto psi = psi_minus_one(n);
        EXPECT_NEAR(std::abs(s.dot(w)), 1.0 / std::sqrt(2.0 * static_cast<double>(n - 1)), 1e-14);
        EXPECT_LT(std::abs(psi.dot(s)), 1e-14);
        EXPECT_LT(std::abs(psi.dot(w)), 1e-14);
        EXPECT_NEAR(s.norm(), 1.0, 1e-15);
        EXPECT_NEAR(w.norm(), 1.0, 1e-15);
    }
    EXPECT_NEAR(std::abs(s_and_w_states(3).s.dot(s_and_w_states(3).w)), 0.5, 1e-15);
    EXPECT_NEAR(overlap_angle(3), std::numbers::pi / 6, 1e-15);
}

TEST(rotation_plane, perpendicular_states) {
    for (std::size_t n : {3u, 10u, 1024u}) {
        const auto [s, w] = s_and_w_states(n);
        const auto psi = psi_minus_one(n);
        for (const auto &[perp, base] : {std::pair{w_perp(n), w}, std::pair{s_perp(n), s}}) {
            EXPECT_NEAR(perp.norm(), 1.0, 1e-14);
            EXPECT_LT(std::abs(perp.dot(base)), 1e-14);
            EXPECT_LT(std::abs(perp.dot(psi)), 1e-14);
            EXPECT_GT(perp(reduced_basis::kBB).real(), 0.0);
            EXPECT_NEAR(perp(reduced_basis::kBB).imag(), 0.0, 1e-15);
        }
    }
}

TEST(rotation_plane, lazy_shift_phases) {
    for (std::size_t n : {3u, 64u, 1024u}) {
        const auto w = s_and_w_states(n).w;
        const auto wp = w_perp(n);
        for (double phi : {0.0, 0.3, kAsin08, 1.5}) {
            const auto shift = build_reduced_operators(n, phi, 0.0).shift;
            EXPECT_LT(max_abs(shift * w + std::polar(1.0, -phi) * w), 1e-12);
            EXPECT_LT(max_abs(shift * wp - std::polar(1.0, phi) * wp), 1e-12);
        }
    }
}

TEST(rotation_plane, corrected_coin_oracle_phases) {
    for (std::size_t n : {3u, 64u, 1024u}) {
        const auto s = s_and_w_states(n).s;
        const auto sp = s_perp(n);
        for (double eta : {0.0, -0.6, eta_for(kAsin08, n), 2.5}) {
            const auto co = build_reduced_operators(n, 0.0, eta).coin_oracle;
            EXPECT_LT(max_abs(co * s - std::polar(1.0, eta) * s), 1e-12);
            EXPECT_LT(max_abs(co * sp + sp), 1e-12);
        }
    }
}

TEST(rotation_plane, barrier_free_first_step_amplitude) {
    // psi0 is orthogonal to w; one step moves sqrt(2/N) of amplitude onto it.
    for (std::size_t n : {3u, 16u, 1024u}) {
        const auto w = s_and_w_states(n).w;
        const auto psi0 = reduced_initial_state(n);
        const auto step = build_reduced_operators(n, 0.0, 0.0).step;
        EXPECT_LT(std::abs(w.dot(psi0)), 1e-15);
        EXPECT_NEAR(std::abs(w.dot(step * psi0)), std::sqrt(2.0 / static_cast<double>(n)), 1e-12);
    }
}

TEST(reduced_initial_state, values) {
    EXPECT_LT(max_abs(reduced_initial_state(3) - ReducedState(1, 1, 1) / std::sqrt(3.0)), 1e-15);
    for (std::size_t n : {3u, 50u, 4096u}) {
        EXPECT_NEAR(reduced_initial_state(n).norm(), 1.0, 1e-15);
    }
    // Frozen from a 40-digit evaluation of (1/sqrt(1023) + sqrt(1022/1023) sqrt(1022)) / 32.
    const double overlap = std::abs(s_and_w_states(1024).s.dot(reduced_initial_state(1024)));
    EXPECT_NEAR(overlap, 0.99951159948246724, 1e-15);
    EXPECT_GE(overlap, 0.999);
}

TEST(embedding, initial_state_round_trip) {
    for (std::size_t n : {3u, 9u}) {
        const auto full = embed(reduced_initial_state(n), n, 0);
        const auto expected = initial_state({n, 0.0, 0.0, 0});
        EXPECT_LT(oracle::max_abs_diff(full.amplitudes(), expected.amplitudes()), 1e-15);
        const auto p = project(expected, 0);
        EXPECT_LT(max_abs(p.reduced - reduced_initial_state(n)), 1e-15);
        EXPECT_LT(p.residual, 1e-14);
    }
}

TEST(embedding, ab_is_fully_marked) {
    const auto full = embed(ReducedState(1, 0, 0), 12, 5);
    EXPECT_NEAR(success_probability(full, 5), 1.0, 1e-15);
    EXPECT_NEAR(full.norm(), 1.0, 1e-15);
}

TEST(embedding, project_inverts_embed) {
    for (unsigned seed = 0; seed < 20; ++seed) {
        const std::size_t n = 3 + seed % 9;
        const Vertex marked = seed % n;
        const auto x = random_reduced(seed);
        const auto full = embed(x, n, marked);
        EXPECT_NEAR(full.norm(), 1.0, 1e-14);
        const auto p = project(full, marked);
        EXPECT_LT(max_abs(p.reduced - x), 1e-14);
        EXPECT_LT(p.residual, 1e-14);
    }
}

TEST(embedding, residual_of_single_pair) {
    for (std::size_t n : {4u, 10u}) {
        StateVector full(n);
        full.at(1, 2) = 1.0;
        const double nd = static_cast<double>(n);
        const auto p = project(full, 0);
        EXPECT_NEAR(p.residual * p.residual, 1.0 - 1.0 / ((nd - 1.0) * (nd - 2.0)), 1e-14);
    }
}

TEST(trajectory, stays_in_subspace_and_matches_reduced_evolution) {
    for (std::size_t n : {4u, 16u, 64u}) {
        for (double phi : {0.0, 0.3, kAsin08}) {
            for (double eta : {0.0, eta_for(phi, n)}) {
                const WalkParams params{n, phi, eta, 0};
                const auto reduced = reduced_evolve(n, phi, eta, 200);
                auto x = initial_state(params);
                double worst_prob = 0.0, worst_residual = 0.0;
                for (std::size_t t = 0; t <= 200; ++t) {
                    worst_prob = std::max(worst_prob, std::abs(success_probability(x, 0) - reduced[t]));
                    worst_residual = std::max(worst_residual, project(x, 0).residual);
                    x = step(std::move(x), params);
                }
                EXPECT_LT(worst_prob, 1e-10) << "n=" << n << " phi=" << phi << " eta=" << eta;
                EXPECT_LT(worst_residual, 1e-10);
            }
        }
    }
}
