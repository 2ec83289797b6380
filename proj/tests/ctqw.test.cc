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

#include <Eigen/Eigenvalues>

#include "gtest/gtest.h"

using namespace lazywalk;

namespace {

// Marked-vertex probability from the full N x N Hamiltonian, diagonalised.
double dense_probability(std::size_t n, double epsilon, double gamma, std::size_t marked, double t) {
    const auto dim = static_cast<Eigen::Index>(n);
    Eigen::MatrixXd h = -gamma * (1.0 - epsilon) * (Eigen::MatrixXd::Ones(dim, dim) - Eigen::MatrixXd::Identity(dim, dim));
    h(static_cast<Eigen::Index>(marked), static_cast<Eigen::Index>(marked)) -= 1.0;
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    const Eigen::VectorXd start = Eigen::VectorXd::Constant(dim, 1.0 / std::sqrt(static_cast<double>(n)));
    const Eigen::VectorXd coeff = solver.eigenvectors().transpose() * start;
    std::complex<double> amp = 0.0;
    for (Eigen::Index k = 0; k < dim; ++k) {
        amp += solver.eigenvectors()(static_cast<Eigen::Index>(marked), k) * coeff(k) *
               std::polar(1.0, -solver.eigenvalues()(k) * t);
    }
    return std::norm(amp);
}

CtqwParams params(std::size_t n, double epsilon, double gamma) {
    CtqwParams p;
    p.n_vertices = n;
    p.epsilon = epsilon;
    p.gamma = gamma;
    return p;
}

}  // namespace

TEST(ctqw, closed_form_matches_dense_hamiltonian) {
    for (std::size_t n : {16u, 64u}) {
        for (double epsilon : {0.0, 0.3, 0.8}) {
            for (double gamma : {1.0 / static_cast<double>(n), 0.05, corrected_gamma(n, epsilon)}) {
                for (double t : {0.0, 0.7, 3.0, 12.5, 40.0}) {
                    const double expected = dense_probability(n, epsilon, gamma, n / 2, t);
                    EXPECT_NEAR(ctqw_success_probability(params(n, epsilon, gamma), t), expected, 1e-12)
                        << "n=" << n << " eps=" << epsilon << " gamma=" << gamma << " t=" << t;
                }
            }
        }
    }
}

TEST(ctqw, effective_hamiltonian_entries) {
    const Eigen::Matrix2d h = effective_hamiltonian(params(10, 0.5, 0.2));
    EXPECT_DOUBLE_EQ(h(0, 0), -1.0);
    EXPECT_DOUBLE_EQ(h(0, 1), -0.1 * 3.0);
    EXPECT_DOUBLE_EQ(h(1, 0), h(0, 1));
    EXPECT_DOUBLE_EQ(h(1, 1), -0.1 * 8.0);
}

TEST(ctqw, propagator_is_unitary) {
    for (double t : {0.0, 1.0, 50.0, 1e4}) {
        const Eigen::Matrix2cd u = ctqw_propagator(params(1024, 0.5, corrected_gamma(1024, 0.5)), t);
        EXPECT_LT((u.adjoint() * u - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(ctqw, corrected_gamma_reproduces_barrier_free_curve) {
    for (std::size_t n : {16u, 1024u}) {
        const auto reference = params(n, 0.0, 1.0 / static_cast<double>(n));
        for (double epsilon : {0.1, 0.25, 0.5, 0.9}) {
            const auto corrected = params(n, epsilon, corrected_gamma(n, epsilon));
            double worst = 0.0;
            for (int k = 0; k <= 400; ++k) {
                const double t = 2.0 * ctqw_runtime(n) * k / 400.0;
                worst = std::max(
                    worst, std::abs(ctqw_success_probability(corrected, t) - ctqw_success_probability(reference, t)));
            }
            EXPECT_LT(worst, 1e-10) << "n=" << n << " eps=" << epsilon;
        }
    }
}

TEST(ctqw, uncorrected_barrier_degrades_search) {
    const double runtime = ctqw_runtime(1024);
    double best = 0.0;
    for (int k = 0; k <= 400; ++k) {
        best = std::max(best, ctqw_success_probability(params(1024, 0.5, 1.0 / 1024.0), 2.0 * runtime * k / 400.0));
    }
    EXPECT_LT(best, 0.1);
}

TEST(ctqw, probability_bounds_and_start) {
    const auto p = params(1024, 0.25, corrected_gamma(1024, 0.25));
    EXPECT_NEAR(ctqw_success_probability(p, 0.0), 1.0 / 1024.0, 1e-15);
    for (int k = 0; k <= 100; ++k) {
        const double prob = ctqw_success_probability(p, k * 1.3);
        EXPECT_GE(prob, 0.0);
        EXPECT_LE(prob, 1.0 + 1e-12);
    }
}

TEST(ctqw, peak_at_predicted_time) {
    const auto p = params(1024, 0.0, 1.0 / 1024.0);
    const double runtime = ctqw_runtime(1024);
    EXPECT_NEAR(runtime, std::numbers::pi * 16.0, 1e-12);
    EXPECT_NEAR(ctqw_success_probability(p, runtime), 1.0, 1e-6);
    double best_t = 0.0, best = -1.0;
    for (int k = 0; k <= 20000; ++k) {
        const double t = 2.0 * runtime * k / 20000.0;
        const double prob = ctqw_success_probability(p, t);
        if (prob > best) {
            best = prob;
            best_t = t;
        }
    }
    EXPECT_NEAR(best_t / runtime, 1.0, 0.01);
}

TEST(ctqw, invalid_inputs) {
    EXPECT_THROW(corrected_gamma(1024, 1.0), std::invalid_argument);
    EXPECT_THROW(corrected_gamma(1024, -0.1), std::invalid_argument);
    EXPECT_THROW(corrected_gamma(1, 0.0), std::invalid_argument);
    EXPECT_THROW(ctqw_success_probability(params(16, 1.0, 0.1), 1.0), std::invalid_argument);
    EXPECT_THROW(ctqw_success_probability(params(16, 0.0, 0.0), 1.0), std::invalid_argument);
    EXPECT_THROW(ctqw_propagator(params(16, 0.0, 0.1), -1.0), std::invalid_argument);
    auto bad = params(16, 0.0, 0.1);
    bad.marked = 16;
    EXPECT_THROW(bad.validate(), std::invalid_argument);
}
