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

#include "lazywalk/phase_matching.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace lazywalk {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

// cos(x) below this is treated as a pole of tan(x).
constexpr double kTangentPole = 1e-12;

void require_vertices(std::size_t n_vertices) {
    if (n_vertices < 3) {
        throw std::invalid_argument("phase matching needs N >= 3, got " + std::to_string(n_vertices));
    }
}

void require_phi(double phi) {
    if (!(phi >= 0.0 && phi <= kHalfPi)) {
        throw std::invalid_argument("barrier phase phi must lie in [0, pi/2], got " + std::to_string(phi));
    }
}

bool is_blocking(double phi) {
    return phi >= kHalfPi;
}

double checked_tan(double x, const char *what) {
    if (std::abs(std::cos(x)) < kTangentPole) {
        throw TangentSingularity(std::string("hoyer_residual: ") + what + " is singular");
    }
    return std::tan(x);
}

}  // namespace

double overlap_angle(std::size_t n_vertices) {
    require_vertices(n_vertices);
    return std::asin(1.0 / std::sqrt(2.0 * static_cast<double>(n_vertices - 1)));
}

OrBlocked<double> corrected_eta(double phi, std::size_t n_vertices) {
    require_vertices(n_vertices);
    require_phi(phi);
    if (is_blocking(phi)) {
        return Blocked{};
    }
    const double n = static_cast<double>(n_vertices);
    return -2.0 * std::atan2(std::sin(phi) * (n - 1.0), std::cos(phi) * (n - 2.0));
}

double hoyer_residual(double phi, double eta, double theta) {
    if (!std::isfinite(phi) || !std::isfinite(eta) || !std::isfinite(theta)) {
        throw std::invalid_argument("hoyer_residual: arguments must be finite");
    }
    const double lhs = checked_tan(-phi, "tan(-phi)");
    const double half_eta = checked_tan(eta / 2.0, "tan(eta/2)");
    const double sin_theta = std::sin(theta);
    return lhs - half_eta * (1.0 - 2.0 * sin_theta * sin_theta);
}

double rotation_angle_sigma(double phi, std::size_t n_vertices) {
    require_vertices(n_vertices);
    require_phi(phi);
    // max(0, .) absorbs the rounding of 1 + cos(pi) near the blocking point.
    const double arg = std::sqrt(std::max(0.0, (1.0 + std::cos(2.0 * phi)) / static_cast<double>(n_vertices)));
    if (arg > 1.0) {
        throw std::logic_error("rotation_angle_sigma: arcsin argument exceeds 1");
    }
    return std::asin(arg);
}

OrBlocked<RuntimeEstimate> runtime_t_star(double phi, std::size_t n_vertices) {
    require_vertices(n_vertices);
    require_phi(phi);
    const double sigma = rotation_angle_sigma(phi, n_vertices);
    if (is_blocking(phi) || sigma <= 0.0) {
        return Blocked{};
    }
    RuntimeEstimate estimate;
    estimate.exact = std::numbers::pi / (2.0 * sigma);
    estimate.steps = static_cast<long>(std::floor(estimate.exact + 0.5));
    estimate.asymptotic =
        std::numbers::pi * std::sqrt(static_cast<double>(n_vertices)) / (2.0 * std::sqrt(1.0 + std::cos(2.0 * phi)));
    return estimate;
}

OrBlocked<double> blocking_regime_runtime(double delta, std::size_t n_vertices) {
    require_vertices(n_vertices);
    if (!(delta >= 0.0 && delta <= kHalfPi)) {
        throw std::invalid_argument("delta must lie in [0, pi/2], got " + std::to_string(delta));
    }
    if (delta == 0.0) {
        return Blocked{};
    }
    return std::numbers::pi * std::sqrt(static_cast<double>(n_vertices)) / (2.0 * std::numbers::sqrt2 * delta);
}

PhasePlan make_phase_plan(std::size_t n_vertices, double phi) {
    PhasePlan plan;
    plan.n_vertices = n_vertices;
    plan.phi = phi;
    plan.theta = overlap_angle(n_vertices);
    plan.eta = corrected_eta(phi, n_vertices);
    plan.sigma = rotation_angle_sigma(phi, n_vertices);
    plan.t_star = runtime_t_star(phi, n_vertices);
    plan.delta = kHalfPi - phi;
    return plan;
}

std::string describe(const PhasePlan &plan) {
    char buf[512];
    std::string out;
    std::snprintf(buf, sizeof(buf), "N=%zu\nphi=%.12g\ntheta=%.12g\n", plan.n_vertices, plan.phi, plan.theta);
    out += buf;
    if (const auto *eta = std::get_if<double>(&plan.eta)) {
        std::snprintf(buf, sizeof(buf), "eta=%.12g\n", *eta);
    } else {
        std::snprintf(buf, sizeof(buf), "eta=blocked\n");
    }
    out += buf;
    std::snprintf(buf, sizeof(buf), "sigma=%.12g\n", plan.sigma);
    out += buf;
    if (const auto *t = std::get_if<RuntimeEstimate>(&plan.t_star)) {
        std::snprintf(
            buf, sizeof(buf), "t_star=%ld\nt_star_exact=%.12g\nt_star_asymptotic=%.12g\n", t->steps, t->exact,
            t->asymptotic);
    } else {
        std::snprintf(buf, sizeof(buf), "t_star=inf\n");
    }
    out += buf;
    std::snprintf(buf, sizeof(buf), "delta=%.12g\n", plan.delta);
    out += buf;
    return out;
}

}  // namespace lazywalk
