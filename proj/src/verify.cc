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

#include "lazywalk/verify.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <map>
#include <stdexcept>

#include "lazywalk/phase_matching.h"
#include "lazywalk/reduced_model.h"
#include "lazywalk/walk.h"

namespace lazywalk {

namespace {

using C = std::complex<double>;

constexpr double kMatrixTolerance = 1e-12;
constexpr double kTrajectoryTolerance = 1e-10;
constexpr double kExactTolerance = 1e-14;

double max_abs(const ReducedState &v) {
    return v.cwiseAbs().maxCoeff();
}

class Tally {
   public:
    void declare(const std::string &name, double tolerance) {
        order_.push_back(name);
        checks_[name] = {name, 0.0, tolerance};
    }
    void record(const std::string &name, double deviation) {
        auto &check = checks_.at(name);
        if (std::isnan(deviation)) {
            deviation = std::numeric_limits<double>::infinity();
        }
        check.max_deviation = std::max(check.max_deviation, deviation);
    }
    std::vector<InvariantCheck> results() const {
        std::vector<InvariantCheck> out;
        for (const auto &name : order_) {
            out.push_back(checks_.at(name));
        }
        return out;
    }

   private:
    std::vector<std::string> order_;
    std::map<std::string, InvariantCheck> checks_;
};

void check_reduced(Tally &tally, std::size_t n, double phi, double eta) {
    const ReducedOperators ops = build_reduced_operators(n, phi, eta);
    tally.record(
        "reduced-unitarity",
        std::max({unitarity_error(ops.shift), unitarity_error(ops.coin_oracle), unitarity_error(ops.step)}));

    const ReducedState psi = psi_minus_one(n);
    const C hop_phase = std::polar(1.0, phi);
    tally.record(
        "psi-minus-one-eigenvector",
        std::max(
            {max_abs(ops.coin_oracle * psi + psi), max_abs(ops.shift * psi - hop_phase * psi),
             max_abs(ops.step * psi + hop_phase * psi)}));

    const RotationPlane plane = s_and_w_states(n);
    const ReducedState wp = w_perp(n);
    const ReducedState sp = s_perp(n);
    tally.record(
        "lazy-shift-phases",
        std::max(
            max_abs(ops.shift * plane.w + std::polar(1.0, -phi) * plane.w),
            max_abs(ops.shift * wp - std::polar(1.0, phi) * wp)));
    tally.record(
        "coin-oracle-phases",
        std::max(max_abs(ops.coin_oracle * plane.s - std::polar(1.0, eta) * plane.s), max_abs(ops.coin_oracle * sp + sp)));
}

void check_trajectory(Tally &tally, std::size_t n, double phi, double eta, std::size_t steps) {
    const WalkParams params{n, phi, eta, 0};
    const auto reduced = reduced_evolve(n, phi, eta, steps);
    StateVector state = initial_state(params);
    for (std::size_t t = 0;; ++t) {
        tally.record("norm-conservation", std::abs(state.norm() - 1.0));
        tally.record("symmetry-classes", symmetry_spread(state, params.marked).max());
        tally.record("subspace-residual", project(state, params.marked).residual);
        tally.record("full-reduced-equivalence", std::abs(success_probability(state, params.marked) - reduced[t]));
        if (t == steps) {
            break;
        }
        state = step(std::move(state), params);
    }
}

}  // namespace

bool InvariantCheck::passed() const {
    return std::isfinite(max_deviation) && max_deviation < tolerance;
}

std::vector<InvariantCheck> run_verification(const VerifyOptions &options) {
    if (options.n_values.empty() || options.phis.empty()) {
        throw std::invalid_argument("verify needs at least one N and one phi");
    }
    Tally tally;
    tally.declare("rotation-plane", kExactTolerance);
    tally.declare("reduced-unitarity", kMatrixTolerance);
    tally.declare("psi-minus-one-eigenvector", kMatrixTolerance);
    tally.declare("lazy-shift-phases", kMatrixTolerance);
    tally.declare("coin-oracle-phases", kMatrixTolerance);
    tally.declare("hoyer-residual", kMatrixTolerance);
    tally.declare("sigma-cross-check", kMatrixTolerance);
    tally.declare("rotation-amplitude-exact-eta", kMatrixTolerance);
    tally.declare("norm-conservation", kTrajectoryTolerance);
    tally.declare("symmetry-classes", kTrajectoryTolerance);
    tally.declare("subspace-residual", kTrajectoryTolerance);
    tally.declare("full-reduced-equivalence", kTrajectoryTolerance);

    for (std::size_t n : options.n_values) {
        const RotationPlane plane = s_and_w_states(n);
        const ReducedState psi = psi_minus_one(n);
        const double theta = overlap_angle(n);
        tally.record(
            "rotation-plane",
            std::max(
                {std::abs(std::abs(plane.s.dot(plane.w)) - std::sin(theta)), std::abs(psi.dot(plane.s)),
                 std::abs(psi.dot(plane.w))}));

        for (double phi : options.phis) {
            const auto corrected = corrected_eta(phi, n);
            std::vector<double> etas{0.0};
            if (const auto *eta = std::get_if<double>(&corrected)) {
                const double matched = options.force_uncorrected_eta ? 0.0 : *eta;
                try {
                    tally.record("hoyer-residual", std::abs(hoyer_residual(phi, matched, theta)));
                } catch (const TangentSingularity &) {
                    tally.record("hoyer-residual", std::numeric_limits<double>::infinity());
                }
                if (matched != 0.0) {
                    etas.push_back(matched);
                }

                // Rotation amplitude |<w|U'|psi0>|: sin(sigma) at eta = -2 phi,
                // sqrt((1 + cos eta)/N) at the exact corrected eta.
                const ReducedState psi0 = reduced_initial_state(n);
                const double approx =
                    std::abs(plane.w.dot(build_reduced_operators(n, phi, -2.0 * phi).step * psi0));
                tally.record("sigma-cross-check", std::abs(approx - std::sin(rotation_angle_sigma(phi, n))));
                const double exact = std::abs(plane.w.dot(build_reduced_operators(n, phi, *eta).step * psi0));
                tally.record(
                    "rotation-amplitude-exact-eta",
                    std::abs(exact - std::sqrt((1.0 + std::cos(*eta)) / static_cast<double>(n))));
            }
            for (double eta : etas) {
                check_reduced(tally, n, phi, eta);
                check_trajectory(tally, n, phi, eta, options.steps);
            }
        }
    }
    return tally.results();
}

std::string format_report(std::span<const InvariantCheck> checks) {
    std::string out;
    char buf[256];
    for (const auto &check : checks) {
        std::snprintf(
            buf, sizeof(buf), "%-4s %-30s max_deviation=%.3e tolerance=%.1e\n", check.passed() ? "ok" : "FAIL",
            check.name.c_str(), check.max_deviation, check.tolerance);
        out += buf;
    }
    return out;
}

}  // namespace lazywalk
