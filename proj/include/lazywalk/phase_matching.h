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

#ifndef LAZYWALK_PHASE_MATCHING_H
#define LAZYWALK_PHASE_MATCHING_H

#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>

namespace lazywalk {

/// The particle never hops (phi = pi/2, or delta = 0): no correction phase
/// exists and the walk never rotates towards the marked vertex.
struct Blocked {
    bool operator==(const Blocked &) const = default;
};

template <typename T>
using OrBlocked = std::variant<T, Blocked>;

template <typename T>
bool is_blocked(const OrBlocked<T> &value) {
    return std::holds_alternative<Blocked>(value);
}

/// Thrown by hoyer_residual when one of its tangents is singular.
class TangentSingularity : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Overlap angle of the rotation plane: sin(theta) = 1/sqrt(2(N-1)).
double overlap_angle(std::size_t n_vertices);

/// Coin/oracle phase that makes the lazy walk rotate fully onto the marked
/// vertex: eta = -2 atan(tan(phi) (N-1)/(N-2)), evaluated with atan2 so it
/// stays finite as phi -> pi/2. Blocked at phi = pi/2.
OrBlocked<double> corrected_eta(double phi, std::size_t n_vertices);

/// tan(-phi) - tan(eta/2) (1 - 2 sin^2 theta). Zero iff the two phases satisfy
/// the amplitude amplification matching condition.
double hoyer_residual(double phi, double eta, double theta);

/// Per-step rotation angle of the corrected walk,
/// sigma = asin(sqrt((1 + cos 2 phi)/N)).
double rotation_angle_sigma(double phi, std::size_t n_vertices);

struct RuntimeEstimate {
    long steps = 0;          // round-half-up of `exact`
    double exact = 0.0;      // pi / (2 sigma)
    double asymptotic = 0.0; // pi sqrt(N) / (2 sqrt(1 + cos 2 phi))

    bool operator==(const RuntimeEstimate &) const = default;
};

OrBlocked<RuntimeEstimate> runtime_t_star(double phi, std::size_t n_vertices);

/// Near-blocking runtime pi sqrt(N) / (2 sqrt(2) delta) for phi = pi/2 - delta.
/// Only meaningful as delta -> 0.
OrBlocked<double> blocking_regime_runtime(double delta, std::size_t n_vertices);

struct PhasePlan {
    std::size_t n_vertices = 0;
    double phi = 0.0;
    double theta = 0.0;
    OrBlocked<double> eta;
    double sigma = 0.0;
    OrBlocked<RuntimeEstimate> t_star;
    double delta = 0.0;  // pi/2 - phi
};

PhasePlan make_phase_plan(std::size_t n_vertices, double phi);

std::string describe(const PhasePlan &plan);

}  // namespace lazywalk

#endif  // LAZYWALK_PHASE_MATCHING_H
