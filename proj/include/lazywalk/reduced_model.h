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

#ifndef LAZYWALK_REDUCED_MODEL_H
#define LAZYWALK_REDUCED_MODEL_H

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "lazywalk/walk.h"

namespace lazywalk {

// Search on the complete graph started from the uniform state never leaves the
// three dimensional span of
//   |ab>  marked vertex, uniform over its directions,
//   |ba>  unmarked vertices, each pointing at the marked one,
//   |bb>  unmarked vertices, uniform over directions to other unmarked ones.
// Reduced states and matrices use that order.

using ReducedState = Eigen::Vector3cd;
using ReducedMatrix = Eigen::Matrix3cd;

namespace reduced_basis {
inline constexpr Eigen::Index kAB = 0;
inline constexpr Eigen::Index kBA = 1;
inline constexpr Eigen::Index kBB = 2;
}  // namespace reduced_basis

struct ReducedOperators {
    ReducedMatrix shift;        // cos(phi) S + i sin(phi) I
    ReducedMatrix coin_oracle;  // generalized coin times generalized oracle
    ReducedMatrix step;         // shift * coin_oracle
};

/// Throws std::invalid_argument for N < 3.
ReducedOperators build_reduced_operators(std::size_t n_vertices, double phi, double eta);

/// Phase-independent eigenvector: +1 of the shift, -1 of every coin/oracle
/// product. Proportional to (-sqrt(N-2), -sqrt(N-2), 1).
ReducedState psi_minus_one(std::size_t n_vertices);

/// The two non-orthogonal states spanning the rotation plane.
struct RotationPlane {
    ReducedState s;  // (0, 1/sqrt(N-1), sqrt((N-2)/(N-1)))
    ReducedState w;  // (1, -1, 0)/sqrt(2)
};

RotationPlane s_and_w_states(std::size_t n_vertices);

/// Unit vectors orthogonal to psi_{-1} and to |w> (resp. |s>), phased so the
/// |bb> component is real and positive.
ReducedState w_perp(std::size_t n_vertices);
ReducedState s_perp(std::size_t n_vertices);

/// (1, 1, sqrt(N-2))/sqrt(N), the uniform state.
ReducedState reduced_initial_state(std::size_t n_vertices);

/// Lifts a reduced state into the full (vertex, direction) space.
StateVector embed(const ReducedState &reduced, std::size_t n_vertices, Vertex marked = 0);

struct Projection {
    ReducedState reduced;
    double residual = 0.0;  // norm of the part outside the reduced subspace
};

Projection project(const StateVector &full, Vertex marked = 0);

/// |ab|^2 after 0..steps applications of the reduced step matrix to the
/// reduced uniform state.
std::vector<double> reduced_evolve(std::size_t n_vertices, double phi, double eta, std::size_t steps);

/// Largest entry of |M^dagger M - I|.
double unitarity_error(const ReducedMatrix &m);

}  // namespace lazywalk

#endif  // LAZYWALK_REDUCED_MODEL_H
