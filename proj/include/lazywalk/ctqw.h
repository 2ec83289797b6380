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

#ifndef LAZYWALK_CTQW_H
#define LAZYWALK_CTQW_H

#include <cstddef>

#include <Eigen/Dense>

#include "lazywalk/walk.h"

namespace lazywalk {

// Continuous-time search with Hamiltonian H = -gamma (1 - epsilon) A - |a><a|,
// A the adjacency matrix of the complete graph without self-loops. The
// barrier scales every hop amplitude by (1 - epsilon).
//
// From the uniform state the dynamics stays in span{|a>, |b>}, |b> uniform over
// the unmarked vertices, where
//   H = [ -1             -g sqrt(N-1) ]
//       [ -g sqrt(N-1)   -g (N-2)     ],   g = gamma (1 - epsilon).

struct CtqwParams {
    std::size_t n_vertices = 2;
    double epsilon = 0.0;
    double gamma = 0.5;
    Vertex marked = 0;

    /// Throws std::invalid_argument unless N >= 2, epsilon in [0, 1),
    /// gamma > 0 and marked < N.
    void validate() const;
};

/// Jumping rate that cancels the barrier: 1/(N (1 - epsilon)). Throws
/// std::invalid_argument for epsilon outside [0, 1).
double corrected_gamma(std::size_t n_vertices, double epsilon);

/// Effective 2x2 Hamiltonian in the (|a>, |b>) basis.
Eigen::Matrix2d effective_hamiltonian(const CtqwParams &params);

/// exp(-i H t) on the (|a>, |b>) plane, closed form from the spectral
/// decomposition of the real symmetric H.
Eigen::Matrix2cd ctqw_propagator(const CtqwParams &params, double t);

/// |<a| exp(-i H t) |uniform>|^2.
double ctqw_success_probability(const CtqwParams &params, double t);

/// pi sqrt(N) / 2.
double ctqw_runtime(std::size_t n_vertices);

}  // namespace lazywalk

#endif  // LAZYWALK_CTQW_H
