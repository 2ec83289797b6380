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

#ifndef LAZYWALK_WALK_H
#define LAZYWALK_WALK_H

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace lazywalk {

using Amplitude = std::complex<double>;
using Vertex = std::size_t;

/// Parameters of one coined walk search on the complete graph.
///
/// The hop is the lazy flip-flop shift cos(phi) S + i sin(phi) I. `eta` is the
/// phase used by the generalized coin (1 + e^{i eta})|s_c><s_c| - I and the
/// generalized oracle -e^{-i eta} on the marked vertex; eta = 0 gives the
/// standard Grover coin and sign-flip oracle.
struct WalkParams {
    std::size_t n_vertices = 3;
    double phi = 0.0;
    double eta = 0.0;
    Vertex marked = 0;

    double alpha() const;
    Amplitude beta() const;

    /// Throws std::invalid_argument unless N >= 3, phi in [0, pi/2], eta is
    /// finite and marked < N.
    void validate() const;

    /// Builds params from a hop/stay amplitude pair. Only the family
    /// alpha = cos(phi) >= 0 real, beta = i sin(phi) with sin(phi) >= 0 and
    /// |alpha|^2 + |beta|^2 = 1 is accepted.
    static WalkParams from_amplitudes(
        std::size_t n_vertices, Amplitude alpha, Amplitude beta, double eta = 0.0, Vertex marked = 0);

    bool operator==(const WalkParams &) const = default;
};

/// Amplitudes over the (vertex, outgoing direction) basis of the complete graph.
///
/// Vertex v owns a contiguous block of N - 1 amplitudes; the direction towards
/// w sits at offset w if w < v and w - 1 otherwise.
class StateVector {
   public:
    /// All-zero state on N vertices.
    explicit StateVector(std::size_t n_vertices);
    StateVector(std::size_t n_vertices, std::vector<Amplitude> amplitudes);

    std::size_t n_vertices() const {
        return n_vertices_;
    }
    std::size_t degree() const {
        return n_vertices_ - 1;
    }
    std::size_t size() const {
        return amplitudes_.size();
    }

    /// Flat index of the amplitude at `v` pointing towards `w` (v != w).
    std::size_t index(Vertex v, Vertex w) const {
        return v * (n_vertices_ - 1) + (w < v ? w : w - 1);
    }
    /// Neighbour of `v` reached through coin direction `c`.
    Vertex neighbor(Vertex v, std::size_t c) const {
        return c < v ? c : c + 1;
    }

    Amplitude &at(Vertex v, Vertex w) {
        return amplitudes_[index(v, w)];
    }
    const Amplitude &at(Vertex v, Vertex w) const {
        return amplitudes_[index(v, w)];
    }

    std::span<Amplitude> block(Vertex v) {
        return {amplitudes_.data() + v * degree(), degree()};
    }
    std::span<const Amplitude> block(Vertex v) const {
        return {amplitudes_.data() + v * degree(), degree()};
    }

    std::span<Amplitude> amplitudes() {
        return amplitudes_;
    }
    std::span<const Amplitude> amplitudes() const {
        return amplitudes_;
    }

    double norm() const;

   private:
    std::size_t n_vertices_;
    std::vector<Amplitude> amplitudes_;
};

/// Equal superposition over all vertices and coin directions.
StateVector initial_state(const WalkParams &params);

// The operators below take the state by value and return the transformed
// state. Pass an rvalue (std::move) to transform in place without a copy.

/// Lazy flip-flop shift: (v, ->w) <- cos(phi) (w, ->v) + i sin(phi) (v, ->w).
StateVector apply_lazy_shift(StateVector state, double phi);

/// Generalized Grover coin on every vertex: a <- (1 + e^{i eta}) mean(block) - a.
StateVector apply_coin(StateVector state, double eta);

/// Multiplies the marked vertex's block by -e^{-i eta}. Throws
/// std::out_of_range if `marked` is not a vertex.
StateVector apply_oracle(StateVector state, Vertex marked, double eta);

/// One walk iteration: oracle, then coin, then lazy shift.
StateVector step(StateVector state, const WalkParams &params);

/// Probability mass on the marked vertex, summed over its coin directions.
double success_probability(const StateVector &state, Vertex marked);

/// Success probability after 0, 1, ..., `steps` iterations from the initial
/// state. Element t is the value after t iterations.
std::vector<double> evolve(const WalkParams &params, std::size_t steps);

/// Spread (max distance from the class mean) of the amplitudes within each of
/// the three symmetry classes that the search dynamics preserves.
struct SymmetrySpread {
    double marked_block = 0.0;
    double toward_marked = 0.0;
    double among_unmarked = 0.0;

    double max() const;
};

SymmetrySpread symmetry_spread(const StateVector &state, Vertex marked);

}  // namespace lazywalk

#endif  // LAZYWALK_WALK_H
