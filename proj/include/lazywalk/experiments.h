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

#ifndef LAZYWALK_EXPERIMENTS_H
#define LAZYWALK_EXPERIMENTS_H

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lazywalk/phase_matching.h"
#include "lazywalk/walk.h"

namespace lazywalk {

/// Full-space simulation is refused above this many vertices unless the caller
/// raises the cap (N = 4096 is ~16.8M amplitudes).
inline constexpr std::size_t kDefaultMaxFullN = 4096;

/// Invalid experiment description.
class SpecError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Output file could not be written.
class OutputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

enum class Mode { kDtqwFull, kDtqwReduced, kCtqw };

std::string_view to_string(Mode mode);
std::optional<Mode> parse_mode(std::string_view text);

struct ExperimentSpec {
    Mode mode = Mode::kDtqwFull;
    std::size_t n_vertices = 1024;
    /// |beta|; the stay amplitude is i * beta and phi = asin(beta).
    double beta = 0.0;
    bool corrected = false;
    /// Number of walk iterations, or number of time intervals for ctqw.
    std::size_t steps = 100;
    /// ctqw only: the time grid is steps + 1 points on [0, t_max]. Zero means
    /// twice the predicted search time.
    double t_max = 0.0;
    /// ctqw only: hop amplitude reduction.
    double epsilon = 0.0;
    /// ctqw only: jumping rate. Empty means corrected_gamma(N, epsilon), or
    /// 1/N when `corrected` is false.
    std::optional<double> gamma;
    Vertex marked = 0;
    std::string out;

    /// Throws SpecError.
    void validate() const;

    double phi() const;
    double eta() const;
    WalkParams walk_params() const;

    /// `[simulate]` section of key=value lines, accepted back by the CLI's
    /// global `--config` option.
    std::string to_config() const;

    bool operator==(const ExperimentSpec &) const = default;
};

struct Sample {
    double x = 0.0;  // step index or time
    double probability = 0.0;
};

struct ExperimentSummary {
    double peak_probability = 0.0;
    double peak_at = 0.0;
    /// Predicted search time: t* for the walk, pi sqrt(N)/2 for ctqw. Empty
    /// when the barrier blocks the walk.
    std::optional<double> predicted;
};

struct ExperimentResult {
    ExperimentSpec spec;
    std::vector<Sample> rows;
    ExperimentSummary summary;
};

/// Runs one experiment. Throws SpecError for invalid specs, including full
/// mode above `max_full_n` vertices.
ExperimentResult run_experiment(const ExperimentSpec &spec, std::size_t max_full_n = kDefaultMaxFullN);

std::string format_csv(const ExperimentResult &result);
std::string format_summary(const ExperimentResult &result);

/// Throws OutputError if the file cannot be opened or written.
void write_text_file(const std::string &path, std::string_view contents);

struct Peak {
    std::size_t index = 0;
    double value = 0.0;
};

/// Largest value; the earliest index wins ties.
Peak find_peak(std::span<const double> values);

/// Steps covering the first full rotation, ceil(2 t*), or empty if blocked.
std::optional<std::size_t> first_rotation_steps(double phi, std::size_t n_vertices);

struct SweepGrid {
    std::vector<std::size_t> n_values;
    std::vector<double> betas;
    bool corrected = true;
    /// Zero means first_rotation_steps per grid point.
    std::size_t steps = 0;
    bool force_reduced = false;
    std::size_t max_full_n = kDefaultMaxFullN;
    unsigned workers = 1;
};

struct SweepRow {
    std::size_t n_vertices = 0;
    double beta = 0.0;
    double eta = 0.0;
    double sigma = 0.0;
    OrBlocked<RuntimeEstimate> predicted;
    std::size_t measured = 0;
    double peak_probability = 0.0;
    std::size_t steps = 0;
    bool reduced = false;
};

/// Simulates every (N, beta) pair, N-major. Points run on up to
/// `grid.workers` threads; rows come back in grid order.
std::vector<SweepRow> run_sweep(const SweepGrid &grid);

std::string format_sweep_csv(std::span<const SweepRow> rows);

}  // namespace lazywalk

#endif  // LAZYWALK_EXPERIMENTS_H
