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

#include "lazywalk/experiments.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <thread>

#include "lazywalk/ctqw.h"
#include "lazywalk/reduced_model.h"

namespace lazywalk {

namespace {

std::string format_double(const char *fmt, double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, value);
    return buf;
}

// Probabilities and times in CSV output.
std::string fixed12(double value) {
    return format_double("%.12g", value);
}

// Lossless form for values that must round-trip through a config file.
std::string exact(double value) {
    return format_double("%.17g", value);
}

std::vector<double> simulate_walk(const ExperimentSpec &spec, std::size_t steps, bool reduced) {
    const WalkParams params = spec.walk_params();
    if (reduced) {
        return reduced_evolve(params.n_vertices, params.phi, params.eta, steps);
    }
    return evolve(params, steps);
}

}  // namespace

std::string_view to_string(Mode mode) {
    switch (mode) {
        case Mode::kDtqwFull:
            return "dtqw-full";
        case Mode::kDtqwReduced:
            return "dtqw-reduced";
        case Mode::kCtqw:
            return "ctqw";
    }
    return "unknown";
}

std::optional<Mode> parse_mode(std::string_view text) {
    for (Mode m : {Mode::kDtqwFull, Mode::kDtqwReduced, Mode::kCtqw}) {
        if (text == to_string(m)) {
            return m;
        }
    }
    return std::nullopt;
}

void ExperimentSpec::validate() const {
    const bool ctqw = mode == Mode::kCtqw;
    if (n_vertices < (ctqw ? 2u : 3u)) {
        throw SpecError("n must be at least " + std::to_string(ctqw ? 2 : 3) + ", got " + std::to_string(n_vertices));
    }
    if (marked >= n_vertices) {
        throw SpecError("marked vertex " + std::to_string(marked) + " out of range");
    }
    if (ctqw) {
        if (!(epsilon >= 0.0 && epsilon < 1.0)) {
            throw SpecError("epsilon must lie in [0, 1), got " + std::to_string(epsilon));
        }
        if (gamma && !(*gamma > 0.0 && std::isfinite(*gamma))) {
            throw SpecError("gamma must be positive");
        }
        if (!(t_max >= 0.0 && std::isfinite(t_max))) {
            throw SpecError("t-max must be finite and non-negative");
        }
        return;
    }
    if (!(beta >= 0.0 && beta <= 1.0)) {
        throw SpecError("beta must lie in [0, 1], got " + std::to_string(beta));
    }
    if (corrected && beta >= 1.0) {
        throw SpecError("beta = 1 blocks every hop; no corrected walk exists");
    }
}

double ExperimentSpec::phi() const {
    return std::asin(std::clamp(beta, 0.0, 1.0));
}

double ExperimentSpec::eta() const {
    if (!corrected) {
        return 0.0;
    }
    const auto eta = corrected_eta(phi(), n_vertices);
    if (is_blocked(eta)) {
        throw SpecError("beta = 1 blocks every hop; no corrected walk exists");
    }
    return std::get<double>(eta);
}

WalkParams ExperimentSpec::walk_params() const {
    WalkParams params{n_vertices, phi(), eta(), marked};
    params.validate();
    return params;
}

std::string ExperimentSpec::to_config() const {
    std::string out_text = "[simulate]\n";
    out_text += "mode=" + std::string(to_string(mode)) + "\n";
    out_text += "n=" + std::to_string(n_vertices) + "\n";
    out_text += "beta=" + exact(beta) + "\n";
    out_text += std::string("corrected=") + (corrected ? "true" : "false") + "\n";
    out_text += "steps=" + std::to_string(steps) + "\n";
    out_text += "t-max=" + exact(t_max) + "\n";
    out_text += "epsilon=" + exact(epsilon) + "\n";
    if (gamma) {
        out_text += "gamma=" + exact(*gamma) + "\n";
    }
    out_text += "marked=" + std::to_string(marked) + "\n";
    if (!out.empty()) {
        out_text += "out=\"" + out + "\"\n";
    }
    return out_text;
}

ExperimentResult run_experiment(const ExperimentSpec &spec, std::size_t max_full_n) {
    spec.validate();
    ExperimentResult result;
    result.spec = spec;

    if (spec.mode == Mode::kCtqw) {
        CtqwParams params;
        params.n_vertices = spec.n_vertices;
        params.epsilon = spec.epsilon;
        params.gamma = spec.gamma.value_or(
            spec.corrected ? corrected_gamma(spec.n_vertices, spec.epsilon) : 1.0 / static_cast<double>(spec.n_vertices));
        params.marked = spec.marked;
        params.validate();
        const double runtime = ctqw_runtime(spec.n_vertices);
        const double t_max = spec.t_max > 0.0 ? spec.t_max : 2.0 * runtime;
        result.rows.reserve(spec.steps + 1);
        for (std::size_t k = 0; k <= spec.steps; ++k) {
            const double t = spec.steps == 0 ? 0.0 : t_max * static_cast<double>(k) / static_cast<double>(spec.steps);
            result.rows.push_back({t, ctqw_success_probability(params, t)});
        }
        result.summary.predicted = runtime;
    } else {
        if (spec.mode == Mode::kDtqwFull && spec.n_vertices > max_full_n) {
            throw SpecError(
                "full-space simulation capped at N=" + std::to_string(max_full_n) +
                "; use --mode dtqw-reduced or raise --max-full-n");
        }
        const auto probabilities = simulate_walk(spec, spec.steps, spec.mode == Mode::kDtqwReduced);
        result.rows.reserve(probabilities.size());
        for (std::size_t t = 0; t < probabilities.size(); ++t) {
            result.rows.push_back({static_cast<double>(t), probabilities[t]});
        }
        const auto t_star = runtime_t_star(spec.phi(), spec.n_vertices);
        if (const auto *estimate = std::get_if<RuntimeEstimate>(&t_star)) {
            result.summary.predicted = static_cast<double>(estimate->steps);
        }
    }

    std::vector<double> probabilities;
    probabilities.reserve(result.rows.size());
    for (const auto &row : result.rows) {
        probabilities.push_back(row.probability);
    }
    const Peak peak = find_peak(probabilities);
    result.summary.peak_probability = peak.value;
    result.summary.peak_at = result.rows[peak.index].x;
    return result;
}

std::string format_csv(const ExperimentResult &result) {
    const bool ctqw = result.spec.mode == Mode::kCtqw;
    std::string csv = ctqw ? "time,probability\n" : "step,probability\n";
    for (const auto &row : result.rows) {
        if (ctqw) {
            csv += fixed12(row.x);
        } else {
            csv += std::to_string(static_cast<std::size_t>(row.x));
        }
        csv += ',';
        csv += fixed12(row.probability);
        csv += '\n';
    }
    return csv;
}

std::string format_summary(const ExperimentResult &result) {
    const auto &spec = result.spec;
    const bool ctqw = spec.mode == Mode::kCtqw;
    std::string line = "mode=" + std::string(to_string(spec.mode)) + " n=" + std::to_string(spec.n_vertices);
    if (ctqw) {
        line += " epsilon=" + fixed12(spec.epsilon);
    } else {
        line += " beta=" + fixed12(spec.beta);
    }
    line += std::string(" corrected=") + (spec.corrected ? "true" : "false");
    line += " peak_probability=" + fixed12(result.summary.peak_probability);
    line += (ctqw ? " peak_time=" : " peak_step=") + fixed12(result.summary.peak_at);
    line += ctqw ? " predicted_time=" : " predicted_t_star=";
    line += result.summary.predicted ? fixed12(*result.summary.predicted) : "inf";
    return line;
}

void write_text_file(const std::string &path, std::string_view contents) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw OutputError("cannot open '" + path + "' for writing");
    }
    file.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    file.flush();
    if (!file) {
        throw OutputError("failed writing '" + path + "'");
    }
}

Peak find_peak(std::span<const double> values) {
    Peak peak;
    if (values.empty()) {
        return peak;
    }
    peak.value = values[0];
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] > peak.value) {
            peak = {i, values[i]};
        }
    }
    return peak;
}

std::optional<std::size_t> first_rotation_steps(double phi, std::size_t n_vertices) {
    const auto t_star = runtime_t_star(phi, n_vertices);
    if (const auto *estimate = std::get_if<RuntimeEstimate>(&t_star)) {
        return static_cast<std::size_t>(std::ceil(2.0 * estimate->exact));
    }
    return std::nullopt;
}

std::vector<SweepRow> run_sweep(const SweepGrid &grid) {
    if (grid.n_values.empty() || grid.betas.empty()) {
        throw SpecError("sweep grid needs at least one N and one beta");
    }
    // Validate every point before launching work.
    std::vector<ExperimentSpec> points;
    for (std::size_t n : grid.n_values) {
        for (double beta : grid.betas) {
            ExperimentSpec spec;
            spec.mode = Mode::kDtqwReduced;
            spec.n_vertices = n;
            spec.beta = beta;
            spec.corrected = grid.corrected;
            spec.validate();
            if (grid.steps == 0 && !first_rotation_steps(spec.phi(), n)) {
                throw SpecError("beta = 1 never rotates; pass an explicit step count");
            }
            points.push_back(spec);
        }
    }

    std::vector<SweepRow> rows(points.size());
    std::vector<std::exception_ptr> errors(points.size());
    std::atomic<std::size_t> next{0};

    auto work = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++) {
            try {
                const ExperimentSpec &spec = points[i];
                SweepRow row;
                row.n_vertices = spec.n_vertices;
                row.beta = spec.beta;
                row.eta = spec.eta();
                row.sigma = rotation_angle_sigma(spec.phi(), spec.n_vertices);
                row.predicted = runtime_t_star(spec.phi(), spec.n_vertices);
                row.steps = grid.steps != 0 ? grid.steps : *first_rotation_steps(spec.phi(), spec.n_vertices);
                row.reduced = grid.force_reduced || spec.n_vertices > grid.max_full_n;
                const auto curve = simulate_walk(spec, row.steps, row.reduced);
                const Peak peak = find_peak(curve);
                row.measured = peak.index;
                row.peak_probability = peak.value;
                rows[i] = row;
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    const unsigned workers = std::clamp<unsigned>(grid.workers, 1u, static_cast<unsigned>(points.size()));
    {
        std::vector<std::jthread> threads;
        for (unsigned k = 1; k < workers; ++k) {
            threads.emplace_back(work);
        }
        work();
    }
    for (const auto &error : errors) {
        if (error) {
            std::rethrow_exception(error);
        }
    }
    return rows;
}

std::string format_sweep_csv(std::span<const SweepRow> rows) {
    std::string csv = "n,beta,eta,sigma,t_star_predicted,t_star_measured,peak_probability,engine\n";
    for (const auto &row : rows) {
        csv += std::to_string(row.n_vertices) + ',' + fixed12(row.beta) + ',' + fixed12(row.eta) + ',' +
               fixed12(row.sigma) + ',';
        if (const auto *estimate = std::get_if<RuntimeEstimate>(&row.predicted)) {
            csv += std::to_string(estimate->steps);
        } else {
            csv += "inf";
        }
        csv += ',' + std::to_string(row.measured) + ',' + fixed12(row.peak_probability) + ',';
        csv += row.reduced ? "reduced" : "full";
        csv += '\n';
    }
    return csv;
}

}  // namespace lazywalk
