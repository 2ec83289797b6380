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

// lazywalk: simulate and analyse quantum-walk search on the complete graph
// with lazy (potential barrier) hops.
//
// Exit status: 0 ok, 1 failed verification, 2 invalid arguments, 3 output
// not writable.

#include <cmath>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lazywalk/experiments.h"
#include "lazywalk/phase_matching.h"
#include "lazywalk/verify.h"

using namespace lazywalk;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadSpec = 2;
constexpr int kExitUnwritable = 3;

struct SimulateArgs {
    std::string mode = "dtqw-full";
    std::size_t n = 1024;
    double beta = 0.0;
    bool corrected = false;
    std::size_t steps = 100;
    double t_max = 0.0;
    double epsilon = 0.0;
    std::optional<double> gamma;
    std::size_t marked = 0;
    std::string out;
    std::string spec_out;
    std::size_t max_full_n = kDefaultMaxFullN;
};

void add_simulate_options(CLI::App &cmd, SimulateArgs &args, bool with_mode) {
    if (with_mode) {
        cmd.add_option("--mode", args.mode, "dtqw-full | dtqw-reduced | ctqw")->capture_default_str();
    }
    cmd.add_option("--n", args.n, "Number of vertices")->capture_default_str();
    cmd.add_option("--beta", args.beta, "Stay amplitude magnitude |beta| in [0, 1]")->capture_default_str();
    cmd.add_flag("--corrected", args.corrected, "Use the phase-corrected coin/oracle (ctqw: corrected gamma)");
    cmd.add_option("--steps", args.steps, "Walk iterations, or ctqw time intervals")->capture_default_str();
    cmd.add_option("--t-max", args.t_max, "ctqw: end of the time grid (0 = twice pi sqrt(N)/2)");
    cmd.add_option("--epsilon", args.epsilon, "ctqw: hop amplitude reduction in [0, 1)");
    cmd.add_option("--gamma", args.gamma, "ctqw: explicit jumping rate");
    cmd.add_option("--marked", args.marked, "Marked vertex index")->capture_default_str();
    cmd.add_option("--out", args.out, "CSV output path (default: standard output)");
    cmd.add_option("--spec-out", args.spec_out, "Write the run's spec as a config file");
    cmd.add_option("--max-full-n", args.max_full_n, "Largest N simulated in full space")->capture_default_str();
}

ExperimentSpec to_spec(const SimulateArgs &args) {
    const auto mode = parse_mode(args.mode);
    if (!mode) {
        throw SpecError("unknown mode '" + args.mode + "'");
    }
    ExperimentSpec spec;
    spec.mode = *mode;
    spec.n_vertices = args.n;
    spec.beta = args.beta;
    spec.corrected = args.corrected;
    spec.steps = args.steps;
    spec.t_max = args.t_max;
    spec.epsilon = args.epsilon;
    spec.gamma = args.gamma;
    spec.marked = args.marked;
    spec.out = args.out;
    spec.validate();
    return spec;
}

int run_simulate(const SimulateArgs &args) {
    const ExperimentSpec spec = to_spec(args);
    const ExperimentResult result = run_experiment(spec, args.max_full_n);
    const std::string csv = format_csv(result);
    if (!args.spec_out.empty()) {
        write_text_file(args.spec_out, spec.to_config());
    }
    if (spec.out.empty()) {
        std::cout << csv;
        std::cerr << format_summary(result) << "\n";
    } else {
        write_text_file(spec.out, csv);
        std::cout << format_summary(result) << "\n";
    }
    return 0;
}

struct SweepArgs {
    std::vector<std::size_t> n_values{256, 1024, 4096};
    std::vector<double> betas{0.0};
    bool corrected = false;
    std::size_t steps = 0;
    std::string mode = "dtqw-full";
    unsigned workers = 1;
    std::size_t max_full_n = kDefaultMaxFullN;
    std::string out;
};

int run_sweep_command(const SweepArgs &args) {
    const auto mode = parse_mode(args.mode);
    if (!mode || *mode == Mode::kCtqw) {
        throw SpecError("sweep mode must be dtqw-full or dtqw-reduced");
    }
    SweepGrid grid;
    grid.n_values = args.n_values;
    grid.betas = args.betas;
    grid.corrected = args.corrected;
    grid.steps = args.steps;
    grid.force_reduced = *mode == Mode::kDtqwReduced;
    grid.max_full_n = args.max_full_n;
    grid.workers = args.workers;
    const auto rows = run_sweep(grid);
    const std::string csv = format_sweep_csv(rows);
    if (args.out.empty()) {
        std::cout << csv;
    } else {
        write_text_file(args.out, csv);
        std::cout << "wrote " << rows.size() << " rows to " << args.out << "\n";
    }
    return 0;
}

struct VerifyArgs {
    std::vector<std::size_t> n_values{4, 16, 64};
    std::vector<double> phis{0.0, 0.3, std::asin(0.8)};
    std::size_t steps = 200;
    bool force_uncorrected_eta = false;
};

int run_verify_command(const VerifyArgs &args) {
    VerifyOptions options;
    options.n_values = args.n_values;
    options.phis = args.phis;
    options.steps = args.steps;
    options.force_uncorrected_eta = args.force_uncorrected_eta;
    const auto checks = run_verification(options);
    std::cout << format_report(checks);
    int status = 0;
    for (const auto &check : checks) {
        if (!check.passed()) {
            std::cerr << "invariant violated: " << check.name << "\n";
            status = kExitVerifyFailed;
        }
    }
    return status;
}

int run_plan(std::size_t n, double beta) {
    if (!(beta >= 0.0 && beta <= 1.0)) {
        throw SpecError("beta must lie in [0, 1]");
    }
    std::cout << "beta=" << beta << "\n" << describe(make_phase_plan(n, std::asin(beta)));
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum-walk search on the complete graph with lazy hops"};
    app.set_config("--config", "", "key=value config file with [simulate]/[sweep]/... sections; flags win");
    app.require_subcommand(1);

    SimulateArgs simulate_args;
    auto *simulate = app.add_subcommand("simulate", "Success probability vs. iteration (or time) as CSV");
    add_simulate_options(*simulate, simulate_args, true);

    SimulateArgs ctqw_args;
    ctqw_args.steps = 200;
    auto *ctqw = app.add_subcommand("ctqw", "Continuous-time search; shorthand for simulate --mode ctqw");
    add_simulate_options(*ctqw, ctqw_args, false);

    SweepArgs sweep_args;
    auto *sweep = app.add_subcommand("sweep", "Predicted vs. measured runtime over an (N, beta) grid");
    sweep->add_option("--n", sweep_args.n_values, "Comma separated N values")->delimiter(',')->capture_default_str();
    sweep->add_option("--beta", sweep_args.betas, "Comma separated |beta| values")->delimiter(',')->capture_default_str();
    sweep->add_flag("--corrected", sweep_args.corrected, "Use the phase-corrected walk");
    sweep->add_option("--steps", sweep_args.steps, "Iterations per point (0 = ceil(2 t*))")->capture_default_str();
    sweep->add_option("--mode", sweep_args.mode, "dtqw-full | dtqw-reduced")->capture_default_str();
    sweep->add_option("--workers", sweep_args.workers, "Concurrent grid points")->capture_default_str();
    sweep->add_option("--max-full-n", sweep_args.max_full_n, "Larger N fall back to the reduced model")
        ->capture_default_str();
    sweep->add_option("--out", sweep_args.out, "CSV output path (default: standard output)");

    VerifyArgs verify_args;
    auto *verify = app.add_subcommand("verify", "Run the invariant suite; nonzero exit on any violation");
    verify->add_option("--n", verify_args.n_values, "Comma separated N values")->delimiter(',')->capture_default_str();
    verify->add_option("--phi", verify_args.phis, "Comma separated barrier phases")->delimiter(',');
    verify->add_option("--steps", verify_args.steps, "Trajectory length")->capture_default_str();
    verify->add_flag(
        "--debug-uncorrected-eta", verify_args.force_uncorrected_eta,
        "Negative control: use eta = 0 where the corrected phase is required");

    std::size_t plan_n = 1024;
    double plan_beta = 0.0;
    auto *plan = app.add_subcommand("plan", "Print theta, eta, sigma, t* and delta for (N, beta)");
    plan->add_option("--n", plan_n, "Number of vertices")->capture_default_str();
    plan->add_option("--beta", plan_beta, "Stay amplitude magnitude |beta|")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitBadSpec;
    }

    try {
        if (*simulate) {
            return run_simulate(simulate_args);
        }
        if (*ctqw) {
            ctqw_args.mode = "ctqw";
            return run_simulate(ctqw_args);
        }
        if (*sweep) {
            return run_sweep_command(sweep_args);
        }
        if (*verify) {
            return run_verify_command(verify_args);
        }
        if (*plan) {
            return run_plan(plan_n, plan_beta);
        }
    } catch (const OutputError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnwritable;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadSpec;
    } catch (const std::out_of_range &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadSpec;
    }
    return kExitBadSpec;
}
