// Copyright 2026 The noclick Authors
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

#include <CLI11.hpp>

#include <ostream>
#include <thread>

#include "noclick/cli.h"
#include "noclick/errors.h"

namespace noclick::cli {

namespace {

struct Options {
    RunConfig cfg;
    std::string model = "ising";
    std::string bc = "abc";
    std::string state = "averaged";
    std::string phase_mode = "stochastic";
    double lambda_steps = -1;
};

void add_options(CLI::App &app, Options &o) {
    RunConfig &c = o.cfg;
    app.set_config("--config", "", "Flat key=value file; command-line flags override it");
    app.add_option("--out,-o", c.out, "Output CSV path ('-' for stdout)")->capture_default_str();
    app.add_option("--seed", c.seed, "Random seed")->capture_default_str();
    app.add_option("--threads", c.threads, "Worker threads")->envname("NOCLICK_THREADS")->check(CLI::PositiveNumber);
    app.add_option("--model", o.model, "ising | kitaev")->capture_default_str();
    app.add_option("--bc", o.bc, "abc | pbc")->capture_default_str();
    app.add_option("--J", c.base.J, "Coupling J")->capture_default_str();
    app.add_option("--gamma", c.gammas, "Measurement rates (comma list)")->delimiter(',')->capture_default_str();
    app.add_option("--h", c.hs, "Transverse fields (comma list)")->delimiter(',')->capture_default_str();
    app.add_option("--d", c.ds, "Pairing exponents (comma list)")->delimiter(',')->capture_default_str();
    app.add_option("--L", c.Ls, "Chain lengths (comma list)")->delimiter(',')->capture_default_str();
    app.add_option("--LA", c.LAs, "Subsystem sizes (comma list; default 8 log-spaced in [L/16, L/4])")
        ->delimiter(',');
    app.add_option("--state", o.state, "vacuum | steady | averaged")->capture_default_str();
    app.add_option("--phi", c.phi, "Relative phase for --state steady")->capture_default_str();
    app.add_option("--n-phases", c.n_phases, "Phases for --state averaged")->capture_default_str();
    app.add_option("--dt", c.trajectory.dt, "Time step")->capture_default_str();
    app.add_option("--n-jumps", c.trajectory.n_jumps, "Jumps per trajectory")->capture_default_str();
    app.add_option("--lambda-steps", o.lambda_steps, "Relaxation steps between jumps (default: automatic)");
    app.add_option("--phase-mode", o.phase_mode, "zero | fixed | stochastic")->capture_default_str();
    app.add_option("--fixed-phi", c.trajectory.fixed_phi, "Phase for --phase-mode fixed")->capture_default_str();
    app.add_option("--n-traj", c.n_trajectories, "Trajectories per parameter tuple")->capture_default_str();
    app.add_option("--samples", c.oracle_samples, "Random samples per L and chain in oracle-check")
        ->capture_default_str();
    app.add_option("--fit-out", c.fit_out, "Optional CSV of log-law fits");
    app.add_option("--records-out", c.records_out, "Optional CSV of per-jump trajectory records");
}

void finalize(Options &o) {
    RunConfig &c = o.cfg;
    c.base.kind = parse_chain(o.model);
    c.base.bc = parse_boundary(o.bc);
    c.trajectory.phase_mode = parse_phase_mode(o.phase_mode);
    if (o.lambda_steps >= 0) c.trajectory.lambda_steps = o.lambda_steps;
    if (o.state == "vacuum") {
        c.state = StateKind::kVacuum;
    } else if (o.state == "steady") {
        c.state = StateKind::kSteady;
    } else if (o.state == "averaged") {
        c.state = StateKind::kAveraged;
    } else {
        throw InvalidParameter("unknown state '" + o.state + "' (expected vacuum, steady or averaged)");
    }
    if (c.n_phases < 1) throw InvalidParameter("--n-phases must be at least 1");
    if (c.n_trajectories < 1) throw InvalidParameter("--n-traj must be at least 1");
    c.trajectory.validate();
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Entanglement in the no-click limit of monitored free-fermion chains"};
    app.name("noclick");
    app.fallthrough();
    app.require_subcommand(1);
    app.set_help_flag("--help", "Print this help message and exit");
    Options o;
    o.cfg.threads = std::max(1u, std::thread::hardware_concurrency());
    add_options(app, o);
    auto *spectrum = app.add_subcommand("spectrum", "Quasiparticle energies on the momentum grid");
    auto *scan = app.add_subcommand("entropy-scan", "Entanglement entropy versus subsystem size");
    auto *traj = app.add_subcommand("trajectories", "Rare-jump trajectory ensembles");
    auto *validity = app.add_subcommand("validity", "Regime of validity of the rare-jump description");
    auto *check = app.add_subcommand("oracle-check", "Gaussian pipeline against dense evolution at small L");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        finalize(o);
        if (*check && app.count("--L") == 0) o.cfg.Ls = {4, 6, 8};
        const RunConfig &cfg = o.cfg;
        if (*spectrum) return cmd_spectrum(cfg, out);
        if (*scan) return cmd_entropy_scan(cfg, out, err);
        if (*traj) return cmd_trajectories(cfg, out, err);
        if (*validity) return cmd_validity(cfg, out, err);
        if (*check) return cmd_oracle_check(cfg, out);
    } catch (const InvalidParameter &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const RegimeError &e) {
        err << "regime error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error &e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const NumericalError &e) {
        err << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const ResourceError &e) {
        err << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace noclick::cli
