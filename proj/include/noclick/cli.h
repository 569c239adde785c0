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

#ifndef NOCLICK_CLI_H
#define NOCLICK_CLI_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "noclick/jumps.h"
#include "noclick/model.h"

namespace noclick::cli {

enum class StateKind { kVacuum, kSteady, kAveraged };

struct RunConfig {
    ModelParams base;
    std::vector<double> gammas{1.0};
    std::vector<double> hs{0.7071067811865476};
    std::vector<double> ds{1.0};
    std::vector<int> Ls{128};
    /// Empty means the default fit window of each L.
    std::vector<int> LAs;
    StateKind state = StateKind::kAveraged;
    double phi = 0;
    int n_phases = 64;
    TrajectoryConfig trajectory;
    int n_trajectories = 20;
    int oracle_samples = 50;
    std::uint64_t seed = 1;
    int threads = 1;
    std::string out = "-";
    std::string fit_out;
    std::string records_out;
};

/// One parameter tuple of a scan, in the order gamma fastest, then h, d, L.
std::vector<ModelParams> expand_axes(const RunConfig &cfg);

int cmd_spectrum(const RunConfig &cfg, std::ostream &out);
int cmd_entropy_scan(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_trajectories(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_validity(const RunConfig &cfg, std::ostream &out, std::ostream &err);

struct OracleCheckResult {
    bool passed = true;
    double worst_entropy = 0;
    double worst_correlator = 0;
    double worst_closed_form = 0;
    double worst_evolution = 0;
    double worst_jump_map = 0;
    int cases = 0;
    std::vector<std::string> lines;
};

/// Gaussian pipeline against dense evolution for every L in `Ls`, both chains
/// (d in {0.5, 1.7} for the long-range one), n_samples random (h, gamma) in
/// [0, 1.5] x [0, 6] each.
OracleCheckResult oracle_suite(const std::vector<int> &Ls, int n_samples, std::uint64_t seed, int threads);

int cmd_oracle_check(const RunConfig &cfg, std::ostream &out);

/// Parses arguments, dispatches, maps errors to exit codes
/// (0 ok, 1 check failed or I/O, 2 usage, 3 regime or numerical failure).
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace noclick::cli

#endif
