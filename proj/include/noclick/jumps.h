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

#ifndef NOCLICK_JUMPS_H
#define NOCLICK_JUMPS_H

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "noclick/gaussian_state.h"
#include "noclick/model.h"

namespace noclick {

struct JumpCoefficients {
    cplx C1, C2, C3, C4, C5;
    double qstar = 0;
    cplx lambda_q;
    int L = 0;
};

/// The pair (A, B) up to a common factor; x = A/B. B = 0 is the point at infinity.
struct ProjectiveRatio {
    cplx A = 1;
    cplx B = 0;

    static ProjectiveRatio from_ratio(cplx x);
    bool at_infinity(double tol = 1e-300) const;
    /// A/B, or complex infinity when B == 0.
    cplx ratio() const;
    ProjectiveRatio normalized() const;
};

/// Chordal distance on the Riemann sphere, in [0, 1].
double chordal_distance(const ProjectiveRatio &x, const ProjectiveRatio &y);

/// Throws RegimeError when there is no resonant momentum (gamma >= gamma_c).
JumpCoefficients jump_coefficients(const ModelParams &p);

/// [[C1 - 1, C2], [C3, C4 + C5 - 1]].
Eigen::Matrix2cd mobius_matrix(const JumpCoefficients &C);

/// e^{i phi} ((C1 - 1) x + C2) / (C3 x + C4 + C5 - 1); infinite x maps to (C1 - 1)/C3.
cplx apply_jump_map(cplx x, const JumpCoefficients &C, double phi);
ProjectiveRatio apply_jump_map(const ProjectiveRatio &x, const JumpCoefficients &C, double phi);

struct FixedPoint {
    cplx x;
    /// Derivative of the map at x.
    cplx multiplier;
    bool attracting = false;
};

/// Both roots of C3 x^2 + (C4 + C5 - 1 - e^{i phi}(C1 - 1)) x - e^{i phi} C2 = 0.
/// Throws DegenerateError when the quadratic collapses.
std::array<FixedPoint, 2> fixed_points(const JumpCoefficients &C, double phi);

/// gamma * sum_l <1 - n_l>, a rate per unit time.
double jump_rate(const ModelParams &p, const SteadyState &s);
double jump_rate(const ModelParams &p, const PairProductState &s);

/// Exponential variate with mean 1/rate. Throws InvalidParameter for rate <= 0.
double sample_waiting_time(double rate, std::mt19937_64 &rng);

enum class PhaseMode { kZero, kFixed, kStochastic };

std::string to_string(PhaseMode mode);
PhaseMode parse_phase_mode(const std::string &text);

struct TrajectoryConfig {
    double dt = 1e-2;
    std::uint64_t seed = 1;
    int n_jumps = 10;
    /// Relaxation steps between jumps; defaults to log(10L) / (min |Im lambda| dt).
    std::optional<double> lambda_steps;
    PhaseMode phase_mode = PhaseMode::kStochastic;
    double fixed_phi = 0;
    /// Subsystem sizes whose entropy is recorded after every jump.
    std::vector<int> entropy_LAs;

    void validate() const;
};

struct JumpEvent {
    int index = 0;
    ProjectiveRatio before;
    ProjectiveRatio after;
    double tau = 0;
    double elapsed = 0;
    double phi = 0;
    std::vector<double> entropies;
};

struct TrajectoryRecord {
    ProjectiveRatio initial;
    /// False when gamma >= gamma_c and the state stays at x = infinity.
    bool resonant = false;
    std::vector<int> entropy_LAs;
    std::vector<double> initial_entropies;
    std::vector<JumpEvent> events;
};

TrajectoryRecord run_trajectory(const ModelParams &p, const TrajectoryConfig &cfg);

struct EnsembleSummary {
    std::vector<int> LAs;
    /// Mean entropy per size over all post-jump snapshots of all trajectories.
    std::vector<double> mean_S;
    double c = 0;
    double b0 = 0;
    double residual = 0;
    int n_trajectories = 0;
};

/// Trajectory i uses seed cfg.seed + i.
EnsembleSummary run_ensemble(const ModelParams &p, const TrajectoryConfig &cfg, int n_trajectories,
                             std::vector<TrajectoryRecord> *records = nullptr);

struct ValidityEstimate {
    int L = 0;
    /// L log(10L) sqrt(1 - gamma^2/gamma_c^2) / (2 pi gamma).
    double lambda_dt = 0;
    /// log(10L) / min over the grid of the non-vanishing |Im lambda_k|.
    double lambda_dt_direct = 0;
    /// 1 / (gamma M), M = sum_l <1 - n_l> in the steady state.
    double tau = 0;
    bool valid = false;
    std::string caveat;
};

/// Throws RegimeError unless gamma < gamma_c sqrt(1 - 1/L).
ValidityEstimate validity_estimate(const ModelParams &p, int L);

/// Largest even L in [L_min, L_max] with valid == true, if any.
std::optional<int> validity_crossover(const ModelParams &p, int L_min, int L_max);

}  // namespace noclick

#endif
