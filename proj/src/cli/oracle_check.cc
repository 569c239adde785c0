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

#include <cmath>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "csv.h"
#include "noclick/cli.h"
#include "noclick/entropy.h"
#include "noclick/oracle.h"
#include "noclick/parallel.h"

namespace noclick::cli {

namespace {

constexpr double kEntropyTol = 1e-6;
constexpr double kCorrelatorTol = 1e-8;
constexpr double kFidelityTol = 1e-6;
constexpr double kJumpTol = 1e-3;

struct Variant {
    Chain kind;
    double d;
};

const Variant kVariants[] = {{Chain::kIsing, 1.0}, {Chain::kLongRangeKitaev, 0.5}, {Chain::kLongRangeKitaev, 1.7}};

struct CaseResult {
    double entropy = 0;
    double correlator = 0;
    double closed_form = 0;
};

CaseResult vacuum_case(const ModelParams &p) {
    CaseResult r;
    oracle::DenseState psi = oracle::dense_right_vacuum(oracle::build_dense_hamiltonian(p));
    Eigen::MatrixXcd dense = oracle::majorana_matrix(psi);
    Eigen::MatrixXcd gauss = majorana_correlation(vacuum_state(p), p, Window{0, p.L}).M;
    Eigen::MatrixXcd closed = appendix_vacuum_correlation(p, Window{0, p.L}).M;
    r.correlator = (dense - gauss).cwiseAbs().maxCoeff();
    r.closed_form = (closed - gauss).cwiseAbs().maxCoeff();
    for (int l = 1; l <= p.L; ++l) {
        double s = entanglement_entropy(Eigen::MatrixXcd(gauss.topLeftCorner(2 * l, 2 * l)));
        for (int off = 0; off + l <= p.L; ++off) {
            r.entropy = std::max(r.entropy, std::abs(s - oracle::reduced_entropy(psi, Window{off, l})));
        }
    }
    return r;
}

// Grid momentum nearest 1.2 rad, so that h = cos q is exactly resonant.
double resonant_field(int L) {
    int n = static_cast<int>(std::lround((1.2 * L / std::numbers::pi - 1) / 2));
    return std::cos(std::numbers::pi * (2 * n + 1) / L);
}

// 1 - fidelity between dense evolution of the c-vacuum and the predicted steady state.
double evolution_case(const ModelParams &p, double t) {
    oracle::DenseState dense =
        oracle::evolve_normalized(oracle::fock_vacuum(p.L), oracle::build_dense_hamiltonian(p), t);
    SteadyState s = steady_state(p, 0.0);
    if (s.qstar) s.phi = -2 * mode_data(p, *s.qstar).lambda.real() * t;
    oracle::DenseState gauss = oracle::dense_from_pair_product(to_pair_product(s, p));
    return 1 - oracle::fidelity(dense, gauss);
}

// |x_map - x_dense| for a projection at site 0 followed by long relaxation.
double jump_case(const ModelParams &p, cplx x) {
    const double T = 300;
    JumpCoefficients C = jump_coefficients(p);
    std::optional<double> q = C.qstar;
    oracle::DenseOperator H = oracle::build_dense_hamiltonian(p);
    oracle::DenseState vac = oracle::dense_from_pair_product(to_pair_product(SteadyState{1, 0, 0, q}, p));
    oracle::DenseState pair = oracle::dense_from_pair_product(to_pair_product(SteadyState{0, 1, 0, q}, p));
    oracle::DenseState psi = oracle::dense_from_pair_product(to_pair_product(SteadyState{x, 1, 0, q}, p));
    oracle::DenseState post = oracle::evolve_normalized(oracle::apply_projection(psi, 0), H, T);
    Eigen::MatrixXcd basis(post.size(), 2);
    basis.col(0) = vac;
    basis.col(1) = pair;
    Eigen::Vector2cd coef = basis.colPivHouseholderQr().solve(post);
    cplx x_dense = coef(0) / coef(1) * std::exp(cplx(0, -2.0) * C.lambda_q * T);
    return std::abs(x_dense - apply_jump_map(x, C, 0.0));
}

}  // namespace

OracleCheckResult oracle_suite(const std::vector<int> &Ls, int n_samples, std::uint64_t seed, int threads) {
    OracleCheckResult res;
    struct Job {
        ModelParams p;
    };
    std::vector<Job> jobs;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uh(0.0, 1.5), ug(0.0, 6.0);
    for (int L : Ls) {
        for (const Variant &v : kVariants) {
            for (int s = 0; s < n_samples; ++s) {
                ModelParams p;
                p.kind = v.kind;
                p.d = v.d;
                p.L = L;
                p.h = uh(rng);
                p.gamma = ug(rng);
                jobs.push_back({p});
            }
        }
    }
    std::vector<CaseResult> out = parallel_map<CaseResult>(static_cast<int>(jobs.size()), threads,
                                                           [&](int i) { return vacuum_case(jobs[i].p); });
    for (const CaseResult &r : out) {
        res.worst_entropy = std::max(res.worst_entropy, r.entropy);
        res.worst_correlator = std::max(res.worst_correlator, r.correlator);
        res.worst_closed_form = std::max(res.worst_closed_form, r.closed_form);
    }
    res.cases = static_cast<int>(jobs.size());

    for (int L : Ls) {
        for (const Variant &v : kVariants) {
            ModelParams p;
            p.kind = v.kind;
            p.d = v.d;
            p.L = L;
            p.h = resonant_field(L);
            for (double g : {1.0, 6.0}) {
                p.gamma = g;
                res.worst_evolution = std::max(res.worst_evolution, evolution_case(p, 200.0));
            }
            p.gamma = 1.0;
            if (spectrum_summary(p).has_resonance) {
                for (cplx x : {cplx(0.3, 0.2), cplx(-1.5, 0.7), cplx(2.0, 0.0)}) {
                    res.worst_jump_map = std::max(res.worst_jump_map, jump_case(p, x));
                }
            }
        }
    }

    auto line = [&](const std::string &name, double worst, double tol) {
        bool ok = worst < tol;
        res.passed = res.passed && ok;
        std::ostringstream os;
        os << (ok ? "PASS " : "FAIL ") << name << " worst=" << fmt(worst) << " tol=" << fmt(tol);
        res.lines.push_back(os.str());
    };
    line("vacuum entropy, every window", res.worst_entropy, kEntropyTol);
    line("vacuum Majorana correlators", res.worst_correlator, kCorrelatorTol);
    line("closed-form vacuum correlators", res.worst_closed_form, kCorrelatorTol);
    line("steady state vs dense evolution (1 - fidelity)", res.worst_evolution, kFidelityTol);
    line("relaxed jump map vs dense projection", res.worst_jump_map, kJumpTol);
    return res;
}

int cmd_oracle_check(const RunConfig &cfg, std::ostream &out) {
    const std::vector<int> &Ls = cfg.Ls;
    OracleCheckResult r = oracle_suite(Ls, cfg.oracle_samples, cfg.seed, cfg.threads);
    out << "oracle-check: " << r.cases << " random vacuum cases over L =";
    for (int L : Ls) out << ' ' << L;
    out << "\n";
    for (const auto &l : r.lines) out << l << "\n";
    out << (r.passed ? "oracle-check passed" : "oracle-check FAILED") << "\n";
    return r.passed ? 0 : 1;
}

}  // namespace noclick::cli
