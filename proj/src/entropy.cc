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

#include "noclick/entropy.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

#include "noclick/errors.h"

namespace noclick {

namespace {

constexpr double kEigTolerance = 1e-6;

double binary_entropy(double p) {
    if (p <= 0 || p >= 1) return 0;
    return -p * std::log(p) - (1 - p) * std::log1p(-p);
}

}  // namespace

double entanglement_entropy(const Eigen::MatrixXcd &M) {
    // Omega = Im(M) is real antisymmetric; Omega^T Omega carries nu^2 twice.
    Eigen::MatrixXd omega = M.imag();
    Eigen::MatrixXd gram = omega.transpose() * omega;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("eigensolver failed on the correlation matrix");
    }
    const double limit = (1 + kEigTolerance) * (1 + kEigTolerance);
    double s = 0;
    for (double nu2 : solver.eigenvalues()) {
        if (nu2 > limit) {
            throw NumericalError("correlation eigenvalue " + std::to_string(std::sqrt(nu2)) +
                                 " outside [-1, 1]");
        }
        double nu = std::sqrt(std::clamp(nu2, 0.0, 1.0));
        s += binary_entropy((1 + nu) / 2);
    }
    return s / 2;
}

double entanglement_entropy(const CorrelationMatrix &M) { return entanglement_entropy(M.M); }

std::vector<double> window_entropies(const PairProductState &s, const std::vector<int> &LAs) {
    if (LAs.empty()) return {};
    int lmax = *std::max_element(LAs.begin(), LAs.end());
    CorrelationMatrix full = majorana_correlation(s, Window{0, lmax});
    std::vector<double> out;
    out.reserve(LAs.size());
    for (int l : LAs) {
        if (l <= 0) throw InvalidParameter("subsystem size must be positive");
        out.push_back(entanglement_entropy(Eigen::MatrixXcd(full.M.topLeftCorner(2 * l, 2 * l))));
    }
    return out;
}

namespace {

// Requested sizes plus their successors, deduplicated and bounded by L.
std::vector<int> with_successors(const std::vector<int> &LAs, int L) {
    std::set<int> all;
    for (int l : LAs) {
        if (l <= 0 || l > L) throw InvalidParameter("subsystem size must lie in [1, L]");
        all.insert(l);
        if (l + 1 <= L) all.insert(l + 1);
    }
    return {all.begin(), all.end()};
}

EntropyScan rows_from(const ModelParams &p, const std::vector<int> &LAs, const std::vector<int> &sizes,
                      const std::vector<double> &S, bool averaged) {
    auto lookup = [&](int l) {
        return S[std::lower_bound(sizes.begin(), sizes.end(), l) - sizes.begin()];
    };
    EntropyScan rows;
    for (int l : LAs) {
        EntropyRow row;
        row.L = p.L;
        row.LA = l;
        row.S = lookup(l);
        row.deltaS = l + 1 <= p.L ? lookup(l + 1) - row.S : std::numeric_limits<double>::quiet_NaN();
        row.c = l * row.deltaS;
        row.phi_averaged = averaged;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

EntropyScan entropy_profile(const ModelParams &p, const SteadyState &state, const std::vector<int> &LAs) {
    std::vector<int> sizes = with_successors(LAs, p.L);
    std::vector<double> S = window_entropies(to_pair_product(state, p), sizes);
    return rows_from(p, LAs, sizes, S, false);
}

EntropyScan phase_averaged_profile(const ModelParams &p, const std::vector<int> &LAs, int n_phases) {
    if (n_phases < 1) throw InvalidParameter("n_phases must be at least 1");
    std::vector<int> sizes = with_successors(LAs, p.L);
    SteadyState base = steady_state(p, 0.0);
    if (base.B == cplx(0, 0)) n_phases = 1;
    std::vector<double> mean(sizes.size(), 0.0);
    for (int j = 0; j < n_phases; ++j) {
        SteadyState s = base;
        s.phi = 2 * std::numbers::pi * j / n_phases;
        std::vector<double> S = window_entropies(to_pair_product(s, p), sizes);
        for (size_t i = 0; i < S.size(); ++i) mean[i] += S[i] / n_phases;
    }
    return rows_from(p, LAs, sizes, mean, true);
}

double phase_averaged_entropy(const ModelParams &p, int LA, int n_phases) {
    if (n_phases < 1) throw InvalidParameter("n_phases must be at least 1");
    SteadyState base = steady_state(p, 0.0);
    if (base.B == cplx(0, 0)) n_phases = 1;
    double mean = 0;
    for (int j = 0; j < n_phases; ++j) {
        SteadyState s = base;
        s.phi = 2 * std::numbers::pi * j / n_phases;
        mean += window_entropies(to_pair_product(s, p), {LA})[0] / n_phases;
    }
    return mean;
}

double incremental_ratio(const ModelParams &p, const SteadyState &state, int LA) {
    if (LA < 1 || LA + 1 > p.L / 2) {
        throw InvalidParameter("incremental_ratio needs 1 <= LA and LA + 1 <= L/2");
    }
    std::vector<double> S = window_entropies(to_pair_product(state, p), {LA, LA + 1});
    return S[1] - S[0];
}

double log_coefficient(const ModelParams &p, const SteadyState &state, int LA) {
    return LA * incremental_ratio(p, state, LA);
}

LogFit fit_log_law(const std::vector<int> &LAs, const std::vector<double> &S) {
    if (LAs.size() != S.size()) throw InvalidParameter("fit_log_law: size mismatch");
    std::set<int> distinct(LAs.begin(), LAs.end());
    if (distinct.size() < 3) {
        throw InvalidParameter("fit_log_law needs at least three distinct subsystem sizes");
    }
    const size_t n = LAs.size();
    Eigen::MatrixXd X(n, 2);
    Eigen::VectorXd y(n);
    for (size_t i = 0; i < n; ++i) {
        if (LAs[i] <= 0) throw InvalidParameter("fit_log_law: sizes must be positive");
        X(i, 0) = std::log(static_cast<double>(LAs[i]));
        X(i, 1) = 1;
        y(i) = S[i];
    }
    Eigen::Vector2d coef = X.colPivHouseholderQr().solve(y);
    LogFit fit;
    fit.c = coef(0);
    fit.b0 = coef(1);
    fit.residual = std::sqrt((X * coef - y).squaredNorm() / static_cast<double>(n));
    return fit;
}

LogFit fit_log_law(const EntropyScan &rows) {
    std::vector<int> LAs;
    std::vector<double> S;
    for (const auto &r : rows) {
        LAs.push_back(r.LA);
        S.push_back(r.S);
    }
    return fit_log_law(LAs, S);
}

std::vector<int> log_spaced(int lo, int hi, int n) {
    if (lo < 1 || hi < lo || n < 1) throw InvalidParameter("log_spaced: need 1 <= lo <= hi, n >= 1");
    std::set<int> out;
    for (int i = 0; i < n; ++i) {
        double t = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
        out.insert(static_cast<int>(std::lround(lo * std::pow(static_cast<double>(hi) / lo, t))));
    }
    return {out.begin(), out.end()};
}

std::vector<int> fit_window(int L) { return log_spaced(std::max(1, L / 16), std::max(1, L / 4), 8); }

}  // namespace noclick
