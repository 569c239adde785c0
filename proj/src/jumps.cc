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

#include "noclick/jumps.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <set>

#include "noclick/entropy.h"
#include "noclick/errors.h"

namespace noclick {

namespace {

constexpr double kPi = std::numbers::pi;

cplx complex_infinity() {
    return cplx(std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity());
}

bool is_infinite(cplx x) { return std::isinf(x.real()) || std::isinf(x.imag()); }

// (2 / (L det V_k)) ((lambda_k - a)^2 / |b|^2) |u|^2
cplx relaxation_term(const ModeData &m, int L) {
    if (m.diagonal) return 0;
    cplx s = m.lambda - m.a;
    return 2.0 / (static_cast<double>(L) * m.detV) * (s * s / std::norm(m.b)) * std::norm(m.u);
}

double min_nonresonant_gap(const ModelParams &p) {
    double best = std::numeric_limits<double>::infinity();
    for (double k : momentum_grid(p)) {
        cplx lam = mode_data(p, k).lambda;
        double g = std::abs(lam.imag());
        double tol = std::max(1e-9, 10 * std::numeric_limits<double>::epsilon() * std::abs(lam));
        if (g > tol) best = std::min(best, g);
    }
    return best;
}

}  // namespace

ProjectiveRatio ProjectiveRatio::from_ratio(cplx x) {
    if (is_infinite(x)) return {1, 0};
    return ProjectiveRatio{x, 1}.normalized();
}

bool ProjectiveRatio::at_infinity(double tol) const {
    return std::abs(B) <= tol * std::abs(A);
}

cplx ProjectiveRatio::ratio() const {
    if (B == cplx(0, 0)) return complex_infinity();
    return A / B;
}

ProjectiveRatio ProjectiveRatio::normalized() const {
    double n = std::hypot(std::abs(A), std::abs(B));
    if (!(n > 0)) throw NumericalError("projective ratio with A = B = 0");
    return {A / n, B / n};
}

double chordal_distance(const ProjectiveRatio &x, const ProjectiveRatio &y) {
    ProjectiveRatio a = x.normalized();
    ProjectiveRatio b = y.normalized();
    return std::abs(a.A * b.B - a.B * b.A);
}

JumpCoefficients jump_coefficients(const ModelParams &p) {
    SpectrumSummary summary = spectrum_summary(p);
    if (!summary.has_resonance) {
        throw RegimeError("jump coefficients need a resonant momentum (gamma < gamma_c, |h| < J)");
    }
    JumpCoefficients C;
    C.L = p.L;
    C.qstar = *summary.qstar;
    for (const ModeData &m : positive_modes(p)) {
        cplx term = relaxation_term(m, p.L);
        C.C1 += term;
        if (std::abs(m.k - C.qstar) < 1e-12) {
            cplx pref = 2.0 * m.u * m.u / (static_cast<double>(p.L) * m.detV);
            C.C2 = pref * (m.lambda - m.a) / m.b;
            C.C3 = 2.0 * std::conj(m.u) * std::conj(m.u) / (static_cast<double>(p.L) * m.detV) *
                   (m.lambda - m.a) / std::conj(m.b);
            C.C4 = 2.0 * std::norm(m.u) / (static_cast<double>(p.L) * m.detV);
            C.lambda_q = m.lambda;
        } else {
            C.C5 += term;
        }
    }
    return C;
}

Eigen::Matrix2cd mobius_matrix(const JumpCoefficients &C) {
    Eigen::Matrix2cd M;
    M << C.C1 - 1.0, C.C2, C.C3, C.C4 + C.C5 - 1.0;
    return M;
}

ProjectiveRatio apply_jump_map(const ProjectiveRatio &x, const JumpCoefficients &C, double phi) {
    Eigen::Vector2cd v(x.A, x.B);
    Eigen::Vector2cd w = mobius_matrix(C) * v;
    return ProjectiveRatio{std::polar(1.0, phi) * w(0), w(1)}.normalized();
}

cplx apply_jump_map(cplx x, const JumpCoefficients &C, double phi) {
    if (is_infinite(x)) {
        return std::polar(1.0, phi) * (C.C1 - 1.0) / C.C3;
    }
    cplx den = C.C3 * x + C.C4 + C.C5 - 1.0;
    if (den == cplx(0, 0)) return complex_infinity();
    return std::polar(1.0, phi) * ((C.C1 - 1.0) * x + C.C2) / den;
}

std::array<FixedPoint, 2> fixed_points(const JumpCoefficients &C, double phi) {
    const cplx e = std::polar(1.0, phi);
    const cplx alpha = C.C1 - 1.0;
    const cplx delta = C.C4 + C.C5 - 1.0;
    const cplx qa = C.C3;
    const cplx qb = delta - e * alpha;
    const cplx qc = -e * C.C2;
    double scale = std::abs(qa) + std::abs(qb) + std::abs(qc);
    if (std::abs(qa) <= 1e-14 * scale) {
        throw DegenerateError("fixed_points: quadratic degenerates (C3 = 0), single root");
    }
    cplx disc = std::sqrt(qb * qb - 4.0 * qa * qc);
    if (std::abs(disc) <= 1e-14 * scale) {
        throw DegenerateError("fixed_points: double root");
    }
    // Avoid cancellation: pick the sign making |qb + s disc| largest.
    cplx s = std::real(std::conj(qb) * disc) >= 0 ? disc : -disc;
    cplx t = -(qb + s) / 2.0;
    std::array<cplx, 2> roots = {t / qa, qc / t};
    std::array<FixedPoint, 2> out;
    const cplx det = alpha * delta - C.C2 * C.C3;
    for (int i = 0; i < 2; ++i) {
        cplx den = C.C3 * roots[i] + delta;
        out[i].x = roots[i];
        out[i].multiplier = e * det / (den * den);
        out[i].attracting = std::abs(out[i].multiplier) < 1;
    }
    return out;
}

double jump_rate(const ModelParams &p, const PairProductState &s) {
    return p.gamma * (p.L - total_occupation(s));
}

double jump_rate(const ModelParams &p, const SteadyState &s) {
    return jump_rate(p, to_pair_product(s, p));
}

double sample_waiting_time(double rate, std::mt19937_64 &rng) {
    if (!(rate > 0) || !std::isfinite(rate)) {
        throw InvalidParameter("waiting time needs a positive finite rate");
    }
    std::exponential_distribution<double> dist(rate);
    return dist(rng);
}

std::string to_string(PhaseMode mode) {
    switch (mode) {
        case PhaseMode::kZero:
            return "zero";
        case PhaseMode::kFixed:
            return "fixed";
        case PhaseMode::kStochastic:
            return "stochastic";
    }
    return "stochastic";
}

PhaseMode parse_phase_mode(const std::string &text) {
    if (text == "zero") return PhaseMode::kZero;
    if (text == "fixed") return PhaseMode::kFixed;
    if (text == "stochastic") return PhaseMode::kStochastic;
    throw InvalidParameter("unknown phase mode '" + text + "' (expected zero, fixed or stochastic)");
}

void TrajectoryConfig::validate() const {
    if (!(dt > 0)) throw InvalidParameter("trajectory dt must be positive");
    if (n_jumps < 0) throw InvalidParameter("number of jumps must be non-negative");
    if (lambda_steps && !(*lambda_steps >= 0)) {
        throw InvalidParameter("lambda_steps must be non-negative");
    }
}

TrajectoryRecord run_trajectory(const ModelParams &p, const TrajectoryConfig &cfg) {
    cfg.validate();
    p.validate();
    std::mt19937_64 rng(cfg.seed);
    TrajectoryRecord rec;
    rec.entropy_LAs = cfg.entropy_LAs;

    SteadyState start = steady_state(p, 0.0);
    rec.resonant = start.qstar.has_value();
    std::optional<JumpCoefficients> C;
    if (rec.resonant) C = jump_coefficients(p);

    double relax_time;
    if (cfg.lambda_steps) {
        relax_time = *cfg.lambda_steps * cfg.dt;
    } else {
        double gap = min_nonresonant_gap(p);
        relax_time = std::isfinite(gap) ? std::log(10.0 * p.L) / gap : 0.0;
    }

    auto state_of = [&](const ProjectiveRatio &x) {
        SteadyState s;
        s.A = x.A;
        s.B = x.B;
        s.qstar = start.qstar;
        return to_pair_product(s, p);
    };
    auto entropies_of = [&](const PairProductState &s) {
        return cfg.entropy_LAs.empty() ? std::vector<double>{} : window_entropies(s, cfg.entropy_LAs);
    };

    ProjectiveRatio x = ProjectiveRatio{start.A, start.B}.normalized();
    rec.initial = x;
    PairProductState current = state_of(x);
    rec.initial_entropies = entropies_of(current);

    for (int i = 0; i < cfg.n_jumps; ++i) {
        JumpEvent ev;
        ev.index = i;
        ev.before = x;
        double rate = jump_rate(p, current);
        ev.tau = rate > 0 ? sample_waiting_time(rate, rng) : std::numeric_limits<double>::infinity();
        ev.elapsed = relax_time + ev.tau;
        if (rec.resonant) {
            switch (cfg.phase_mode) {
                case PhaseMode::kZero:
                    ev.phi = 0;
                    break;
                case PhaseMode::kFixed:
                    ev.phi = cfg.fixed_phi;
                    break;
                case PhaseMode::kStochastic:
                    ev.phi = std::remainder(2 * C->lambda_q.real() * ev.elapsed, 2 * kPi);
                    break;
            }
            x = apply_jump_map(x, *C, ev.phi);
            current = state_of(x);
        }
        ev.after = x;
        ev.entropies = entropies_of(current);
        rec.events.push_back(std::move(ev));
    }
    return rec;
}

EnsembleSummary run_ensemble(const ModelParams &p, const TrajectoryConfig &cfg, int n_trajectories,
                             std::vector<TrajectoryRecord> *records) {
    if (n_trajectories < 1) throw InvalidParameter("need at least one trajectory");
    EnsembleSummary sum;
    sum.LAs = cfg.entropy_LAs;
    sum.n_trajectories = n_trajectories;
    sum.mean_S.assign(cfg.entropy_LAs.size(), 0.0);
    long count = 0;
    for (int t = 0; t < n_trajectories; ++t) {
        TrajectoryConfig c = cfg;
        c.seed = cfg.seed + static_cast<std::uint64_t>(t);
        TrajectoryRecord rec = run_trajectory(p, c);
        auto add = [&](const std::vector<double> &S) {
            for (size_t i = 0; i < S.size(); ++i) sum.mean_S[i] += S[i];
            ++count;
        };
        if (rec.events.empty()) {
            add(rec.initial_entropies);
        } else {
            for (const auto &ev : rec.events) add(ev.entropies);
        }
        if (records) records->push_back(std::move(rec));
    }
    for (double &s : sum.mean_S) s /= static_cast<double>(count);
    if (std::set<int>(sum.LAs.begin(), sum.LAs.end()).size() >= 3) {
        LogFit fit = fit_log_law(sum.LAs, sum.mean_S);
        sum.c = fit.c;
        sum.b0 = fit.b0;
        sum.residual = fit.residual;
    } else {
        sum.c = sum.b0 = sum.residual = std::numeric_limits<double>::quiet_NaN();
    }
    return sum;
}

ValidityEstimate validity_estimate(const ModelParams &params, int L) {
    ModelParams p = params;
    p.L = L;
    p.validate();
    double gc = critical_gamma(p);
    if (!(p.gamma > 0) || !(p.gamma < gc * std::sqrt(1 - 1.0 / L))) {
        throw RegimeError("validity estimate needs 0 < gamma < gamma_c sqrt(1 - 1/L)");
    }
    ValidityEstimate v;
    v.L = L;
    double ratio = p.gamma / gc;
    v.lambda_dt = L * std::log(10.0 * L) * std::sqrt(1 - ratio * ratio) / (2 * kPi * p.gamma);
    double gap = min_nonresonant_gap(p);
    v.lambda_dt_direct = std::isfinite(gap) ? std::log(10.0 * L) / gap : 0.0;
    double M = p.L - total_occupation(to_pair_product(steady_state(p, 0.0), p));
    v.tau = 1.0 / (p.gamma * M);
    v.valid = v.lambda_dt < v.tau;
    if (ratio > 0.9) {
        v.caveat = "gamma close to gamma_c: the linear expansion underestimates the relaxation time";
    }
    return v;
}

std::optional<int> validity_crossover(const ModelParams &p, int L_min, int L_max) {
    std::optional<int> last;
    for (int L = L_min + (L_min % 2); L <= L_max; L += 2) {
        try {
            if (validity_estimate(p, L).valid) last = L;
        } catch (const RegimeError &) {
        }
    }
    return last;
}

}  // namespace noclick
