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

#include "noclick/model.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "noclick/clausen.h"
#include "noclick/errors.h"

namespace noclick {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

}  // namespace

std::string to_string(Chain kind) {
    return kind == Chain::kIsing ? "ising" : "kitaev";
}

std::string to_string(Boundary bc) {
    return bc == Boundary::kPeriodic ? "pbc" : "abc";
}

Chain parse_chain(const std::string &text) {
    if (text == "ising" || text == "Ising") return Chain::kIsing;
    if (text == "kitaev" || text == "Kitaev" || text == "lrk") return Chain::kLongRangeKitaev;
    throw InvalidParameter("unknown chain '" + text + "' (expected ising or kitaev)");
}

Boundary parse_boundary(const std::string &text) {
    if (text == "abc" || text == "ABC") return Boundary::kAntiperiodic;
    if (text == "pbc" || text == "PBC") return Boundary::kPeriodic;
    throw InvalidParameter("unknown boundary '" + text + "' (expected abc or pbc)");
}

void ModelParams::validate() const {
    if (L <= 0 || L % 2 != 0) {
        throw InvalidParameter("chain length L must be even and positive, got " + std::to_string(L));
    }
    if (!(J > 0)) {
        throw InvalidParameter("coupling J must be positive");
    }
    if (!(gamma >= 0)) {
        throw InvalidParameter("measurement rate gamma must be non-negative");
    }
    if (!std::isfinite(h) || !std::isfinite(gamma) || !std::isfinite(d)) {
        throw InvalidParameter("parameters must be finite");
    }
}

std::vector<double> momentum_grid(const ModelParams &p) {
    p.validate();
    std::vector<double> ks;
    ks.reserve(p.L);
    for (int n = -p.L / 2; n < p.L / 2; ++n) {
        if (p.bc == Boundary::kAntiperiodic) {
            ks.push_back(kPi * (2.0 * n + 1) / p.L);
        } else {
            ks.push_back(2 * kPi * n / p.L);
        }
    }
    return ks;
}

std::vector<double> positive_momenta(const ModelParams &p) {
    std::vector<double> ks;
    for (double k : momentum_grid(p)) {
        if (k > 0) ks.push_back(k);
    }
    return ks;
}

std::vector<double> unpaired_momenta(const ModelParams &p) {
    p.validate();
    if (p.bc == Boundary::kAntiperiodic) return {};
    return {-kPi, 0.0};
}

BlochCoefficients bloch_coefficients(const ModelParams &p, double k) {
    BlochCoefficients c;
    c.a = cplx(2 * (p.h - p.J * std::cos(k)), p.gamma / 2);
    if (p.kind == Chain::kIsing) {
        c.b = cplx(0, 2 * p.J * std::sin(k));
    } else {
        c.b = cplx(0, p.J * clausen_g(k, p.d, p.L));
    }
    return c;
}

cplx quasiparticle_energy(cplx a, cplx b) {
    cplx lam = std::sqrt(a * a + std::norm(b));
    double tol = 64 * kEps * std::abs(lam);
    if (std::abs(lam.imag()) <= tol) {
        return cplx(std::abs(lam.real()), 0.0);
    }
    if (lam.imag() > 0) lam = -lam;
    return lam;
}

ModeData bogoliubov(cplx a, cplx b, cplx lambda) {
    if (b == cplx(0, 0)) {
        throw DegenerateError("bogoliubov: b = 0, the Bloch block is already diagonal");
    }
    ModeData m;
    m.a = a;
    m.b = b;
    m.lambda = lambda;
    cplx ratio = (lambda - a) / b;
    double u = 1.0 / std::sqrt(1.0 + std::norm(ratio));
    m.u = u;
    m.v = u * ratio;
    // det [[u, -v*], [v, u*]] evaluated with the printed entries.
    m.detV = u * u * (1.0 + (lambda - a) * (lambda - a) / std::norm(b));
    m.N = std::norm(m.u) + std::norm(m.v);
    return m;
}

ModeData mode_data(const ModelParams &p, double k) {
    BlochCoefficients c = bloch_coefficients(p, k);
    cplx lam = quasiparticle_energy(c.a, c.b);
    ModeData m;
    if (c.b == cplx(0, 0)) {
        m.a = c.a;
        m.b = c.b;
        m.lambda = lam;
        m.u = 1;
        m.v = 0;
        m.detV = 1;
        m.N = 1;
        m.diagonal = true;
    } else {
        m = bogoliubov(c.a, c.b, lam);
    }
    m.k = k;
    return m;
}

std::vector<ModeData> positive_modes(const ModelParams &p) {
    std::vector<ModeData> out;
    for (double k : positive_momenta(p)) out.push_back(mode_data(p, k));
    return out;
}

double resonant_momentum(const ModelParams &p) {
    p.validate();
    double ratio = p.h / p.J;
    if (!(std::abs(ratio) < 1)) {
        throw RegimeError("no resonant momentum for |h| >= J");
    }
    double q0 = std::acos(ratio);
    std::vector<double> ks = positive_momenta(p);
    auto hi = std::lower_bound(ks.begin(), ks.end(), q0);
    if (hi == ks.begin()) return *hi;
    if (hi == ks.end()) return ks.back();
    double kl = *(hi - 1);
    double kh = *hi;
    double gl = std::abs(mode_data(p, kl).lambda.imag());
    double gh = std::abs(mode_data(p, kh).lambda.imag());
    return gh < gl ? kh : kl;
}

double critical_gamma(const ModelParams &p) {
    p.validate();
    double ratio = p.h / p.J;
    if (!(std::abs(ratio) < 1)) {
        throw RegimeError("critical_gamma: no resonant momentum for |h| >= J");
    }
    if (p.kind == Chain::kIsing) {
        return 4 * p.J * std::sqrt(1 - ratio * ratio);
    }
    // g_d at finite L is smooth only on grid momenta; interpolate between them.
    const double q = std::acos(ratio);
    std::vector<double> ks = momentum_grid(p);
    auto hi = std::upper_bound(ks.begin(), ks.end(), q);
    if (hi == ks.begin() || hi == ks.end()) {
        return 2 * p.J * std::abs(clausen_g(q, p.d, p.L));
    }
    double k0 = *(hi - 1), k1 = *hi;
    double g0 = clausen_g(k0, p.d, p.L), g1 = clausen_g(k1, p.d, p.L);
    double t = (q - k0) / (k1 - k0);
    return 2 * p.J * std::abs((1 - t) * g0 + t * g1);
}

double critical_gamma_limit(const ModelParams &p) {
    if (p.kind == Chain::kIsing) return critical_gamma(p);
    double ratio = p.h / p.J;
    if (!(std::abs(ratio) < 1)) {
        throw RegimeError("critical_gamma_limit: no resonant momentum for |h| >= J");
    }
    return 2 * p.J * std::abs(clausen_g_limit(std::acos(ratio), p.d));
}

SpectrumSummary spectrum_summary(const ModelParams &p) {
    p.validate();
    SpectrumSummary s;
    s.imaginary_gap = std::numeric_limits<double>::infinity();
    for (double k : momentum_grid(p)) {
        ModeData m = mode_data(p, k);
        s.imaginary_gap = std::min(s.imaginary_gap, std::abs(m.lambda.imag()));
        if (k > 0) s.Lambda0 += m.lambda;
    }
    if (std::abs(p.h) < p.J) {
        s.gamma_c = critical_gamma(p);
        if (p.gamma < s.gamma_c) {
            s.has_resonance = true;
            s.qstar = resonant_momentum(p);
            s.qstar_residual = std::abs(mode_data(p, *s.qstar).lambda.imag());
        }
    }
    return s;
}

cplx smallk_asymptotics(double d, double h, double gamma, double k, double J) {
    if (!(d < 1)) {
        throw RegimeError("smallk_asymptotics: expansion holds for d < 1 only");
    }
    if (!(k > 0)) {
        throw RegimeError("smallk_asymptotics: k must be positive");
    }
    double c = std::cos(kPi * d / 2) * std::tgamma(1 - d);
    double zeta = std::riemann_zeta(d - 1);
    cplx a0(2 * (h - J), gamma / 2);
    cplx bracket = 1.0 + zeta * std::pow(k, 2 - d) / c +
                   a0 * a0 * std::pow(k, 2 - 2 * d) / (8 * J * J * c * c);
    cplx lam = 2 * J * c * std::pow(k, d - 1) * bracket;
    if (lam.imag() > 0) lam = -lam;
    return lam;
}

double dgamma_dk_at_qstar(double h, double gamma, double J) {
    double ratio = h / J;
    if (!(std::abs(ratio) < 1)) {
        throw RegimeError("dgamma_dk_at_qstar: no resonant momentum for |h| >= J");
    }
    double gc = 4 * J * std::sqrt(1 - ratio * ratio);
    if (!(gamma < gc)) {
        throw RegimeError("dgamma_dk_at_qstar: linear expansion diverges for gamma >= gamma_c");
    }
    return gamma / (2 * std::sqrt(1 - gamma * gamma / (gc * gc)));
}

}  // namespace noclick
