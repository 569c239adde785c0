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

#include "noclick/gaussian_state.h"

#include <cmath>

#include "noclick/errors.h"

namespace noclick {

namespace {

const cplx kI(0, 1);

bool unpaired_occupied(const ModelParams &p, double k) {
    cplx a = bloch_coefficients(p, k).a;
    return a.imag() > 0 || (a.imag() == 0 && a.real() < 0);
}

// Coordinates of (1, 0) in the non-orthogonal basis {r0, r2}.
std::array<cplx, 2> fock_vacuum_coordinates(const SectorBasis &s) {
    cplx det = s.r0[0] * s.r2[1] - s.r2[0] * s.r0[1];
    if (std::abs(det) < 1e-13) {
        throw DegenerateError("exceptional point: vacuum and pair state coincide");
    }
    return {s.r2[1] / det, -s.r0[1] / det};
}

void check_window(int L, const Window &w) {
    if (w.length <= 0 || w.length > L) {
        throw InvalidParameter("window length must lie in [1, L]");
    }
    if (w.offset < 0 || w.offset >= L) {
        throw InvalidParameter("window offset must lie in [0, L)");
    }
}

// Fills the interleaved Majorana matrix from G(r) = <c†_m c_p> and
// F(r) = <c_m c_p>, r = m - p, stored at index r + l - 1.
Eigen::MatrixXcd assemble(int l, const std::vector<cplx> &G, const std::vector<cplx> &F) {
    const std::array<cplx, 2> x = {1.0, -kI};  // coefficient of c†
    const std::array<cplx, 2> y = {1.0, kI};   // coefficient of c
    Eigen::MatrixXcd M(2 * l, 2 * l);
    for (int i = 0; i < l; ++i) {
        for (int j = 0; j < l; ++j) {
            int r = i - j;
            int ip = r + l - 1;
            int im = -r + l - 1;
            cplx cdcd = std::conj(F[im]);
            cplx cdc = G[ip];
            cplx ccd = (r == 0 ? 1.0 : 0.0) - G[im];
            cplx cc = F[ip];
            for (int s = 0; s < 2; ++s) {
                for (int t = 0; t < 2; ++t) {
                    M(2 * i + s, 2 * j + t) =
                        x[s] * x[t] * cdcd + x[s] * y[t] * cdc + y[s] * x[t] * ccd + y[s] * y[t] * cc;
                }
            }
        }
    }
    return M;
}

}  // namespace

SectorBasis sector_basis(const ModeData &m) {
    SectorBasis s;
    s.e0 = m.a - m.lambda;
    s.e2 = m.a + m.lambda;
    if (m.diagonal) {
        bool empty_is_vacuum = std::abs(m.a - m.lambda) <= std::abs(m.a + m.lambda);
        s.r0 = empty_is_vacuum ? std::array<cplx, 2>{1.0, 0.0} : std::array<cplx, 2>{0.0, 1.0};
        s.r2 = empty_is_vacuum ? std::array<cplx, 2>{0.0, 1.0} : std::array<cplx, 2>{1.0, 0.0};
        return s;
    }
    cplx shift = m.lambda - m.a;
    s.r0 = {m.u, -shift * m.u / std::conj(m.b)};
    s.r2 = {-shift * m.u / m.b, -m.u};
    return s;
}

cplx pair_overlap(const ModeData &m) {
    SectorBasis s = sector_basis(m);
    return std::conj(s.r0[0]) * s.r2[0] + std::conj(s.r0[1]) * s.r2[1];
}

ModeAmplitudes initial_overlap_amplitudes(const ModelParams &p) {
    ModeAmplitudes out;
    for (const ModeData &m : positive_modes(p)) {
        std::array<cplx, 2> c = fock_vacuum_coordinates(sector_basis(m));
        double n = std::hypot(std::abs(c[0]), std::abs(c[1]));
        if (std::abs(c[0]) <= 1e-14 * n) {
            throw RegimeError("c-vacuum has no overlap with the quasiparticle vacuum at k = " +
                              std::to_string(m.k));
        }
        out.push_back({m.k, c[0] / n, c[1] / n});
    }
    return out;
}

SteadyState steady_state(const ModelParams &p, double phi) {
    SpectrumSummary summary = spectrum_summary(p);
    SteadyState s;
    s.phi = phi;
    if (!summary.has_resonance) return s;
    double q = *summary.qstar;
    std::array<cplx, 2> c = fock_vacuum_coordinates(sector_basis(mode_data(p, q)));
    double n = std::hypot(std::abs(c[0]), std::abs(c[1]));
    if (std::abs(c[0]) <= 1e-14 * n) {
        throw RegimeError("c-vacuum has no overlap with the quasiparticle vacuum at q*");
    }
    s.A = c[0] / n;
    s.B = c[1] / n;
    s.qstar = q;
    return s;
}

SteadyState vacuum_state(const ModelParams &p) {
    p.validate();
    return SteadyState{};
}

double state_norm(const SteadyState &s, const ModelParams &p) {
    double n = std::norm(s.A) + std::norm(s.B);
    if (s.B != cplx(0, 0)) {
        if (!s.qstar) throw InvalidParameter("state has a pair amplitude but no q*");
        cplx ov = pair_overlap(mode_data(p, *s.qstar));
        n += 2 * std::real(std::polar(1.0, s.phi) * std::conj(s.A) * s.B * ov);
    }
    return n;
}

PairProductState to_pair_product(const SteadyState &s, const ModelParams &p) {
    PairProductState out;
    out.L = p.L;
    bool used_q = false;
    for (const ModeData &m : positive_modes(p)) {
        SectorBasis basis = sector_basis(m);
        PairProductState::Sector sec{m.k, basis.r0[0], basis.r0[1]};
        if (s.qstar && std::abs(m.k - *s.qstar) < 1e-12) {
            cplx eb = std::polar(1.0, s.phi) * s.B;
            sec.c0 = s.A * basis.r0[0] + eb * basis.r2[0];
            sec.c2 = s.A * basis.r0[1] + eb * basis.r2[1];
            used_q = true;
        }
        out.sectors.push_back(sec);
    }
    if (s.B != cplx(0, 0) && !used_q) {
        throw InvalidParameter("q* of the state is not a positive momentum of this grid");
    }
    for (double k : unpaired_momenta(p)) {
        out.unpaired.push_back({k, unpaired_occupied(p, k)});
    }
    return out;
}

PairProductState evolved_fock_vacuum(const ModelParams &p, double t) {
    if (t < 0) throw InvalidParameter("evolution time must be non-negative");
    PairProductState out;
    out.L = p.L;
    for (const ModeData &m : positive_modes(p)) {
        SectorBasis basis = sector_basis(m);
        std::array<cplx, 2> c = fock_vacuum_coordinates(basis);
        // Common factor e^{-i e0 t} dropped; the remaining one has modulus <= 1.
        cplx decay = std::exp(-kI * (basis.e2 - basis.e0) * t);
        cplx beta = c[1] * decay;
        out.sectors.push_back(
            {m.k, c[0] * basis.r0[0] + beta * basis.r2[0], c[0] * basis.r0[1] + beta * basis.r2[1]});
    }
    for (double k : unpaired_momenta(p)) out.unpaired.push_back({k, false});
    return out;
}

double total_occupation(const PairProductState &s) {
    double n = 0;
    for (const auto &sec : s.sectors) {
        n += 2 * std::norm(sec.c2) / (std::norm(sec.c0) + std::norm(sec.c2));
    }
    for (const auto &u : s.unpaired) n += u.occupied ? 1 : 0;
    return n;
}

CorrelationMatrix majorana_correlation(const PairProductState &s, const Window &w) {
    check_window(s.L, w);
    const int l = w.length;
    const double L = s.L;
    std::vector<cplx> G(2 * l - 1), F(2 * l - 1);
    for (const auto &sec : s.sectors) {
        double nrm = std::norm(sec.c0) + std::norm(sec.c2);
        if (!(nrm > 0)) throw NumericalError("sector with vanishing norm");
        double occ = std::norm(sec.c2) / nrm;
        cplx anomal = std::conj(sec.c0) * sec.c2 / nrm;
        for (int r = -(l - 1); r <= l - 1; ++r) {
            G[r + l - 1] += 2.0 / L * std::cos(sec.k * r) * occ;
            F[r + l - 1] += 2.0 * kI / L * std::sin(sec.k * r) * anomal;
        }
    }
    for (const auto &u : s.unpaired) {
        if (!u.occupied) continue;
        for (int r = -(l - 1); r <= l - 1; ++r) G[r + l - 1] += std::cos(u.k * r) / L;
    }
    return {assemble(l, G, F), w.offset};
}

CorrelationMatrix majorana_correlation(const SteadyState &s, const ModelParams &p, const Window &w) {
    return majorana_correlation(to_pair_product(s, p), w);
}

CorrelationMatrix appendix_vacuum_correlation(const ModelParams &p, const Window &w) {
    if (p.bc != Boundary::kAntiperiodic) {
        throw InvalidParameter("closed-form vacuum correlations need the antiperiodic grid");
    }
    check_window(p.L, w);
    const int l = w.length;
    const double L = p.L;
    std::vector<cplx> aa(2 * l - 1), bb(2 * l - 1), ab(2 * l - 1), ba(2 * l - 1);
    for (const ModeData &m : positive_modes(p)) {
        cplx u2 = m.u * m.u;
        double n2 = m.N * m.N;
        cplx x = 2 * (m.lambda - m.a).real() * u2 / (m.b * n2);
        cplx y = 2.0 * kI * (m.lambda - m.a).imag() * u2 / (m.b * n2);
        cplx c = (u2 - std::norm(m.v)) / n2;
        for (int r = -(l - 1); r <= l - 1; ++r) {
            double sn = std::sin(m.k * r);
            double cs = std::cos(m.k * r);
            int i = r + l - 1;
            aa[i] += 2.0 * kI * sn / L * y;
            bb[i] -= 2.0 * kI * sn / L * y;
            ab[i] += -kI / L * (2 * cs * c - 2.0 * kI * sn * x);
            ba[i] += kI / L * (2 * cs * c + 2.0 * kI * sn * x);
        }
    }
    Eigen::MatrixXcd M(2 * l, 2 * l);
    for (int i = 0; i < l; ++i) {
        for (int j = 0; j < l; ++j) {
            int idx = i - j + l - 1;
            double delta = i == j ? 1.0 : 0.0;
            M(2 * i, 2 * j) = delta + aa[idx];
            M(2 * i, 2 * j + 1) = ab[idx];
            M(2 * i + 1, 2 * j) = ba[idx];
            M(2 * i + 1, 2 * j + 1) = delta + bb[idx];
        }
    }
    return {M, w.offset};
}

}  // namespace noclick
