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

#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <random>

#include "noclick/clausen.h"
#include "noclick/errors.h"

using namespace noclick;

namespace {

constexpr double kPi = std::numbers::pi;
const double kHalfRoot = 1 / std::sqrt(2.0);

ModelParams ising(double h, double gamma, int L = 64) {
    ModelParams p;
    p.h = h;
    p.gamma = gamma;
    p.L = L;
    return p;
}

ModelParams kitaev(double d, double h, double gamma, int L) {
    ModelParams p = ising(h, gamma, L);
    p.kind = Chain::kLongRangeKitaev;
    p.d = d;
    return p;
}

Eigen::Matrix2cd bloch_matrix(cplx a, cplx b) {
    Eigen::Matrix2cd H;
    H << a, b, std::conj(b), -a;
    return H;
}

Eigen::Matrix2cd v_matrix(const ModeData &m) {
    Eigen::Matrix2cd V;
    cplx s = m.lambda - m.a;
    V << m.u, -s / std::conj(m.b) * std::conj(m.u), s / m.b * m.u, std::conj(m.u);
    return V;
}

}  // namespace

TEST(model, params_validation) {
    ModelParams p = ising(0.5, 1.0, 7);
    EXPECT_THROW(p.validate(), InvalidParameter);
    p.L = 0;
    EXPECT_THROW(p.validate(), InvalidParameter);
    p.L = 8;
    p.gamma = -0.1;
    EXPECT_THROW(p.validate(), InvalidParameter);
    p.gamma = 0;
    p.J = 0;
    EXPECT_THROW(p.validate(), InvalidParameter);
    p.J = 1;
    EXPECT_NO_THROW(p.validate());
    EXPECT_EQ(ModelParams{}.bc, Boundary::kAntiperiodic);
}

TEST(model, momentum_grid_small) {
    ModelParams p = ising(0, 0, 4);
    std::vector<double> abc = momentum_grid(p);
    std::vector<double> want = {-3 * kPi / 4, -kPi / 4, kPi / 4, 3 * kPi / 4};
    ASSERT_EQ(abc.size(), 4u);
    for (int i = 0; i < 4; ++i) EXPECT_DOUBLE_EQ(abc[i], want[i]);

    p.bc = Boundary::kPeriodic;
    std::vector<double> pbc = momentum_grid(p);
    want = {-kPi, -kPi / 2, 0, kPi / 2};
    for (int i = 0; i < 4; ++i) EXPECT_DOUBLE_EQ(pbc[i], want[i]);
    EXPECT_EQ(unpaired_momenta(p).size(), 2u);
}

TEST(model, momentum_grid_odd_multiples_and_closure) {
    ModelParams p = ising(0, 0, 250);
    std::vector<double> ks = momentum_grid(p);
    ASSERT_EQ(ks.size(), 250u);
    for (size_t i = 0; i < ks.size(); ++i) {
        double m = ks[i] * 250 / kPi;
        EXPECT_NEAR(m, std::round(m), 1e-9);
        EXPECT_EQ(std::abs(static_cast<long>(std::round(m))) % 2, 1);
        EXPECT_NEAR(ks[i], -ks[ks.size() - 1 - i], 1e-14);
        if (i) {
            EXPECT_LT(ks[i - 1], ks[i]);
        }
    }
    p.L = 9;
    EXPECT_THROW(momentum_grid(p), InvalidParameter);
}

TEST(model, bloch_coefficients_examples) {
    BlochCoefficients c = bloch_coefficients(ising(0, 0), kPi / 2);
    EXPECT_NEAR(std::abs(c.a), 0, 1e-15);
    EXPECT_NEAR(std::abs(c.b - cplx(0, 2)), 0, 1e-15);

    c = bloch_coefficients(ising(kHalfRoot, 2 * std::sqrt(2.0)), kPi / 4);
    EXPECT_NEAR(std::abs(c.a - cplx(0, std::sqrt(2.0))), 0, 1e-14);
    EXPECT_NEAR(std::abs(c.b - cplx(0, std::sqrt(2.0))), 0, 1e-14);
}

TEST(model, kitaev_pairing_matches_direct_sum) {
    ModelParams p = kitaev(0.2, 0.1, 0, 2000);
    for (int n : {0, 17, 500, 999}) {
        double k = kPi * (2 * n + 1) / p.L;
        long double direct = 0;
        for (int r = 1; r < p.L; ++r) {
            int l = std::min(r, p.L - r);
            direct += std::sin(static_cast<long double>(k) * r) / std::pow(static_cast<long double>(l), 0.2L);
        }
        BlochCoefficients c = bloch_coefficients(p, k);
        EXPECT_NEAR(c.b.real(), 0, 1e-15);
        EXPECT_NEAR(c.b.imag(), static_cast<double>(direct), 1e-10);
    }
}

TEST(model, quasiparticle_energy_branches) {
    EXPECT_NEAR(std::abs(quasiparticle_energy(0, cplx(0, 2)) - cplx(2, 0)), 0, 1e-15);
    EXPECT_NEAR(std::abs(quasiparticle_energy(cplx(0, 1), 0) - cplx(0, -1)), 0, 1e-15);
    EXPECT_EQ(quasiparticle_energy(0, 0), cplx(0, 0));

    // Resonant momentum of the Ising chain below gamma_c: real energy.
    ModelParams p = ising(kHalfRoot, 1.0);
    BlochCoefficients c = bloch_coefficients(p, kPi / 4);
    cplx lam = quasiparticle_energy(c.a, c.b);
    EXPECT_EQ(lam.imag(), 0.0);
    EXPECT_GT(lam.real(), 0.0);
}

TEST(model, bogoliubov_examples) {
    ModeData m = bogoliubov(0, cplx(0, 2), 2);
    EXPECT_NEAR(std::abs(m.u - kHalfRoot), 0, 1e-15);
    EXPECT_NEAR(std::abs(m.v - cplx(0, -kHalfRoot)), 0, 1e-15);
    EXPECT_NEAR(m.N, 1, 1e-15);
    EXPECT_THROW(bogoliubov(cplx(1, 0), 0, 1), DegenerateError);

    ModeData q = mode_data(ising(kHalfRoot, 1.0), kPi / 3);
    Eigen::Matrix2cd V = v_matrix(q);
    Eigen::Matrix2cd D = V.inverse() * bloch_matrix(q.a, q.b) * V;
    EXPECT_NEAR(std::abs(D(0, 0) - q.lambda), 0, 1e-10);
    EXPECT_NEAR(std::abs(D(1, 1) + q.lambda), 0, 1e-10);
    EXPECT_NEAR(std::abs(D(0, 1)), 0, 1e-10);
    EXPECT_NEAR(std::abs(D(1, 0)), 0, 1e-10);
    EXPECT_NEAR(std::abs(V.determinant() - q.detV), 0, 1e-12);
}

TEST(model, diagonalization_random_samples) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> uh(-2, 2), ug(0, 8), uk(0.01, kPi - 0.01);
    for (int s = 0; s < 100; ++s) {
        ModelParams p = ising(uh(rng), ug(rng));
        ModeData m = mode_data(p, uk(rng));
        EXPECT_LE(m.lambda.imag(), 0.0);
        cplx want = m.a * m.a + std::norm(m.b);
        EXPECT_LE(std::abs(m.lambda * m.lambda - want), 1e-12 * std::max(1.0, std::abs(want)));
        EXPECT_NEAR(m.N, 1, 1e-12);
        EXPECT_NEAR(std::norm(m.u) * (1 + std::norm((m.lambda - m.a) / m.b)), 1, 1e-12);
        Eigen::Matrix2cd V = v_matrix(m);
        Eigen::Matrix2cd D = V.inverse() * bloch_matrix(m.a, m.b) * V;
        EXPECT_NEAR(std::abs(D(0, 0) - m.lambda), 0, 1e-10);
        EXPECT_NEAR(std::abs(D(1, 1) + m.lambda), 0, 1e-10);
        EXPECT_NEAR(std::abs(D(0, 1)) + std::abs(D(1, 0)), 0, 1e-10);
    }
}

TEST(model, spectrum_symmetric_in_k) {
    for (const ModelParams &p : {ising(0.4, 1.3, 32), kitaev(0.5, 0.3, 2.0, 32), kitaev(1.7, 0.3, 2.0, 32)}) {
        for (double k : positive_momenta(p)) {
            EXPECT_NEAR(std::abs(mode_data(p, k).lambda - mode_data(p, -k).lambda), 0, 1e-12);
        }
    }
}

TEST(model, hermitian_limit_dispersion) {
    ModelParams p = ising(0.37, 0.0, 64);
    p.J = 1.3;
    for (double k : momentum_grid(p)) {
        cplx lam = mode_data(p, k).lambda;
        double want = 2 * std::sqrt(std::pow(p.h - p.J * std::cos(k), 2) + p.J * p.J * std::pow(std::sin(k), 2));
        EXPECT_EQ(lam.imag(), 0.0);
        EXPECT_NEAR(lam.real(), want, 1e-12);
    }
}

TEST(model, spectrum_summary_ising) {
    SpectrumSummary below = spectrum_summary(ising(kHalfRoot, 1.0, 64));
    ASSERT_TRUE(below.qstar.has_value());
    EXPECT_NEAR(*below.qstar, kPi / 4, kPi / 64 + 1e-12);
    EXPECT_LT(below.imaginary_gap, 0.05);
    EXPECT_NEAR(below.gamma_c, 2 * std::sqrt(2.0), 1e-12);

    SpectrumSummary above = spectrum_summary(ising(kHalfRoot, 4.0, 64));
    EXPECT_FALSE(above.qstar.has_value());
    EXPECT_GT(above.imaginary_gap, 0.0);

    // Gap strictly positive and increasing above gamma_c.
    double prev = 0;
    for (double g : {3.0, 3.5, 4.0, 5.0, 6.0}) {
        double gap = spectrum_summary(ising(kHalfRoot, g, 128)).imaginary_gap;
        EXPECT_GT(gap, prev);
        prev = gap;
    }
}

TEST(model, single_resonance_per_half_grid) {
    ModelParams p = ising(kHalfRoot, 1.0, 256);
    // Only the two momenta bracketing q* come close to the real axis.
    double scale = dgamma_dk_at_qstar(p.h, p.gamma) * 2 * kPi / p.L;
    int near = 0;
    for (double k : positive_momenta(p)) {
        if (std::abs(mode_data(p, k).lambda.imag()) < scale) ++near;
    }
    EXPECT_GE(near, 1);
    EXPECT_LE(near, 2);
}

TEST(model, lambda0_is_sum_over_positive_modes) {
    ModelParams p = ising(0.3, 0.8, 16);
    cplx sum = 0;
    for (const ModeData &m : positive_modes(p)) sum += m.lambda;
    EXPECT_NEAR(std::abs(spectrum_summary(p).Lambda0 - sum), 0, 1e-13);
}

TEST(model, kitaev_gap_closes_with_L) {
    double prev = 1e300;
    for (int L : {250, 500, 1000, 2000}) {
        double gap = spectrum_summary(kitaev(0.2, 0.1, 4.0, L)).imaginary_gap;
        EXPECT_LT(gap, prev);
        prev = gap;
    }
}

TEST(model, critical_gamma_values) {
    EXPECT_NEAR(critical_gamma(ising(kHalfRoot, 0)), 2 * std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(critical_gamma(ising(0, 0)), 4, 1e-15);
    EXPECT_THROW(critical_gamma(ising(1.0, 0)), RegimeError);
    EXPECT_THROW(critical_gamma(ising(-1.5, 0)), RegimeError);

    // Finite L, d = 1.7: equals 2 g_d at the grid, interpolated to arccos(0.1).
    ModelParams p = kitaev(1.7, 0.1, 0, 2000);
    double q = std::acos(0.1);
    double k0 = kPi * (2 * std::floor((q * p.L / kPi - 1) / 2) + 1) / p.L;
    double k1 = k0 + 2 * kPi / p.L;
    ASSERT_LE(k0, q);
    ASSERT_GE(k1, q);
    double t = (q - k0) / (k1 - k0);
    double want = 2 * ((1 - t) * clausen_g(k0, 1.7, p.L) + t * clausen_g(k1, 1.7, p.L));
    EXPECT_NEAR(critical_gamma(p), want, 1e-12);
    // Thermodynamic values from an independent polylogarithm evaluation: 4 Im Li_d(e^{iq}).
    EXPECT_NEAR(critical_gamma(p), 3.70206194721, 2e-3);
    EXPECT_NEAR(critical_gamma(kitaev(0.2, 0.1, 0, 2000)), 2.51535058146, 2e-3);
    EXPECT_NEAR(critical_gamma_limit(kitaev(0.5, 0.1, 0, 2)), 4 * 0.723070959153679, 1e-8);
    EXPECT_NEAR(critical_gamma_limit(kitaev(1.7, 0.1, 0, 2)), 4 * 0.925515486802649, 1e-8);
}

TEST(model, smallk_asymptotics_exponents) {
    // Compared against exact energies on an L = 1e6 grid.
    ModelParams p = kitaev(0.2, 0.1, 1.0, 1000000);
    std::vector<double> lk, lre, lim, lre_asym, lim_asym;
    for (int n = 0; n < 20; ++n) {
        double k = kPi * (2 * n + 1) / p.L;
        cplx exact = mode_data(p, k).lambda;
        cplx approx = smallk_asymptotics(0.2, 0.1, 1.0, k);
        lk.push_back(std::log(k));
        lre.push_back(std::log(std::abs(exact.real())));
        lim.push_back(std::log(std::abs(exact.imag())));
        lre_asym.push_back(std::log(std::abs(approx.real())));
        lim_asym.push_back(std::log(std::abs(approx.imag())));
    }
    auto slope = [&](const std::vector<double> &y) {
        double n = lk.size(), sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (size_t i = 0; i < lk.size(); ++i) {
            sx += lk[i];
            sy += y[i];
            sxx += lk[i] * lk[i];
            sxy += lk[i] * y[i];
        }
        return (n * sxy - sx * sy) / (n * sxx - sx * sx);
    };
    EXPECT_NEAR(slope(lre), -0.8, 0.05);
    EXPECT_NEAR(slope(lim), 0.8, 0.05);
    EXPECT_NEAR(slope(lre_asym), -0.8, 0.05);
    EXPECT_NEAR(slope(lim_asym), 0.8, 0.05);
}

TEST(model, smallk_asymptotics_leading_term) {
    double d = 0.5;
    double c = std::cos(kPi * d / 2) * std::tgamma(1 - d);
    for (double k : {1e-3, 1e-4, 1e-5}) {
        cplx lam = smallk_asymptotics(d, 1.0, 0.0, k);
        EXPECT_NEAR(lam.imag(), 0, 1e-15);
        double lead = 2 * c * std::pow(k, d - 1);
        EXPECT_NEAR(lam.real() / lead, 1, 2 * std::pow(k, 2 - d) * std::abs(std::riemann_zeta(d - 1)) / c);
    }
    EXPECT_THROW(smallk_asymptotics(1.0, 0.1, 1.0, 1e-3), RegimeError);
    EXPECT_THROW(smallk_asymptotics(1.7, 0.1, 1.0, 1e-3), RegimeError);
}

TEST(model, dgamma_dk_matches_finite_difference) {
    const double h = kHalfRoot, g = 1.0;
    double q = std::acos(h);
    ModelParams p = ising(h, g);
    double eps = 1e-6;
    // |Im lambda| has a kink at q*, so compare one-sided slopes.
    double right = std::abs(mode_data(p, q + eps).lambda.imag()) / eps;
    double left = std::abs(mode_data(p, q - eps).lambda.imag()) / eps;
    EXPECT_NEAR(dgamma_dk_at_qstar(h, g), right, 1e-5);
    EXPECT_NEAR(dgamma_dk_at_qstar(h, g), left, 1e-5);
    EXPECT_NEAR(dgamma_dk_at_qstar(h, g), 0.5345224838248488, 1e-12);

    // Linear in gamma near zero, divergent at gamma_c.
    EXPECT_NEAR(dgamma_dk_at_qstar(h, 1e-4) / 1e-4, 0.5, 1e-6);
    double gc = 2 * std::sqrt(2.0);
    double big = dgamma_dk_at_qstar(h, gc * (1 - 1e-6));
    EXPECT_NEAR(big * std::sqrt(2e-6) / gc, 0.5, 1e-3);
    EXPECT_THROW(dgamma_dk_at_qstar(h, gc), RegimeError);
    EXPECT_THROW(dgamma_dk_at_qstar(1.2, 0.5), RegimeError);
}
