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

#ifndef NOCLICK_MODEL_H
#define NOCLICK_MODEL_H

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace noclick {

using cplx = std::complex<double>;

enum class Chain { kIsing, kLongRangeKitaev };
enum class Boundary { kPeriodic, kAntiperiodic };

std::string to_string(Chain kind);
std::string to_string(Boundary bc);
Chain parse_chain(const std::string &text);
Boundary parse_boundary(const std::string &text);

struct ModelParams {
    Chain kind = Chain::kIsing;
    double J = 1.0;
    double h = 0.0;
    double gamma = 0.0;
    /// Power-law exponent of the pairing; ignored for the Ising chain.
    double d = 1.0;
    int L = 8;
    Boundary bc = Boundary::kAntiperiodic;

    /// Throws InvalidParameter unless L is even and positive, J > 0, gamma >= 0.
    void validate() const;
};

/// Everything needed to write the non-Hermitian quasiparticles of one momentum.
struct ModeData {
    double k = 0;
    cplx a;
    cplx b;
    cplx lambda;
    cplx u;
    cplx v;
    cplx detV;
    double N = 1;
    /// True when b vanishes and the Bloch block is already diagonal.
    bool diagonal = false;
};

/// Sorted ascending, exactly L momenta.
std::vector<double> momentum_grid(const ModelParams &p);

/// Strictly positive grid momenta, i.e. one representative per (k, -k) sector.
std::vector<double> positive_momenta(const ModelParams &p);

/// Grid momenta with k == -k mod 2pi (k = 0 and k = -pi on the periodic grid).
std::vector<double> unpaired_momenta(const ModelParams &p);

struct BlochCoefficients {
    cplx a;
    cplx b;
};

BlochCoefficients bloch_coefficients(const ModelParams &p, double k);

/// Root of a^2 + |b|^2 with Im <= 0; Re >= 0 when the imaginary part vanishes.
cplx quasiparticle_energy(cplx a, cplx b);

/// Throws DegenerateError when b == 0.
ModeData bogoliubov(cplx a, cplx b, cplx lambda);

ModeData mode_data(const ModelParams &p, double k);

/// mode_data for every positive momentum, in ascending k.
std::vector<ModeData> positive_modes(const ModelParams &p);

struct SpectrumSummary {
    double imaginary_gap = 0;
    std::optional<double> qstar;
    /// |Im lambda| at the reported q*.
    double qstar_residual = 0;
    /// Zero when |h| >= J (no resonant momentum).
    double gamma_c = 0;
    bool has_resonance = false;
    cplx Lambda0;
};

SpectrumSummary spectrum_summary(const ModelParams &p);

/// Grid momentum closest to the resonance cos q = h/J, chosen among the two
/// positive momenta bracketing it by the smaller |Im lambda|.
/// Throws RegimeError when |h| >= J.
double resonant_momentum(const ModelParams &p);

/// Ising: 4J sqrt(1 - (h/J)^2). Kitaev: 2J |g_d(arccos(h/J))|, with the finite-L
/// g_d interpolated linearly between the two grid momenta around arccos(h/J).
/// Throws RegimeError when |h| >= J.
double critical_gamma(const ModelParams &p);

/// Same as critical_gamma with the L -> infinity Clausen function.
double critical_gamma_limit(const ModelParams &p);

/// Leading small-k expansion of lambda_k for the long-range chain with d < 1.
/// Throws RegimeError for d >= 1 or k <= 0.
cplx smallk_asymptotics(double d, double h, double gamma, double k, double J = 1.0);

/// |d Im(lambda_k)/dk| at the resonant momentum of the Ising chain.
/// Throws RegimeError when gamma >= gamma_c or |h| >= J.
double dgamma_dk_at_qstar(double h, double gamma, double J = 1.0);

}  // namespace noclick

#endif
