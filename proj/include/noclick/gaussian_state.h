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

#ifndef NOCLICK_GAUSSIAN_STATE_H
#define NOCLICK_GAUSSIAN_STATE_H

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <vector>

#include "noclick/model.h"

namespace noclick {

/// The state A|0_gamma> + e^{i phi} B |q*, -q*>. A and B need not be normalized.
struct SteadyState {
    cplx A = 1;
    cplx B = 0;
    double phi = 0;
    std::optional<double> qstar;
};

struct ModeAmplitude {
    double k = 0;
    cplx alpha;
    cplx beta;
};

/// Per positive momentum, the c-vacuum written as alpha |0_gamma>_k + beta |pair>_k.
using ModeAmplitudes = std::vector<ModeAmplitude>;

struct Window {
    int offset = 0;
    int length = 0;
};

/// 2l x 2l matrix <c_m c_n> / <psi|psi> over the Majoranas of a site window,
/// interleaved as (c†+c, i(c-c†)) per site.
struct CorrelationMatrix {
    Eigen::MatrixXcd M;
    int site_offset = 0;
};

/// Right eigenvectors of one (k, -k) even sector in the basis
/// {|0>, c†_k c†_{-k}|0>}. r0 is the quasiparticle vacuum (eigenvalue a - lambda),
/// r2 the pair state (eigenvalue a + lambda); both have unit norm.
struct SectorBasis {
    std::array<cplx, 2> r0;
    std::array<cplx, 2> r2;
    cplx e0;
    cplx e2;
};

SectorBasis sector_basis(const ModeData &m);

/// <r0|r2>, the overlap entering the norm of the steady state.
cplx pair_overlap(const ModeData &m);

/// Gaussian state that is a product over (k, -k) sectors, plus the
/// occupations of unpaired momenta on the periodic grid.
struct PairProductState {
    struct Sector {
        double k = 0;
        cplx c0;
        cplx c2;
    };
    struct Single {
        double k = 0;
        bool occupied = false;
    };
    int L = 0;
    std::vector<Sector> sectors;
    std::vector<Single> unpaired;
};

/// Throws DegenerateError at an exceptional point (r0 parallel to r2) and
/// RegimeError when the c-vacuum has no overlap with |0_gamma> in some sector.
ModeAmplitudes initial_overlap_amplitudes(const ModelParams &p);

/// A, B from the resonant sector of initial_overlap_amplitudes when
/// gamma < gamma_c; (1, 0) otherwise.
SteadyState steady_state(const ModelParams &p, double phi);

SteadyState vacuum_state(const ModelParams &p);

/// |A|^2 + |B|^2 + 2 Re(e^{i phi} A* B <r0|r2>).
double state_norm(const SteadyState &s, const ModelParams &p);

PairProductState to_pair_product(const SteadyState &s, const ModelParams &p);

/// Exact e^{-iHt}|0_c> up to normalization, sector by sector.
PairProductState evolved_fock_vacuum(const ModelParams &p, double t);

/// Sum over sites of <c†c>.
double total_occupation(const PairProductState &s);

CorrelationMatrix majorana_correlation(const PairProductState &s, const Window &w);
CorrelationMatrix majorana_correlation(const SteadyState &s, const ModelParams &p, const Window &w);

/// Independent closed-form route for the quasiparticle vacuum (antiperiodic grid only).
CorrelationMatrix appendix_vacuum_correlation(const ModelParams &p, const Window &w);

}  // namespace noclick

#endif
