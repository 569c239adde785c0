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

#include "noclick/oracle.h"

#include <unsupported/Eigen/MatrixFunctions>

#include <bit>
#include <cmath>
#include <limits>
#include <vector>

#include "noclick/errors.h"

namespace noclick::oracle {

namespace {

using Index = std::uint64_t;

int sites_of(const DenseState &psi) {
    int L = std::countr_zero(static_cast<Index>(psi.size()));
    if ((Index{1} << L) != static_cast<Index>(psi.size())) {
        throw InvalidParameter("dense state dimension is not a power of two");
    }
    return L;
}

// Jordan-Wigner sign of moving an operator past the sites below j.
double string_sign(Index s, int j) {
    return (std::popcount(s & ((Index{1} << j) - 1)) % 2) ? -1.0 : 1.0;
}

// Applies c_j (dagger = false) or c†_j to a basis state. Returns false if it vanishes.
bool ladder(Index &s, double &sign, int j, bool dagger) {
    Index bit = Index{1} << j;
    bool occupied = s & bit;
    if (occupied == dagger) return false;
    sign *= string_sign(s, j);
    s ^= bit;
    return true;
}

struct Op {
    int site;
    bool dagger;
};

// H += coeff * (product of ops, rightmost acting first).
void add_term(DenseOperator &H, cplx coeff, std::initializer_list<Op> ops) {
    const Index dim = H.rows();
    std::vector<Op> seq(ops);
    for (Index s0 = 0; s0 < dim; ++s0) {
        Index s = s0;
        double sign = 1;
        bool alive = true;
        for (auto it = seq.rbegin(); it != seq.rend() && alive; ++it) {
            alive = ladder(s, sign, it->site, it->dagger);
        }
        if (alive) H(s, s0) += coeff * sign;
    }
}

DenseState apply_ladder(const DenseState &psi, int j, bool dagger) {
    DenseState out = DenseState::Zero(psi.size());
    for (Index s0 = 0; s0 < static_cast<Index>(psi.size()); ++s0) {
        if (psi(s0) == cplx(0, 0)) continue;
        Index s = s0;
        double sign = 1;
        if (ladder(s, sign, j, dagger)) out(s) += sign * psi(s0);
    }
    return out;
}

DenseState apply_majorana(const DenseState &psi, int m) {
    const cplx i(0, 1);
    int site = m / 2;
    DenseState cd = apply_ladder(psi, site, true);
    DenseState c = apply_ladder(psi, site, false);
    if (m % 2 == 0) return cd + c;
    return i * (c - cd);
}

}  // namespace

DenseOperator build_dense_hamiltonian(const ModelParams &p) {
    p.validate();
    if (p.L > kMaxSites) {
        throw ResourceError("dense oracle limited to L <= " + std::to_string(kMaxSites));
    }
    const int L = p.L;
    const Index dim = Index{1} << L;
    DenseOperator H = DenseOperator::Zero(dim, dim);
    const double wrap = p.bc == Boundary::kAntiperiodic ? -1.0 : 1.0;
    auto partner = [&](int i, int r, double &sign) {
        int j = i + r;
        sign = 1;
        if (j >= L) {
            j -= L;
            sign = wrap;
        }
        return j;
    };
    for (int i = 0; i < L; ++i) {
        double s;
        int j = partner(i, 1, s);
        add_term(H, -p.J * s, {{i, true}, {j, false}});
        add_term(H, -p.J * s, {{j, true}, {i, false}});
        if (p.kind == Chain::kIsing) {
            add_term(H, -p.J * s, {{i, true}, {j, true}});
            add_term(H, -p.J * s, {{j, false}, {i, false}});
        } else {
            for (int r = 1; r < L; ++r) {
                int l = std::min(r, L - r);
                int jr = partner(i, r, s);
                double amp = -p.J / 2 * std::pow(static_cast<double>(l), -p.d) * s;
                add_term(H, amp, {{i, true}, {jr, true}});
                add_term(H, amp, {{jr, false}, {i, false}});
            }
        }
    }
    const cplx field(p.h, p.gamma / 4);
    for (Index st = 0; st < dim; ++st) {
        int n = std::popcount(st);
        H(st, st) += -field * static_cast<double>(L - 2 * n);
    }
    return H;
}

DenseState fock_vacuum(int L) {
    if (L > kMaxSites) throw ResourceError("dense oracle limited to L <= " + std::to_string(kMaxSites));
    DenseState v = DenseState::Zero(Index{1} << L);
    v(0) = 1;
    return v;
}

DenseState evolve_normalized(const DenseState &psi, const DenseOperator &H, double t) {
    if (t < 0) throw InvalidParameter("evolution time must be non-negative");
    double n0 = psi.norm();
    if (!(n0 > 0)) throw InvalidParameter("cannot evolve the zero vector");
    DenseState out = psi / n0;
    if (t == 0) return out;
    // Steps short enough that e^{||H|| step} stays moderate; one exponential reused.
    double scale = std::max(1.0, H.cwiseAbs().rowwise().sum().maxCoeff());
    double max_step = 8.0 / scale;
    long steps = static_cast<long>(std::ceil(t / max_step));
    double step = t / static_cast<double>(steps);
    const cplx i(0, 1);
    DenseOperator U = (-i * step * H).exp();
    for (long k = 0; k < steps; ++k) {
        out = U * out;
        double n = out.norm();
        if (!(n > std::numeric_limits<double>::min()) || !std::isfinite(n)) {
            throw NumericalError("norm underflow during evolution; use a shorter time");
        }
        out /= n;
    }
    return out;
}

double reduced_entropy(const DenseState &psi, const Window &w) {
    const int L = sites_of(psi);
    if (w.length < 0 || w.offset < 0 || w.offset + w.length > L) {
        throw InvalidParameter("window must lie inside the chain");
    }
    if (w.length == 0 || w.length == L) return 0;
    const Index dim_a = Index{1} << w.length;
    const Index dim_b = Index{1} << (L - w.length);
    const Index mask_a = (dim_a - 1) << w.offset;
    Eigen::MatrixXcd psi_ab = Eigen::MatrixXcd::Zero(dim_a, dim_b);
    for (Index s = 0; s < static_cast<Index>(psi.size()); ++s) {
        Index a = (s & mask_a) >> w.offset;
        Index low = s & ((Index{1} << w.offset) - 1);
        Index high = s >> (w.offset + w.length);
        Index b = low | (high << w.offset);
        psi_ab(a, b) = psi(s);
    }
    psi_ab /= psi_ab.norm();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(psi_ab);
    double S = 0;
    for (double sv : svd.singularValues()) {
        double p = sv * sv;
        if (p > 1e-300) S -= p * std::log(p);
    }
    return S;
}

DenseState apply_projection(const DenseState &psi, int site) {
    const int L = sites_of(psi);
    if (site < 0 || site >= L) throw InvalidParameter("site out of range");
    DenseState out = psi;
    Index bit = Index{1} << site;
    for (Index s = 0; s < static_cast<Index>(psi.size()); ++s) {
        if (s & bit) out(s) = 0;
    }
    double n = out.norm();
    if (n <= 1e-14 * psi.norm()) {
        throw ImpossibleOutcome("projection onto an empty site has zero probability");
    }
    return out / n;
}

cplx majorana_expectation(const DenseState &psi, int m, int n) {
    const int L = sites_of(psi);
    if (m < 0 || n < 0 || m >= 2 * L || n >= 2 * L) throw InvalidParameter("Majorana index out of range");
    DenseState right = apply_majorana(apply_majorana(psi, n), m);
    return psi.dot(right) / psi.squaredNorm();
}

Eigen::MatrixXcd majorana_matrix(const DenseState &psi) {
    const int L = sites_of(psi);
    std::vector<DenseState> applied;
    for (int m = 0; m < 2 * L; ++m) applied.push_back(apply_majorana(psi, m));
    Eigen::MatrixXcd M(2 * L, 2 * L);
    const double n2 = psi.squaredNorm();
    // <c_m c_n> = (c_m psi)^dagger (c_n psi) since Majoranas are Hermitian.
    for (int m = 0; m < 2 * L; ++m) {
        for (int n = 0; n < 2 * L; ++n) M(m, n) = applied[m].dot(applied[n]) / n2;
    }
    return M;
}

double total_occupation(const DenseState &psi) {
    double n = 0;
    for (Index s = 0; s < static_cast<Index>(psi.size()); ++s) {
        n += std::norm(psi(s)) * std::popcount(s);
    }
    return n / psi.squaredNorm();
}

namespace {

std::vector<Index> even_states(Index dim) {
    std::vector<Index> idx;
    for (Index s = 0; s < dim; ++s) {
        if (std::popcount(s) % 2 == 0) idx.push_back(s);
    }
    return idx;
}

}  // namespace

Eigen::VectorXcd even_sector_spectrum(const DenseOperator &H) {
    std::vector<Index> idx = even_states(H.rows());
    Eigen::MatrixXcd He(idx.size(), idx.size());
    for (size_t a = 0; a < idx.size(); ++a) {
        for (size_t b = 0; b < idx.size(); ++b) He(a, b) = H(idx[a], idx[b]);
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(He, false);
    return solver.eigenvalues();
}

DenseState dense_right_vacuum(const DenseOperator &H) {
    std::vector<Index> idx = even_states(H.rows());
    Eigen::MatrixXcd He(idx.size(), idx.size());
    for (size_t a = 0; a < idx.size(); ++a) {
        for (size_t b = 0; b < idx.size(); ++b) He(a, b) = H(idx[a], idx[b]);
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(He, true);
    const auto &w = solver.eigenvalues();
    double scale = std::max(1.0, w.cwiseAbs().maxCoeff());
    int best = 0;
    for (int i = 1; i < w.size(); ++i) {
        double dim = w(i).imag() - w(best).imag();
        if (dim > 1e-9 * scale || (std::abs(dim) <= 1e-9 * scale && w(i).real() < w(best).real())) {
            best = i;
        }
    }
    DenseState out = DenseState::Zero(H.rows());
    for (size_t a = 0; a < idx.size(); ++a) out(idx[a]) = solver.eigenvectors()(a, best);
    return out / out.norm();
}

DenseState dense_from_pair_product(const PairProductState &s) {
    const int L = s.L;
    DenseState psi = fock_vacuum(L);
    const cplx i(0, 1);
    // c†_k = L^{-1/2} sum_j e^{-ikj} c†_j
    auto create = [&](const DenseState &v, double k) {
        DenseState out = DenseState::Zero(v.size());
        for (int j = 0; j < L; ++j) out += std::exp(-i * k * static_cast<double>(j)) * apply_ladder(v, j, true);
        return DenseState(out / std::sqrt(static_cast<double>(L)));
    };
    for (const auto &sec : s.sectors) {
        DenseState pair = create(create(psi, -sec.k), sec.k);
        psi = sec.c0 * psi + sec.c2 * pair;
    }
    for (const auto &u : s.unpaired) {
        if (u.occupied) psi = create(psi, u.k);
    }
    return psi / psi.norm();
}

double fidelity(const DenseState &a, const DenseState &b) {
    return std::abs(a.dot(b)) / (a.norm() * b.norm());
}

}  // namespace noclick::oracle
