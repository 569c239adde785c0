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

#ifndef NOCLICK_ORACLE_H
#define NOCLICK_ORACLE_H

#include <Eigen/Dense>

#include "noclick/gaussian_state.h"
#include "noclick/model.h"

namespace noclick::oracle {

/// Amplitudes over the Fock basis; bit j of the index is the occupation of site j.
using DenseState = Eigen::VectorXcd;
using DenseOperator = Eigen::MatrixXcd;

constexpr int kMaxSites = 12;

/// Real-space non-Hermitian Hamiltonian. Bonds that wrap around the chain
/// pick up a minus sign for antiperiodic boundaries.
/// Throws ResourceError for L > kMaxSites.
DenseOperator build_dense_hamiltonian(const ModelParams &p);

DenseState fock_vacuum(int L);

/// e^{-iHt} psi / ||e^{-iHt} psi||. Throws NumericalError if the norm underflows.
DenseState evolve_normalized(const DenseState &psi, const DenseOperator &H, double t);

/// Von Neumann entropy (nats) of the sites [offset, offset + length).
double reduced_entropy(const DenseState &psi, const Window &w);

/// (1 - n_site) psi, renormalized. Throws ImpossibleOutcome when the site is surely occupied.
DenseState apply_projection(const DenseState &psi, int site);

/// <psi| c_m c_n |psi> / <psi|psi> with c_{2l} = c†_l + c_l, c_{2l+1} = i(c_l - c†_l).
cplx majorana_expectation(const DenseState &psi, int m, int n);

Eigen::MatrixXcd majorana_matrix(const DenseState &psi);

/// Sum over sites of <n_l>.
double total_occupation(const DenseState &psi);

/// Eigenvalues of H restricted to even fermion parity.
Eigen::VectorXcd even_sector_spectrum(const DenseOperator &H);

/// Even-parity right eigenvector with the largest imaginary eigenvalue
/// (lowest real part among ties), normalized.
DenseState dense_right_vacuum(const DenseOperator &H);

/// Real-space amplitudes of a sector-product state.
DenseState dense_from_pair_product(const PairProductState &s);

/// Normalized overlap |<a|b>| / (||a|| ||b||).
double fidelity(const DenseState &a, const DenseState &b);

}  // namespace noclick::oracle

#endif
