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

#ifndef NOCLICK_ENTROPY_H
#define NOCLICK_ENTROPY_H

#include <vector>

#include "noclick/gaussian_state.h"
#include "noclick/model.h"

namespace noclick {

struct EntropyRow {
    int L = 0;
    int LA = 0;
    /// Nats.
    double S = 0;
    /// S(LA + 1) - S(LA); NaN when LA + 1 > L.
    double deltaS = 0;
    /// LA * deltaS.
    double c = 0;
    bool phi_averaged = false;
};

using EntropyScan = std::vector<EntropyRow>;

struct LogFit {
    double c = 0;
    double b0 = 0;
    /// Root mean square deviation of the data from the fitted line.
    double residual = 0;
};

/// Binary entropy sum over the symplectic eigenvalues of Im(M).
/// Throws NumericalError when an eigenvalue leaves [-1, 1] by more than 1e-6.
double entanglement_entropy(const CorrelationMatrix &M);
double entanglement_entropy(const Eigen::MatrixXcd &M);

/// Entropies of the windows [0, LA) for each LA, from one correlation matrix.
std::vector<double> window_entropies(const PairProductState &s, const std::vector<int> &LAs);

EntropyScan entropy_profile(const ModelParams &p, const SteadyState &state, const std::vector<int> &LAs);

/// Same rows, each entropy averaged over n_phases equally spaced phases.
EntropyScan phase_averaged_profile(const ModelParams &p, const std::vector<int> &LAs, int n_phases);

/// Mean of S(LA) over phi = 2 pi j / n_phases. Equals the vacuum value above gamma_c.
double phase_averaged_entropy(const ModelParams &p, int LA, int n_phases);

/// S(LA + 1) - S(LA). Requires LA + 1 <= L/2.
double incremental_ratio(const ModelParams &p, const SteadyState &state, int LA);

/// LA * incremental_ratio.
double log_coefficient(const ModelParams &p, const SteadyState &state, int LA);

/// Least squares S = c ln LA + b0. Needs at least three distinct LA.
LogFit fit_log_law(const EntropyScan &rows);
LogFit fit_log_law(const std::vector<int> &LAs, const std::vector<double> &S);

/// n log-spaced distinct sizes in [lo, hi].
std::vector<int> log_spaced(int lo, int hi, int n);

/// Default fit window: 8 log-spaced sizes in [L/16, L/4].
std::vector<int> fit_window(int L);

}  // namespace noclick

#endif
