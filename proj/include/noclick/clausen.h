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

#ifndef NOCLICK_CLAUSEN_H
#define NOCLICK_CLAUSEN_H

namespace noclick {

/// sum_{r=1}^{L-1} sin(k r) / l^d with l = min(r, L - r).
double clausen_g(double k, double d, int L);

/// One-sided series sum_{r>=1} sin(k r)/r^d.
/// Throws RegimeError for d <= 0, or for k = 0 mod 2pi with d <= 1.
double clausen_series(double k, double d);

/// L -> infinity limit of clausen_g on antiperiodic momenta, 2 * clausen_series.
double clausen_g_limit(double k, double d);

}  // namespace noclick

#endif
