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

#ifndef NOCLICK_ERRORS_H
#define NOCLICK_ERRORS_H

#include <stdexcept>

namespace noclick {

/// Malformed input: odd chain length, negative rate, bad window, ...
struct InvalidParameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The request is well formed but outside the regime where the quantity exists
/// (no resonant momentum, divergent series, expansion used past its range).
struct RegimeError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A 2x2 block or Mobius map that cannot be diagonalized / solved as asked.
struct DegenerateError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A projective measurement outcome with zero probability.
struct ImpossibleOutcome : std::domain_error {
    using std::domain_error::domain_error;
};

/// Floating point trouble: eigenvalues outside their admissible range, norm underflow.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense oracle asked for more memory than it is allowed to use.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace noclick

#endif
