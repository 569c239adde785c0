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

#include "noclick/clausen.h"

#include <cmath>
#include <complex>
#include <numbers>

#include "noclick/errors.h"

namespace noclick {

namespace {

constexpr double kPi = std::numbers::pi;

// Forward differences of f(r) = r^-d at r = n, orders 0..3, evaluated through
// the smooth factor (1 + j/n)^-d so that cancellation stays relative.
void power_differences(double n, double d, double out[4]) {
    long double f[4];
    for (int j = 0; j < 4; ++j) {
        f[j] = std::exp(-static_cast<long double>(d) * std::log1p(static_cast<long double>(j) / n));
    }
    long double scale = std::pow(static_cast<long double>(n), -static_cast<long double>(d));
    out[0] = static_cast<double>(scale * f[0]);
    out[1] = static_cast<double>(scale * (f[1] - f[0]));
    out[2] = static_cast<double>(scale * (f[2] - 2 * f[1] + f[0]));
    out[3] = static_cast<double>(scale * (f[3] - 3 * f[2] + 3 * f[1] - f[0]));
}

// Tail sum_{r>=n} z^r r^-d by repeated summation by parts, truncated after
// the third difference.
std::complex<double> tail(std::complex<double> z, double n, double d) {
    double diff[4];
    power_differences(n, d, diff);
    std::complex<double> zn = std::polar(1.0, std::arg(z) * n);
    std::complex<double> one_minus = 1.0 - z;
    std::complex<double> t = zn * diff[3] / one_minus;
    for (int j = 2; j >= 0; --j) {
        t = (zn * diff[j] + z * t) / one_minus;
    }
    return t;
}

}  // namespace

double clausen_g(double k, double d, int L) {
    double s = 0;
    for (int r = 1; r < L; ++r) {
        int l = std::min(r, L - r);
        s += std::sin(k * r) * std::pow(static_cast<double>(l), -d);
    }
    return s;
}

double clausen_series(double k, double d) {
    if (!(d > 0)) {
        throw RegimeError("clausen_series: exponent must be positive");
    }
    double kr = std::remainder(k, 2 * kPi);
    if (kr == 0 && d <= 1) {
        throw RegimeError("clausen_series: series diverges at k = 0 for d <= 1");
    }
    if (kr == 0 || std::abs(kr) == kPi) {
        return 0.0;
    }
    std::complex<double> z = std::polar(1.0, kr);

    // Partial sum up to n - 1 is extended incrementally while n doubles.
    long double partial = 0;
    long double comp = 0;
    long r = 1;
    auto extend = [&](long n) {
        for (; r < n; ++r) {
            long double term = std::sin(static_cast<long double>(kr) * r) *
                               std::pow(static_cast<long double>(r), -static_cast<long double>(d));
            long double y = term - comp;
            long double t = partial + y;
            comp = (t - partial) - y;
            partial = t;
        }
    };
    constexpr long kStart = 1024;
    constexpr long kCap = 1L << 24;
    long n = kStart;
    extend(n);
    double prev = static_cast<double>(partial) + tail(z, static_cast<double>(n), d).imag();
    while (n < kCap) {
        n *= 2;
        extend(n);
        double cur = static_cast<double>(partial) + tail(z, static_cast<double>(n), d).imag();
        if (std::abs(cur - prev) < 1e-10) {
            return cur;
        }
        prev = cur;
    }
    return prev;
}

double clausen_g_limit(double k, double d) { return 2 * clausen_series(k, d); }

}  // namespace noclick
