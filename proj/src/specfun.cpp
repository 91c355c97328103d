// Copyright 2026 The fairnoma Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fairnoma/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "fairnoma/error.hpp"

namespace fairnoma::specfun {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;
constexpr int kMaxIter = 10000;

// E1 for 0 < x < 1: -gamma - ln x - sum_{k>=1} (-x)^k / (k k!).
SpecFunResult e1_series(double x) {
    double term = 1.0;
    double sum = 0.0;
    double abs_sum = 0.0;
    for (int k = 1; k < kMaxIter; ++k) {
        term *= -x / k;
        const double contrib = term / k;
        sum += contrib;
        abs_sum += std::fabs(contrib);
        if (std::fabs(contrib) < kEps * std::fabs(sum)) {
            break;
        }
    }
    const double value = -kEulerGamma - std::log(x) - sum;
    const double scale = kEulerGamma + std::fabs(std::log(x)) + abs_sum;
    return {value, 4.0 * kEps * scale / std::fabs(value)};
}

// e^x E1(x) for x >= 1 by the modified Lentz evaluation of
// 1/(x+1- 1/(x+3- 4/(x+5- ...))).
SpecFunResult e1_scaled_fraction(double x) {
    double b = x + 1.0;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    double last_delta = 1.0;
    for (int i = 1; i < kMaxIter; ++i) {
        const double an = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        const double del = c * d;
        h *= del;
        last_delta = std::fabs(del - 1.0);
        if (last_delta < kEps) {
            break;
        }
    }
    return {h, std::max(last_delta, 8.0 * kEps)};
}

// erf(z) = 2/sqrt(pi) e^{-z^2} sum_n 2^n z^{2n+1} / (2n+1)!!. Every term has
// the sign of z, so there is no cancellation. Used for |z| < 2.
SpecFunResult erf_series(double z) {
    const double z2 = z * z;
    double term = z;
    double sum = z;
    for (int n = 1; n < kMaxIter; ++n) {
        term *= 2.0 * z2 / (2.0 * n + 1.0);
        sum += term;
        if (std::fabs(term) < kEps * std::fabs(sum)) {
            break;
        }
    }
    const double value = 2.0 / std::sqrt(std::numbers::pi) * std::exp(-z2) * sum;
    return {value, 6.0 * kEps};
}

// e^{z^2} erfc(z) for z >= 2 via the Laplace continued fraction
// erfc(z) = e^{-z^2}/sqrt(pi) / (z + (1/2)/(z + 1/(z + (3/2)/(z + ...)))).
SpecFunResult erfcx_fraction(double z) {
    double f = z;
    double c = z;
    double d = 0.0;
    double last_delta = 1.0;
    for (int n = 1; n < kMaxIter; ++n) {
        const double a = 0.5 * n;
        d = z + a * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        d = 1.0 / d;
        c = z + a / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        const double del = c * d;
        f *= del;
        last_delta = std::fabs(del - 1.0);
        if (last_delta < kEps) {
            break;
        }
    }
    return {1.0 / (std::sqrt(std::numbers::pi) * f), std::max(last_delta, 8.0 * kEps)};
}

constexpr double kSeriesLimit = 2.0;

}  // namespace

SpecFunResult exp_integral_e1_checked(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        detail::domain_fail("exp_integral_e1: x must be finite and > 0, got " + std::to_string(x));
    }
    if (x < 1.0) {
        return e1_series(x);
    }
    SpecFunResult r = e1_scaled_fraction(x);
    r.value *= std::exp(-x);
    return r;
}

double exp_integral_e1(double x) { return exp_integral_e1_checked(x).value; }

double exp_integral_e1_scaled(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        detail::domain_fail("exp_integral_e1_scaled: x must be finite and > 0, got " +
                            std::to_string(x));
    }
    if (x < 1.0) {
        return std::exp(x) * e1_series(x).value;
    }
    return e1_scaled_fraction(x).value;
}

SpecFunResult erfc_checked(double z) {
    if (std::isnan(z)) {
        return {z, 0.0};
    }
    if (std::fabs(z) < kSeriesLimit) {
        const SpecFunResult e = erf_series(z);
        const double value = 1.0 - e.value;
        // erfc(2) ~ 4.7e-3 bounds the relative error amplification of 1 - erf.
        return {value, e.est_rel_error * std::fabs(e.value) / value + kEps};
    }
    if (z > 0.0) {
        SpecFunResult r = erfcx_fraction(z);
        r.value *= std::exp(-z * z);
        return r;
    }
    const SpecFunResult r = erfcx_fraction(-z);
    return {2.0 - r.value * std::exp(-z * z), kEps};
}

double erfc(double z) { return erfc_checked(z).value; }

double erf(double z) {
    if (std::fabs(z) < kSeriesLimit) {
        return erf_series(z).value;
    }
    return z > 0.0 ? 1.0 - erfc(z) : erfc(-z) - 1.0;
}

double erfcx(double z) {
    if (!(z >= 0.0)) {
        detail::domain_fail("erfcx: z must be >= 0, got " + std::to_string(z));
    }
    if (z < kSeriesLimit) {
        return std::exp(z * z) * (1.0 - erf_series(z).value);
    }
    return erfcx_fraction(z).value;
}

SpecFunResult digamma_checked(double w) {
    if (!(w > 0.0) || !std::isfinite(w)) {
        detail::domain_fail("digamma: w must be finite and > 0, got " + std::to_string(w));
    }
    // Shift up with psi(w) = psi(w + 1) - 1/w until the asymptotic series is
    // accurate to double precision.
    double shift = 0.0;
    while (w < 10.0) {
        shift += 1.0 / w;
        w += 1.0;
    }
    const double inv = 1.0 / w;
    const double inv2 = inv * inv;
    // Bernoulli terms B_{2n} / (2n w^{2n}), n = 1..7.
    const double tail =
        inv2 * (1.0 / 12.0 -
                inv2 * (1.0 / 120.0 -
                        inv2 * (1.0 / 252.0 -
                                inv2 * (1.0 / 240.0 -
                                        inv2 * (1.0 / 132.0 -
                                                inv2 * (691.0 / 32760.0 - inv2 / 12.0))))));
    const double value = std::log(w) - 0.5 * inv - tail - shift;
    const double scale = std::fabs(std::log(w)) + shift + 1.0;
    return {value, 4.0 * kEps * scale / std::max(std::fabs(value), kTiny)};
}

double digamma(double w) { return digamma_checked(w).value; }

double harmonic_number(int k) {
    if (k < 0) {
        detail::domain_fail("harmonic_number: k must be >= 0, got " + std::to_string(k));
    }
    double h = 0.0;
    for (int j = k; j >= 1; --j) {
        h += 1.0 / j;
    }
    return h;
}

}  // namespace fairnoma::specfun
