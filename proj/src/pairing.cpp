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

#include "fairnoma/pairing.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fairnoma/error.hpp"
#include "fairnoma/quadrature.hpp"
#include "fairnoma/specfun.hpp"

namespace fairnoma::pairing {
namespace {

void require_population(int k, int min_k) {
    if (k < min_k) {
        detail::domain_fail("population size K must be >= " + std::to_string(min_k) + ", got " +
                            std::to_string(k));
    }
}

double alternating_sum(int k) {
    // Terms reach C(30, 15) log2(15) ~ 6e8, so each product is formed in
    // extended precision and summed with Kahan compensation.
    long double sum = 0.0L;
    long double carry = 0.0L;
    long double binom = static_cast<long double>(k);  // C(K, 1)
    for (int m = 2; m <= k; ++m) {
        binom = binom * (k - m + 1) / m;
        const long double term = ((m % 2 == 0) ? binom : -binom) * std::log2(static_cast<long double>(m));
        const long double y = term - carry;
        const long double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    return static_cast<double>(0.5L * std::log2(static_cast<long double>(k)) + 0.5L * sum);
}

double quadrature_gain(int k) {
    // The gain is scale free, so take beta = 1. Max density:
    // K e^{-x} (1 - e^{-x})^{K-1}; min is exponential with mean 1/K, so
    // E[ln min] = -gamma - ln K.
    const double kk = static_cast<double>(k);
    auto integrand = [kk](double x) {
        const double log_body = (kk - 1.0) * std::log(-std::expm1(-x));
        return std::log(x) * kk * std::exp(-x + log_body);
    };
    quad::QuadOptions opts;
    opts.rel_tol = 1e-12;
    opts.abs_tol = 1e-14;
    const quad::QuadResult r = quad::require_converged(
        quad::integrate_to_infinity(integrand, 0.0, 1.0 + std::log(kk), opts), "expected_gain_asup");
    const double e_log_min = -specfun::kEulerGamma - std::log(kk);
    return 0.5 * (r.value - e_log_min) / std::numbers::ln2;
}

}  // namespace

double minmax_joint_cdf(double x0, double x_max, int k, double beta) {
    require_population(k, 2);
    detail::require_positive(beta, "beta");
    detail::require_nonnegative(x0, "x0");
    if (x0 > x_max) {
        detail::domain_fail("minmax_joint_cdf: x0 must not exceed xM");
    }
    const double kk = static_cast<double>(k);
    const double below_max = -std::expm1(-x_max / beta);
    const double between = std::exp(-x0 / beta) * -std::expm1(-(x_max - x0) / beta);
    return std::pow(below_max, kk) - std::pow(between, kk);
}

double minmax_joint_pdf(double x0, double x_max, int k, double beta) {
    require_population(k, 2);
    detail::require_positive(beta, "beta");
    if (!(x0 > 0.0 && x0 < x_max)) {
        detail::domain_fail("minmax_joint_pdf: requires 0 < x0 < xM");
    }
    const double kk = static_cast<double>(k);
    const double between = std::exp(-x0 / beta) * -std::expm1(-(x_max - x0) / beta);
    return kk * (kk - 1.0) / (beta * beta) * std::exp(-(x0 + x_max) / beta) *
           std::pow(between, kk - 2.0);
}

MinMaxPair sample_minmax(int k, double beta, rng::TrialStream& stream) {
    require_population(k, 1);
    detail::require_positive(beta, "beta");
    MinMaxPair out;
    out.k = k;
    out.g_min = stream.exponential(beta);
    out.g_max = out.g_min;
    for (int i = 1; i < k; ++i) {
        const double g = stream.exponential(beta);
        if (g < out.g_min) out.g_min = g;
        if (g > out.g_max) out.g_max = g;
    }
    return out;
}

PairingGain expected_gain_asup(int k, std::optional<GainPath> force) {
    require_population(k, 1);
    const GainPath path =
        force.value_or(k <= kAlternatingSumMaxK ? GainPath::alternating_sum : GainPath::quadrature);
    if (k == 1) {
        return {0.0, path};
    }
    if (path == GainPath::alternating_sum) {
        return {alternating_sum(k), path};
    }
    return {quadrature_gain(k), path};
}

double expected_gain_ainf_approx(int k, const SystemParams& params) {
    require_population(k, 2);
    detail::require_positive(params.xi, "xi");
    detail::require_positive(params.beta, "beta");
    const double kk = static_cast<double>(k);
    const double harmonic = specfun::digamma(kk + 1.0) + specfun::kEulerGamma;
    const double root = std::sqrt(1.0 + params.xi * harmonic);
    const double weak = specfun::exp_integral_e1_scaled(kk / (params.beta * params.xi)) /
                        (2.0 * std::numbers::ln2);
    // sqrt(1 + xi H) - 1 = xi H / (sqrt(1 + xi H) + 1)
    const double ratio = params.xi / ((root + 1.0) * kk);
    return weak - std::log1p(ratio) / std::numbers::ln2;
}

}  // namespace fairnoma::pairing
