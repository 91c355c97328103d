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

#pragma once

// Reference values computed straight from defining integrals with Boost.Math
// quadrature. Nothing here calls into the library under test.

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

namespace oracle {

using boost::math::quadrature::exp_sinh;
using boost::math::quadrature::gauss_kronrod;
using boost::math::quadrature::tanh_sinh;

// Boost compares the local error of the unit-interval rule against a tolerance
// scaled by the interval width, so very narrow intervals never converge.
// Integrating over [0, 1] with an explicit Jacobian sidesteps that.
inline double gk(auto f, double a, double b, double tol = 1e-12) {
    const double w = b - a;
    auto g = [&](double u) { return f(a + w * u); };
    return w * gauss_kronrod<double, 31>::integrate(g, 0.0, 1.0, 15, tol);
}

inline double to_infinity(auto f, double a, double tol = 1e-12) {
    static exp_sinh<double> integrator;
    return integrator.integrate(f, a, std::numeric_limits<double>::infinity(), tol);
}

/// E1(x) = int_x^inf e^{-u}/u du, split at x+1 so the singular scale near
/// small x gets its own finite piece.
inline double e1(double x) {
    static tanh_sinh<double> ts;
    const double head = ts.integrate([](double u) { return std::exp(-u) / u; }, x, x + 1.0, 1e-14);
    const double tail = to_infinity([](double u) { return std::exp(-u) / u; }, x + 1.0, 1e-14);
    return head + tail;
}

/// erfc from the Gaussian tail integral. For negative z uses the mass on
/// [z, 0] plus erfc(0) = 1 rather than the reflection identity.
inline double erfc(double z) {
    const double c = 2.0 / std::sqrt(std::numbers::pi);
    auto g = [](double u) { return std::exp(-u * u); };
    if (z >= 0.0) {
        static exp_sinh<double> es;
        return c * es.integrate(g, z, std::numeric_limits<double>::infinity(), 1e-15);
    }
    return 1.0 + c * gk(g, z, 0.0, 1e-15);
}

inline double harmonic(int k) {
    long double h = 0.0L;
    for (int i = 1; i <= k; ++i) h += 1.0L / i;
    return static_cast<double>(h);
}

inline double bound_a(double xi, double x) { return 1.0 / (std::sqrt(1.0 + xi * x) + 1.0); }

/// Ordered-pair expectation of f(x1, x2) over 0 < x1 < x2 with i.i.d.
/// exponential(mean beta) parents.
inline double ordered_pair_expectation(auto f, double beta) {
    tanh_sinh<double> inner_rule;
    auto outer = [&](double x2) {
        if (!(x2 > 0.0)) return 0.0;
        auto inner = [&](double x1) { return f(x1, x2) * std::exp(-x1 / beta); };
        return 2.0 / (beta * beta) * std::exp(-x2 / beta) * inner_rule.integrate(inner, 0.0, x2, 1e-12);
    };
    exp_sinh<double> outer_rule;
    return outer_rule.integrate(outer, 0.0, std::numeric_limits<double>::infinity(), 1e-10);
}

inline double e_c1_noma_ainf(double xi, double beta) {
    return ordered_pair_expectation(
        [xi](double x1, double x2) {
            const double a = bound_a(xi, x2);
            return std::log2(1.0 + (1.0 - a) * xi * x1 / (a * xi * x1 + 1.0));
        },
        beta);
}

inline double e_c2_noma_asup(double xi, double beta) {
    return ordered_pair_expectation(
        [xi](double x1, double x2) { return std::log2(1.0 + bound_a(xi, x1) * xi * x2); }, beta);
}

inline double e_c1_oma(double xi, double beta) {
    return ordered_pair_expectation([xi](double x1, double) { return 0.5 * std::log2(1.0 + xi * x1); }, beta);
}

/// Pr{C2 at a_sup < r0}: 2-D integral of the ordered density over the
/// outage region x1 < x2 < (2^r0 - 1) / (a_sup(x1) xi).
inline double outage_strong_asup(double xi, double beta, double r0) {
    const double m = std::exp2(r0) - 1.0;
    auto top = [=](double x1) { return m / (bound_a(xi, x1) * xi); };
    // Region in x1 ends where top(x1) meets the diagonal.
    auto gap = [&](double x1) { return top(x1) - x1; };
    double hi = 1.0;
    while (gap(hi) > 0.0) hi *= 2.0;
    std::uintmax_t iters = 200;
    const auto br = boost::math::tools::toms748_solve(
        gap, 0.0, hi, boost::math::tools::eps_tolerance<double>(52), iters);
    const double x_end = 0.5 * (br.first + br.second);
    auto outer = [&](double x1) {
        const double t = top(x1);
        if (t <= x1) return 0.0;
        auto inner = [&](double x2) { return std::exp(-x2 / beta); };
        return 2.0 / (beta * beta) * std::exp(-x1 / beta) * gk(inner, x1, t, 1e-13);
    };
    return gk(outer, 0.0, x_end, 1e-12);
}

/// Pr{C1 at a_inf < r0} over the ordered pair. For fixed x2 the weak rate
/// grows with x1, so outage is x1 < min(x2, threshold(x2)).
inline double outage_weak_ainf(double xi, double beta, double r0) {
    const double m = std::exp2(r0) - 1.0;
    const double p2 = std::exp2(r0);
    auto threshold = [&](double x2) {
        const double denom = 1.0 - bound_a(xi, x2) * p2;
        return denom <= 0.0 ? std::numeric_limits<double>::infinity() : m / (denom * xi);
    };
    auto outer = [&](double x2) {
        if (!(x2 > 0.0)) return 0.0;
        const double lim = std::min(x2, threshold(x2));
        auto inner = [&](double x1) { return std::exp(-x1 / beta); };
        return 2.0 / (beta * beta) * std::exp(-x2 / beta) * gk(inner, 0.0, lim, 1e-13);
    };
    // The outer integrand has a kink where the threshold crosses the diagonal.
    auto gap = [&](double x2) {
        const double t = threshold(x2);
        return std::isinf(t) ? 1.0 : t - x2;
    };
    double hi = 1.0 / xi;
    while (gap(hi) > 0.0) hi *= 2.0;
    std::uintmax_t iters = 300;
    const auto br = boost::math::tools::toms748_solve(
        gap, 0.0, hi, boost::math::tools::eps_tolerance<double>(52), iters);
    const double cross = 0.5 * (br.first + br.second);
    return gk(outer, 0.0, cross, 1e-12) + to_infinity(outer, cross, 1e-12);
}

/// E[1/2 log2(max / min)] for K i.i.d. unit exponentials, from the marginal
/// densities of the extremes.
inline double pairing_gain(int k) {
    auto f_max = [k](double x) {
        if (x <= 0.0) return 0.0;
        return std::log(x) * k * std::pow(-std::expm1(-x), k - 1) * std::exp(-x);
    };
    auto f_min = [k](double x) {
        if (x <= 0.0) return 0.0;
        return std::log(x) * k * std::exp(-k * x);
    };
    static tanh_sinh<double> ts;
    const double e_max = ts.integrate(f_max, 0.0, 1.0, 1e-13) + to_infinity(f_max, 1.0, 1e-13);
    const double e_min = ts.integrate(f_min, 0.0, 1.0, 1e-13) + to_infinity(f_min, 1.0, 1e-13);
    return 0.5 * (e_max - e_min) / std::numbers::ln2;
}

}  // namespace oracle
