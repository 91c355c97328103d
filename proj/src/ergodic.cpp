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

#include "fairnoma/ergodic.hpp"

#include <cmath>
#include <numbers>

#include "fairnoma/error.hpp"
#include "fairnoma/quadrature.hpp"
#include "fairnoma/specfun.hpp"

namespace fairnoma::ergodic {
namespace {

using specfun::exp_integral_e1_scaled;

void check(const SystemParams& p) {
    detail::require_positive(p.xi, "xi");
    detail::require_positive(p.beta, "beta");
}

// e^{2/(beta xi)} E1(2/(beta xi)) / ln 4 = E[C_1^O].
double weak_oma_term(const SystemParams& p) {
    return exp_integral_e1_scaled(2.0 / (p.beta * p.xi)) / (2.0 * std::numbers::ln2);
}

quad::QuadOptions options(double rel_tol) {
    quad::QuadOptions o;
    o.rel_tol = rel_tol;
    o.abs_tol = 1e-15;
    return o;
}

// With s = sqrt(1 + xi x), the E1 arguments x/(beta(s-1)) and
// x s/(beta(s-1)) reduce to (s+1)/(beta xi) and s(s+1)/(beta xi), and
// the exponential prefactor folds into the scaled E1 values:
//   exp(-(x/beta)(s-2)/(s-1)) E1(y)   = e^{-x/beta}        e^{y} E1(y)
//   exp(-(x/beta)(s-2)/(s-1)) E1(y s) = e^{-2x/beta} e^{ys} E1(ys)
struct Arguments {
    double y;
    double ys;
};

Arguments arguments(const SystemParams& p, double x) {
    const double s = std::sqrt(1.0 + p.xi * x);
    const double y = (s + 1.0) / (p.beta * p.xi);
    return {y, s * y};
}

}  // namespace

OmaErgodic ergodic_oma(const SystemParams& params) {
    check(params);
    OmaErgodic out;
    out.c1 = weak_oma_term(params);
    out.sum = exp_integral_e1_scaled(1.0 / (params.beta * params.xi)) / std::numbers::ln2;
    out.c2 = out.sum - out.c1;
    return out;
}

Estimate ergodic_noma_weak_ainf(const SystemParams& params, double rel_tol) {
    check(params);
    const double beta = params.beta;
    const double pref = 2.0 / (beta * std::numbers::ln2);
    auto integrand = [&](double x) {
        const Arguments a = arguments(params, x);
        const double decay = std::exp(-x / beta);
        return pref * decay *
               (exp_integral_e1_scaled(a.y) - decay * exp_integral_e1_scaled(a.ys));
    };
    const quad::QuadResult r = quad::require_converged(
        quad::integrate_to_infinity(integrand, 0.0, beta, options(rel_tol)),
        "ergodic_noma_weak_ainf");
    return {3.0 * weak_oma_term(params) - r.value, r.abs_error};
}

Estimate ergodic_noma_strong_asup(const SystemParams& params, double rel_tol) {
    check(params);
    const double beta = params.beta;
    const double pref = 2.0 / (beta * std::numbers::ln2);
    auto integrand = [&](double x) {
        const Arguments a = arguments(params, x);
        return pref * std::exp(-2.0 * x / beta) * exp_integral_e1_scaled(a.ys);
    };
    const quad::QuadResult r = quad::require_converged(
        quad::integrate_to_infinity(integrand, 0.0, beta, options(rel_tol)),
        "ergodic_noma_strong_asup");
    return {weak_oma_term(params) + r.value, r.abs_error};
}

double expected_gain(const SystemParams& params, RegionEnd end) {
    const OmaErgodic oma = ergodic_oma(params);
    // At a_inf the strong user sits exactly at its OMA capacity, at a_sup the
    // weak user does, so only the other user's change survives.
    if (end == RegionEnd::inf) {
        return ergodic_noma_weak_ainf(params).value - oma.c1;
    }
    return ergodic_noma_strong_asup(params).value - oma.c2;
}

ErgodicCurvePoint ergodic_curve_point(const SystemParams& params) {
    const OmaErgodic oma = ergodic_oma(params);
    ErgodicCurvePoint p;
    p.xi = params.xi;
    p.e_c1_oma = oma.c1;
    p.e_c2_oma = oma.c2;
    p.e_s_oma = oma.sum;
    p.e_c1_noma_ainf = ergodic_noma_weak_ainf(params).value;
    p.e_c2_noma_asup = ergodic_noma_strong_asup(params).value;
    return p;
}

HighSnrErgodic high_snr_ergodic(const SystemParams& params) {
    check(params);
    const double l2 = std::numbers::ln2;
    const double gamma = specfun::kEulerGamma;
    const double log2_xi = std::log(params.xi) / l2;
    const double log2_g1 = (std::log(0.5 * params.beta) - gamma) / l2;
    const double log2_g2 = (std::log(2.0 * params.beta) - gamma) / l2;
    HighSnrErgodic h;
    h.c1_oma = 0.5 * (log2_xi + log2_g1);
    h.c2_oma = 0.5 * (log2_xi + log2_g2);
    h.c1_ainf = h.c2_oma;
    h.c2_asup = 0.5 * log2_xi - 0.5 * log2_g1 + log2_g2;
    return h;
}

}  // namespace fairnoma::ergodic
