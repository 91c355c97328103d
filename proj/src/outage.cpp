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

#include "fairnoma/outage.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fairnoma/error.hpp"
#include "fairnoma/quadrature.hpp"
#include "fairnoma/rng.hpp"
#include "fairnoma/specfun.hpp"

namespace fairnoma::outage {
namespace {

void check(const SystemParams& p) {
    detail::require_positive(p.xi, "xi");
    detail::require_positive(p.beta, "beta");
    detail::require_nonnegative(p.r0, "r0");
}

double clamp_probability(double p) { return std::clamp(p, 0.0, 1.0); }

// Tail cut: e^{-40} keeps the neglected mass far below 1e-12.
constexpr double kTailWidth = 40.0;

}  // namespace

double oma_outage_weak(const SystemParams& params) {
    check(params);
    const double threshold = std::expm1(2.0 * params.r0 * std::numbers::ln2);  // 4^R0 - 1
    return clamp_probability(-std::expm1(-2.0 * threshold / (params.beta * params.xi)));
}

double oma_outage_strong(const SystemParams& params) {
    check(params);
    const double threshold = std::expm1(2.0 * params.r0 * std::numbers::ln2);
    // 1 + e^{-2t} - 2 e^{-t} = (1 - e^{-t})^2
    const double q = std::expm1(-threshold / (params.beta * params.xi));
    return clamp_probability(q * q);
}

AlphaPair::AlphaPair(double xi, double r0) : xi_(xi), r0_(r0) {
    detail::require_positive(xi, "xi");
    detail::require_positive(r0, "r0");
    const double q = std::exp2(2.0 * r0);  // 4^R0
    alpha2_ = (q - 2.0) / (2.0 * xi) +
              std::sqrt((q - 1.0) / (xi * xi) + (q - 2.0) * (q - 2.0) / (4.0 * xi * xi));
}

double AlphaPair::weak_threshold(double x) const {
    detail::require_positive(x, "x");
    const double p = std::exp2(r0_);
    const double s = std::sqrt(1.0 + xi_ * x);
    // xi x + 2^R0 (1 - s) = (s - 1)(s + 1 - 2^R0) and s - 1 = xi x / (s + 1).
    const double gap = s + 1.0 - p;
    if (!(gap > 0.0)) {
        detail::domain_fail("alpha1: denominator is not positive at x = " + std::to_string(x));
    }
    return (p - 1.0) * (s + 1.0) / (xi_ * gap);
}

double AlphaPair::alpha1(double x) const { return weak_threshold(x) / x; }

AlphaPair alpha_pair(const SystemParams& params) {
    check(params);
    return AlphaPair(params.xi, params.r0);
}

ProbabilityEstimate noma_outage_weak_ainf_detailed(const SystemParams& params) {
    check(params);
    if (params.r0 == 0.0) {
        return {0.0, 0.0};
    }
    const AlphaPair alphas(params.xi, params.r0);
    const double beta = params.beta;
    const double a2 = alphas.alpha2();

    // 1 + e^{-2 a2/b} - (2/b) int_{a2}^inf e^{-x(alpha1 + 1)/b} dx, regrouped
    // with 2 e^{-a2/b} = (2/b) int_{a2}^inf e^{-x/b} dx so that both parts
    // are non-negative:
    //   (1 - e^{-a2/b})^2 + (2/b) int_{a2}^inf e^{-x/b} (1 - e^{-x alpha1/b}) dx
    const double head = std::expm1(-a2 / beta);
    auto integrand = [&](double x) {
        return (2.0 / beta) * std::exp(-x / beta) * -std::expm1(-alphas.weak_threshold(x) / beta);
    };
    quad::QuadOptions opts;
    opts.rel_tol = 1e-10;
    opts.abs_tol = 1e-16;
    const double upper = a2 + kTailWidth * beta;
    const quad::QuadResult r =
        quad::require_converged(quad::integrate(integrand, a2, upper, opts), "noma_outage_weak_ainf");
    // The threshold decreases in x, so this bounds the remaining tail.
    const double tail = 2.0 * std::exp(-upper / beta) * -std::expm1(-alphas.weak_threshold(upper) / beta);
    return {clamp_probability(head * head + r.value + tail), r.abs_error + tail};
}

double noma_outage_weak_ainf(const SystemParams& params) {
    return noma_outage_weak_ainf_detailed(params).value;
}

double noma_outage_strong_asup(const SystemParams& params) {
    check(params);
    if (params.r0 == 0.0) {
        return 0.0;
    }
    const double bx = params.beta * params.xi;
    const double p = std::exp2(params.r0);        // 2^R0
    const double m = std::expm1(params.r0 * std::numbers::ln2);  // 2^R0 - 1
    const double q = m * (p + 1.0);               // 4^R0 - 1
    const double root = std::sqrt(bx);
    const double u1 = (p + 1.0) / (2.0 * root);
    const double u2 = (3.0 * p - 1.0) / (2.0 * root);

    // 1 + e^{-2q/bx} - 2 e^{-2m/bx}
    const double base = std::expm1(-2.0 * q / bx) - 2.0 * std::expm1(-2.0 * m / bx);

    double bracket = 0.0;
    if (u2 < 1.0) {
        // erfc(u1) - erfc(u2) = erf(u2) - erf(u1); the prefactor exponent is
        // bounded by u2^2 here.
        bracket = std::exp((p - 3.0) * (p - 3.0) / (4.0 * bx)) *
                  (specfun::erf(u2) - specfun::erf(u1));
    } else {
        // Fold e^{(2^R0-3)^2/(4 bx)} into scaled erfc to avoid overflow at
        // low SNR or high rate.
        bracket = std::exp(-2.0 * m / bx) * specfun::erfcx(u1) -
                  std::exp(-2.0 * q / bx) * specfun::erfcx(u2);
    }
    const double term = m * std::sqrt(std::numbers::pi / bx) * bracket;
    return clamp_probability(base + term);
}

OutagePoint outage_point(const SystemParams& params) {
    OutagePoint o;
    o.xi = params.xi;
    o.r0 = params.r0;
    o.p_oma_weak = oma_outage_weak(params);
    o.p_oma_strong = oma_outage_strong(params);
    o.p_noma_weak_ainf = noma_outage_weak_ainf(params);
    o.p_noma_strong_asup = noma_outage_strong_asup(params);
    return o;
}

EmpiricalOutage noma_outage_empirical(const SystemParams& params, const APolicy& policy,
                                      std::uint64_t trials, std::uint64_t seed, unsigned workers) {
    check(params);
    if (trials == 0) {
        detail::domain_fail("trials must be >= 1");
    }
    const rng::StreamKey key =
        rng::StreamKey::derive(seed, static_cast<std::uint64_t>(mcsim::Scenario::pair_iid), 0);
    const auto stats = mcsim::run_trials<2>(trials, workers, [&](std::uint64_t t, auto& v) {
        rng::TrialStream stream(key, t);
        const double ga = stream.exponential(params.beta);
        const double gb = stream.exponential(params.beta);
        const ChannelPair ch(ga, gb);
        const double a = policy.resolve(twouser::fair_region(params.xi, ch));
        v[0] = twouser::noma_capacity_weak(params.xi, ch.g1(), a) < params.r0 ? 1.0 : 0.0;
        v[1] = twouser::noma_capacity_strong(params.xi, ch.g2(), a) < params.r0 ? 1.0 : 0.0;
    });
    return {mcsim::to_result(stats[0], seed), mcsim::to_result(stats[1], seed)};
}

}  // namespace fairnoma::outage
