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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "fairnoma/error.hpp"
#include "fairnoma/mcsim.hpp"
#include "fairnoma/outage.hpp"
#include "oracles.hpp"

using namespace fairnoma;
using namespace fairnoma::outage;
using doctest::Approx;

namespace {

// Binomial standard error under the hypothesised probability, so a run that
// sees no events is still scored.
bool binomial_agrees(const mcsim::SimResult& r, double p0, double k = 3.0) {
    const double se = std::sqrt(p0 * (1.0 - p0) / static_cast<double>(r.trials));
    return std::fabs(r.mean - p0) <= k * se + 1e-300;
}

}  // namespace

TEST_CASE("OMA outage closed forms") {
    CHECK(oma_outage_weak(SystemParams{100.0, 1.0, 0.0}) == 0.0);
    CHECK(oma_outage_strong(SystemParams{100.0, 1.0, 0.0}) == 0.0);
    CHECK(oma_outage_weak(SystemParams{1e300, 1.0, 2.0}) < 1e-290);
    // Frozen from direct evaluation at exact inputs.
    CHECK(oma_outage_weak(SystemParams{100.0, 1.0, 2.0}) == Approx(0.2591817793).epsilon(1e-9));
    CHECK(oma_outage_strong(SystemParams{100.0, 1.0, 2.0}) == Approx(0.0194022678).epsilon(1e-9));
    for (double r0 : {0.1, 0.5, 1.0, 2.0, 4.0})
        for (double db = -10.0; db <= 60.0; db += 5.0) {
            const SystemParams p{db_to_linear(db), 1.0, r0};
            CHECK(oma_outage_strong(p) <= oma_outage_weak(p));
        }
}

TEST_CASE("alpha pair") {
    CHECK(AlphaPair(1.0, 1.0).alpha2() == Approx(3.0).epsilon(1e-15));
    CHECK(AlphaPair(4.0, 1.0).alpha2() == Approx(0.75).epsilon(1e-15));
    const AlphaPair a(100.0, 2.0);
    const double v = a.alpha1(a.alpha2());
    CHECK(std::isfinite(v));
    CHECK(v > 0.0);
    // alpha1 as printed: (2^R - 1) / (xi x + 2^R (1 - sqrt(1 + xi x))).
    const double x = 0.3;
    CHECK(a.alpha1(x) == Approx(3.0 / (100.0 * x + 4.0 * (1.0 - std::sqrt(1.0 + 100.0 * x)))).epsilon(1e-13));
    CHECK_THROWS_AS(a.alpha1(1e-4), DomainError);
    CHECK_THROWS_AS(AlphaPair(1.0, 0.0), DomainError);
    // alpha2 coincides with (4^R - 1) / xi.
    CHECK(alpha_pair(SystemParams{37.0, 1.0, 1.7}).alpha2() == Approx((std::pow(4.0, 1.7) - 1.0) / 37.0).epsilon(1e-13));
}

TEST_CASE("NOMA outage closed forms match region-integration oracles") {
    for (double db = 0.0; db <= 60.0; db += 2.0) {
        CAPTURE(db);
        const double xi = db_to_linear(db);
        const SystemParams p{xi, 1.0, 2.0};
        const double w = noma_outage_weak_ainf(p), s = noma_outage_strong_asup(p);
        const double ow = oracle::outage_weak_ainf(xi, 1.0, 2.0), os = oracle::outage_strong_asup(xi, 1.0, 2.0);
        CHECK(std::fabs(w - ow) <= 1e-9 * ow + 1e-15);
        CHECK(std::fabs(s - os) <= 1e-8 * os + 1e-15);
        CHECK(w <= oma_outage_weak(p));
        CHECK(s <= oma_outage_strong(p));
    }
    const SystemParams p{1e3, 1.0, 2.0};
    CHECK(std::fabs(noma_outage_strong_asup(p) - oracle::outage_strong_asup(1e3, 1.0, 2.0)) < 1e-6);
    CHECK(noma_outage_weak_ainf_detailed(p).abs_error >= 0.0);
}

TEST_CASE("NOMA outage limits and range") {
    CHECK(noma_outage_weak_ainf(SystemParams{10.0, 1.0, 0.0}) == 0.0);
    CHECK(noma_outage_strong_asup(SystemParams{10.0, 1.0, 0.0}) == 0.0);
    CHECK(noma_outage_weak_ainf(SystemParams{10.0, 1.0, 1e-9}) < 1e-8);
    CHECK(noma_outage_strong_asup(SystemParams{10.0, 1.0, 1e-9}) < 1e-8);
    for (double r0 = 0.1; r0 <= 6.0; r0 += 0.3)
        for (double lx = 0.0; lx <= 6.0; lx += 0.5) {
            const OutagePoint o = outage_point(SystemParams{std::pow(10.0, lx), 1.0, r0});
            for (double v : {o.p_oma_weak, o.p_oma_strong, o.p_noma_weak_ainf, o.p_noma_strong_asup}) {
                CHECK(v >= 0.0);
                CHECK(v <= 1.0);
            }
        }
}

TEST_CASE("weak-user improvement grows with SNR") {
    double prev = 0.0;
    for (double db = 0.0; db <= 60.0; db += 2.0) {
        const SystemParams p{db_to_linear(db), 1.0, 2.0};
        const double ratio = oma_outage_weak(p) / noma_outage_weak_ainf(p);
        CHECK(ratio >= prev * (1 - 1e-12));
        prev = ratio;
    }
}

TEST_CASE("closed forms agree with Monte Carlo at 30 dB") {
    mcsim::SimConfig c;
    c.trials = 1000000;
    c.seed = 17;
    c.xi_grid = {1e3};
    c.r0 = 2.0;
    const auto mc = mcsim::run_outage(c)[0];
    const SystemParams p{1e3, 1.0, 2.0};
    CHECK(binomial_agrees(mc.oma_weak, oma_outage_weak(p)));
    CHECK(binomial_agrees(mc.oma_strong, oma_outage_strong(p)));
    CHECK(binomial_agrees(mc.noma_weak_ainf, noma_outage_weak_ainf(p)));
    CHECK(binomial_agrees(mc.noma_strong_asup, noma_outage_strong_asup(p)));
    // The leading term with e^{-alpha2/beta} instead of e^{-2 alpha2/beta}
    // is rejected by a wide margin.
    const double a2 = alpha_pair(p).alpha2();
    const double variant = noma_outage_weak_ainf(p) + std::exp(-a2) - std::exp(-2.0 * a2);
    CHECK_FALSE(binomial_agrees(mc.noma_weak_ainf, variant, 10.0));
    // Boundary identities are exact per draw.
    CHECK(mc.noma_weak_asup.mean == mc.oma_weak.mean);
    CHECK(mc.noma_strong_ainf.mean == mc.oma_strong.mean);
    // Outage is monotone in a for each user.
    CHECK(mc.noma_weak_ainf.mean <= mc.noma_weak_mid.mean);
    CHECK(mc.noma_weak_mid.mean <= mc.noma_weak_asup.mean);
    CHECK(mc.noma_strong_asup.mean <= mc.noma_strong_mid.mean);
    CHECK(mc.noma_strong_mid.mean <= mc.noma_strong_ainf.mean);
    // The mid-region point beats OMA for both users.
    CHECK(mc.noma_weak_mid.mean < mc.oma_weak.mean);
    CHECK(mc.noma_strong_mid.mean < mc.oma_strong.mean);
}

TEST_CASE("empirical outage by policy") {
    const SystemParams p{1e3, 1.0, 2.0};
    const EmpiricalOutage sup = noma_outage_empirical(p, APolicy::sup(), 200000, 9);
    const EmpiricalOutage inf = noma_outage_empirical(p, APolicy::inf(), 200000, 9);
    const EmpiricalOutage mid = noma_outage_empirical(p, APolicy::mid(), 200000, 9);
    CHECK(binomial_agrees(sup.weak, oma_outage_weak(p)));
    CHECK(binomial_agrees(inf.strong, oma_outage_strong(p)));
    CHECK(mid.weak.mean >= inf.weak.mean);
    CHECK(mid.weak.mean <= sup.weak.mean);
    const EmpiricalOutage again = noma_outage_empirical(p, APolicy::mid(), 200000, 9, 3);
    CHECK(again.weak.mean == mid.weak.mean);
    CHECK(again.strong.std_error == mid.strong.std_error);
    CHECK_THROWS_AS(noma_outage_empirical(p, APolicy::mid(), 0, 9), DomainError);
}
