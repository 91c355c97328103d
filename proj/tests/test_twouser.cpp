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
#include <random>

#include "fairnoma/error.hpp"
#include "fairnoma/twouser.hpp"

using namespace fairnoma;
using namespace fairnoma::twouser;
using doctest::Approx;

namespace {

// Random (xi, g1, g2) spanning -10..70 dB and four decades of gain.
struct Draw {
    double xi, g1, g2;
};

Draw random_draw(std::mt19937_64& gen) {
    std::uniform_real_distribution<double> db(-10.0, 70.0), lg(-2.0, 2.0);
    double g1 = std::pow(10.0, lg(gen)), g2 = std::pow(10.0, lg(gen));
    if (g1 > g2) std::swap(g1, g2);
    return {db_to_linear(db(gen)), g1, g2};
}

double bisect_strong_boundary(double xi, double g2) {
    // Smallest a with log2(1 + a xi g2) >= oma capacity; found by bisection
    // on the defining equality rather than the closed form.
    const double target = oma_capacity(xi, g2);
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (noma_capacity_strong(xi, g2, mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("oma capacity") {
    CHECK(oma_capacity(3.0, 1.0) == Approx(1.0).epsilon(1e-15));
    CHECK(oma_capacity(1.0, 1e-300) < 1e-299);
    CHECK(oma_capacity(100.0, 0.5) == Approx(2.8362126709857478).epsilon(1e-14));
    CHECK_THROWS_AS(oma_capacity(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(oma_capacity(1.0, -1.0), DomainError);
}

TEST_CASE("noma capacities") {
    CHECK(noma_capacity_weak(1.0, 3.0, 0.0) == Approx(2.0).epsilon(1e-15));
    CHECK(noma_capacity_weak(1.0, 3.0, 1.0) == 0.0);
    CHECK(noma_capacity_weak(1.0, 3.0, 0.25) == Approx(std::log2(16.0 / 7.0)).epsilon(1e-14));
    CHECK(noma_capacity_strong(1.0, 8.0, 0.0) == 0.0);
    CHECK(noma_capacity_strong(1.0, 8.0, 0.25) == Approx(std::log2(3.0)).epsilon(1e-14));
    CHECK(noma_capacity_strong(2.0, 4.0, 1.0) == Approx(std::log2(9.0)).epsilon(1e-14));
    CHECK_THROWS_AS(noma_capacity_weak(1.0, 1.0, 1.5), DomainError);
    CHECK_THROWS_AS(noma_capacity_strong(1.0, 1.0, -0.1), DomainError);
    double pw = noma_capacity_weak(10.0, 2.0, 0.0), ps = noma_capacity_strong(10.0, 2.0, 0.0);
    for (double a = 0.01; a <= 1.0; a += 0.01) {
        CHECK(noma_capacity_weak(10.0, 2.0, a) < pw);
        CHECK(noma_capacity_strong(10.0, 2.0, a) > ps);
        pw = noma_capacity_weak(10.0, 2.0, a);
        ps = noma_capacity_strong(10.0, 2.0, a);
    }
}

TEST_CASE("allocation bound exact points, range and monotonicity") {
    CHECK(allocation_bound(1.0, 3.0) == Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(allocation_bound(1.0, 8.0) == Approx(0.25).epsilon(1e-15));
    CHECK(allocation_bound(99.0, 1.0) == Approx(1.0 / 11.0).epsilon(1e-15));
    double prev = 0.5;
    for (double ly = -9.0; ly <= 12.0; ly += 0.01) {
        const double v = allocation_bound(1.0, std::pow(10.0, ly));
        CHECK(v > 0.0);
        CHECK(v < 0.5);
        CHECK(v < prev);
        prev = v;
    }
    CHECK(allocation_bound(1.0, 1e-12) == Approx(0.5).epsilon(1e-12));
}

TEST_CASE("fair region") {
    const FairRegion r = fair_region(1.0, ChannelPair(3.0, 8.0));
    CHECK(r.a_inf == Approx(0.25).epsilon(1e-15));
    CHECK(r.a_sup == Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK_FALSE(r.degenerate());
    const FairRegion d = fair_region(5.0, ChannelPair(2.0, 2.0));
    CHECK(d.degenerate());
    const FairRegion b = fair_region(SystemParams{100.0, 1.0, 0.0}, ChannelPair(0.5, 2.0));
    CHECK(std::fabs(b.a_inf - bisect_strong_boundary(100.0, 2.0)) < 1e-10);
    CHECK(noma_capacity_strong(100.0, 2.0, b.a_inf) == Approx(oma_capacity(100.0, 2.0)).epsilon(1e-12));
}

TEST_CASE("channel pair ordering") {
    const ChannelPair p(8.0, 3.0);
    CHECK(p.swapped());
    CHECK(p.g1() == 3.0);
    CHECK(p.g2() == 8.0);
    CHECK(ChannelPair(2.0, 2.0).tied());
    CHECK_THROWS_AS(ChannelPair(0.0, 1.0), DomainError);
}

TEST_CASE("sum rates") {
    const ChannelPair ch(3.0, 8.0);
    CHECK(sum_rate(1.0, ch, 0.25) == Approx(2.7776075786635521).epsilon(1e-14));
    const ChannelPair tie(2.0, 2.0);
    const double a = fair_region(4.0, tie).a_inf;
    CHECK(sum_rate(4.0, tie, a) == Approx(std::log2(9.0)).epsilon(1e-13));
    CHECK(sum_rate(4.0, tie, a) == Approx(sum_rate_oma(4.0, tie)).epsilon(1e-14));
    double prev = sum_rate(10.0, ch, 0.001);
    for (double x = 0.002; x < 1.0; x += 0.001) {
        const double s = sum_rate(10.0, ch, x);
        CHECK(s > prev);
        prev = s;
    }
}

TEST_CASE("fairness, boundary tightness and SIC validity on random draws") {
    std::mt19937_64 gen(20261016);
    int fair_failures = 0, tight_failures = 0, sic_failures = 0;
    for (int i = 0; i < 10000; ++i) {
        const Draw d = random_draw(gen);
        const ChannelPair ch(d.g1, d.g2);
        const FairRegion r = fair_region(d.xi, ch);
        const double c1o = oma_capacity(d.xi, d.g1), c2o = oma_capacity(d.xi, d.g2);
        if (!(r.a_inf <= r.a_sup && r.a_inf > 0.0 && r.a_sup < 0.5)) ++fair_failures;
        for (int j = 0; j < 10; ++j) {
            const double a = r.a_inf + (r.a_sup - r.a_inf) * j / 9.0;
            if (noma_capacity_weak(d.xi, d.g1, a) < c1o - 1e-9) ++fair_failures;
            if (noma_capacity_strong(d.xi, d.g2, a) < c2o - 1e-9) ++fair_failures;
        }
        if (std::fabs(noma_capacity_strong(d.xi, d.g2, r.a_inf) - c2o) > 1e-9 * c2o) ++tight_failures;
        if (std::fabs(noma_capacity_weak(d.xi, d.g1, r.a_sup) - c1o) > 1e-9 * c1o) ++tight_failures;
        if (d.g2 > d.g1) {
            for (double a = 0.05; a < 1.0; a += 0.1) {
                const double s2 = (1 - a) * d.xi * d.g2 / (a * d.xi * d.g2 + 1);
                const double s1 = (1 - a) * d.xi * d.g1 / (a * d.xi * d.g1 + 1);
                if (!(s2 > s1)) ++sic_failures;
            }
        }
    }
    CHECK(fair_failures == 0);
    CHECK(tight_failures == 0);
    CHECK(sic_failures == 0);
}

TEST_CASE("sum rate at a_sup increases with either gain") {
    std::mt19937_64 gen(7);
    int failures = 0;
    for (int i = 0; i < 200; ++i) {
        const Draw d = random_draw(gen);
        if (d.g2 <= d.g1 * 1.01) continue;
        auto s = [&](double g1, double g2) {
            return sum_rate(d.xi, ChannelPair(g1, g2), fair_region(d.xi, ChannelPair(g1, g2)).a_sup);
        };
        double prev = s(d.g1 * 0.01, d.g2);
        for (int j = 1; j <= 50; ++j) {
            const double v = s(d.g1 * (0.01 + 0.99 * j / 50.0), d.g2);
            if (!(v > prev)) ++failures;
            prev = v;
        }
        prev = s(d.g1, d.g1 * 1.001);
        for (int j = 1; j <= 50; ++j) {
            const double v = s(d.g1, d.g1 * 1.001 + (d.g2 - d.g1) * j / 50.0);
            if (!(v > prev)) ++failures;
            prev = v;
        }
    }
    CHECK(failures == 0);
}

TEST_CASE("high SNR approximations") {
    const HighSnrCapacities t = high_snr_capacities(50.0, ChannelPair(2.0, 2.0));
    CHECK(t.c1_ainf == Approx(t.c2_oma).epsilon(1e-15));
    CHECK(t.c1_ainf == Approx(0.5 * std::log2(100.0)).epsilon(1e-15));
    const ChannelPair ch(1.0, 4.0);
    const HighSnrCapacities h = high_snr_capacities(1e5, ch);
    const double exact = noma_capacity_weak(1e5, 1.0, fair_region(1e5, ch).a_inf);
    const double err5 = std::fabs(exact - h.c1_ainf);
    CHECK(err5 < 0.01);
    const double err7 = std::fabs(noma_capacity_weak(1e7, 1.0, fair_region(1e7, ch).a_inf) -
                                  high_snr_capacities(1e7, ch).c1_ainf);
    CHECK(err7 / err5 == Approx(0.1).epsilon(0.2));
    CHECK(h.c2_asup == Approx(0.5 * std::log2(1e5) + 2.0).epsilon(1e-14));
}

TEST_CASE("power policies") {
    const FairRegion r{0.1, 0.3};
    CHECK(APolicy::parse("inf").resolve(r) == 0.1);
    CHECK(APolicy::parse("sup").resolve(r) == 0.3);
    CHECK(APolicy::parse("mid").resolve(r) == Approx(0.2));
    CHECK(APolicy::parse("fixed:0.2").resolve(r) == 0.2);
    CHECK(APolicy::parse("fixed:0.2").name() == "fixed:0.2");
    CHECK_THROWS_AS(APolicy::parse("fixed:1.5"), DomainError);
    CHECK_THROWS_AS(APolicy::parse("bogus"), DomainError);
    CHECK_THROWS_AS(APolicy::fixed(0.0), DomainError);
}

TEST_CASE("system params and dB conversion") {
    CHECK(db_to_linear(20.0) == Approx(100.0).epsilon(1e-15));
    CHECK(linear_to_db(1000.0) == Approx(30.0).epsilon(1e-15));
    CHECK_THROWS_AS((SystemParams{0.0, 1.0, 0.0}.validate()), DomainError);
    CHECK_THROWS_AS((SystemParams{1.0, -1.0, 0.0}.validate()), DomainError);
    CHECK_THROWS_AS((SystemParams{1.0, 1.0, -1.0}.validate()), DomainError);
    CHECK_NOTHROW((SystemParams{1.0, 1.0, 0.0}.validate()));
}
