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

#include "fairnoma/error.hpp"
#include "fairnoma/quadrature.hpp"

using namespace fairnoma::quad;
using doctest::Approx;

TEST_CASE("finite interval polynomial and oscillatory integrands") {
    auto r = integrate([](double x) { return x * x * x; }, 0.0, 2.0);
    CHECK(r.converged);
    CHECK(r.value == Approx(4.0).epsilon(1e-14));
    r = integrate([](double x) { return std::sin(x); }, 0.0, 20.0, {1e-12, 0.0, 4000});
    CHECK(r.value == Approx(1.0 - std::cos(20.0)).epsilon(1e-11));
    CHECK(r.abs_error >= 0.0);
}

TEST_CASE("square-root endpoint singularity converges") {
    const auto r = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, {1e-9, 0.0, 4000});
    CHECK(r.converged);
    CHECK(r.value == Approx(2.0).epsilon(1e-8));
}

TEST_CASE("semi-infinite map") {
    const auto r = integrate_to_infinity([](double x) { return std::exp(-x); }, 1.0, 1.0, {1e-12, 0.0, 4000});
    CHECK(r.value == Approx(std::exp(-1.0)).epsilon(1e-11));
    const auto g = integrate_to_infinity([](double x) { return std::exp(-x * x); }, 0.0, 1.0, {1e-12, 0.0, 4000});
    CHECK(g.value == Approx(std::sqrt(M_PI) / 2).epsilon(1e-11));
}

TEST_CASE("non-convergence is reported") {
    QuadOptions opts{1e-15, 0.0, 3};
    const auto r = integrate([](double x) { return std::sin(1.0 / (x + 1e-3)); }, 0.0, 1.0, opts);
    CHECK_FALSE(r.converged);
    CHECK_THROWS_AS(require_converged(r, "test"), fairnoma::QuadratureError);
}
