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

#include <functional>

namespace fairnoma::quad {

struct QuadOptions {
    double rel_tol = 1e-8;
    double abs_tol = 0.0;
    int max_intervals = 4000;
};

struct QuadResult {
    double value = 0.0;
    double abs_error = 0.0;
    int evaluations = 0;
    bool converged = false;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive 7/15-point Gauss-Kronrod quadrature on [a, b].
/// The interval with the largest error estimate is bisected until the total
/// error is below max(abs_tol, rel_tol * |value|).
QuadResult integrate(const Integrand& f, double a, double b, const QuadOptions& opts = {});

/// Integral over [a, inf) through the map x = a + scale * t / (1 - t).
QuadResult integrate_to_infinity(const Integrand& f, double a, double scale,
                                 const QuadOptions& opts = {});

/// Throws QuadratureError when `r` did not converge; returns `r` otherwise.
const QuadResult& require_converged(const QuadResult& r, const char* what);

}  // namespace fairnoma::quad
