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

#include "fairnoma/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "fairnoma/error.hpp"

namespace fairnoma::quad {
namespace {

// Kronrod abscissae on [0, 1); odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a;
    double b;
    double value;
    double error;
    double abs_value;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const Integrand& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    double abs_sum = std::fabs(kronrod);
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        kronrod += kWgk[j] * (f1 + f2);
        abs_sum += kWgk[j] * (std::fabs(f1) + std::fabs(f2));
        if (j % 2 == 1) {
            gauss += kWg[j / 2] * (f1 + f2);
        }
    }
    const double value = kronrod * half;
    const double error = std::fabs((kronrod - gauss) * half);
    return {a, b, value, error, abs_sum * std::fabs(half)};
}

}  // namespace

QuadResult integrate(const Integrand& f, double a, double b, const QuadOptions& opts) {
    QuadResult out;
    if (a == b) {
        out.converged = true;
        return out;
    }
    std::priority_queue<Segment> heap;
    Segment first = gk15(f, a, b);
    out.evaluations = 15;
    double total = first.value;
    double total_err = first.error;
    double total_abs = first.abs_value;
    heap.push(first);

    const double eps = std::numeric_limits<double>::epsilon();
    auto done = [&] {
        const double tol = std::max(opts.abs_tol, opts.rel_tol * std::fabs(total));
        // Rounding floor: no subdivision can resolve below a few ulps of the
        // integral of |f|.
        return total_err <= tol || total_err <= 50.0 * eps * total_abs;
    };

    int intervals = 1;
    while (!done() && intervals < opts.max_intervals) {
        const Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // Interval cannot be split any further in double precision.
            heap.push({worst.a, worst.b, worst.value, 0.0, worst.abs_value});
            total_err -= worst.error;
            continue;
        }
        const Segment left = gk15(f, worst.a, mid);
        const Segment right = gk15(f, mid, worst.b);
        out.evaluations += 30;
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        total_abs += left.abs_value + right.abs_value - worst.abs_value;
        heap.push(left);
        heap.push(right);
        ++intervals;
    }

    // Re-sum from the leaves so the running updates do not leak rounding.
    double value = 0.0;
    double err = 0.0;
    double abs_value = 0.0;
    while (!heap.empty()) {
        value += heap.top().value;
        err += heap.top().error;
        abs_value += heap.top().abs_value;
        heap.pop();
    }
    total = value;
    total_err = err;
    total_abs = abs_value;
    out.value = value;
    out.abs_error = err;
    out.converged = done();
    return out;
}

QuadResult integrate_to_infinity(const Integrand& f, double a, double scale,
                                 const QuadOptions& opts) {
    if (!(scale > 0.0)) {
        detail::domain_fail("integrate_to_infinity: scale must be > 0");
    }
    auto mapped = [&](double t) -> double {
        const double one_minus = 1.0 - t;
        if (one_minus <= 0.0) {
            return 0.0;
        }
        const double x = a + scale * t / one_minus;
        if (!std::isfinite(x)) {
            return 0.0;
        }
        const double fx = f(x);
        if (fx == 0.0) {
            return 0.0;
        }
        return fx * scale / (one_minus * one_minus);
    };
    return integrate(mapped, 0.0, 1.0, opts);
}

const QuadResult& require_converged(const QuadResult& r, const char* what) {
    if (!r.converged) {
        throw QuadratureError(std::string(what) + ": quadrature did not converge", r.abs_error);
    }
    return r;
}

}  // namespace fairnoma::quad
