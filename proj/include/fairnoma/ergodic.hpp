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

#include "fairnoma/twouser.hpp"

// Expected (ergodic) capacities for two users drawn i.i.d. from an
// exponential SNR-gain distribution with mean beta and ordered so g1 <= g2.
// Ordered-pair density: 2/beta^2 exp(-(x1 + x2)/beta) on x1 < x2.

namespace fairnoma::ergodic {

struct OmaErgodic {
    double c1 = 0.0;
    double c2 = 0.0;
    double sum = 0.0;
};

/// Value plus the absolute error estimate reported by the quadrature.
struct Estimate {
    double value = 0.0;
    double abs_error = 0.0;
};

enum class RegionEnd { inf, sup };

OmaErgodic ergodic_oma(const SystemParams& params);

/// E[C_1^N(a_inf)]: closed term minus a semi-infinite integral.
/// Throws QuadratureError if the integral does not reach `rel_tol`.
Estimate ergodic_noma_weak_ainf(const SystemParams& params, double rel_tol = 1e-8);

/// E[C_2^N(a_sup)]: closed term plus a semi-infinite integral.
Estimate ergodic_noma_strong_asup(const SystemParams& params, double rel_tol = 1e-8);

/// E[S_N(a)] - E[S_O] at one end of the fair region. Tends to 1 b/s/Hz as
/// xi grows, for either end.
double expected_gain(const SystemParams& params, RegionEnd end);

struct ErgodicCurvePoint {
    double xi = 0.0;
    double e_c1_oma = 0.0;
    double e_c2_oma = 0.0;
    double e_s_oma = 0.0;
    double e_c1_noma_ainf = 0.0;
    double e_c2_noma_asup = 0.0;
};

ErgodicCurvePoint ergodic_curve_point(const SystemParams& params);

/// Expectations of the high-SNR capacity approximations, using
/// E[ln g1] = ln(beta/2) - gamma and E[ln g2] = ln(2 beta) - gamma.
struct HighSnrErgodic {
    double c1_oma = 0.0;
    double c2_oma = 0.0;
    double c1_ainf = 0.0;
    double c2_asup = 0.0;
};

HighSnrErgodic high_snr_ergodic(const SystemParams& params);

}  // namespace fairnoma::ergodic
