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

#include <optional>

#include "fairnoma/rng.hpp"
#include "fairnoma/twouser.hpp"

// Opportunistic pairing: out of K i.i.d. exponential users, the weakest and
// the strongest share one NOMA transmission.

namespace fairnoma::pairing {

struct MinMaxPair {
    double g_min = 0.0;
    double g_max = 0.0;
    int k = 0;
};

/// Pr{min < x0, max < xM} = (1 - e^{-xM/b})^K - (e^{-x0/b} - e^{-xM/b})^K.
double minmax_joint_cdf(double x0, double x_max, int k, double beta);

/// K(K-1)/b^2 e^{-(x0+xM)/b} (e^{-x0/b} - e^{-xM/b})^{K-2} on 0 < x0 < xM.
double minmax_joint_pdf(double x0, double x_max, int k, double beta);

/// Draws K exponential gains from the stream and keeps the extremes.
MinMaxPair sample_minmax(int k, double beta, rng::TrialStream& stream);

enum class GainPath { alternating_sum, quadrature };

struct PairingGain {
    double value = 0.0;
    GainPath path = GainPath::alternating_sum;
};

/// High-SNR sum-rate gain over OMA at a_sup for min/max pairing:
///   1/2 log2 K + 1/2 sum_{m=2}^{K} C(K,m) (-1)^m log2 m.
/// The alternating sum loses digits quickly, so above K = 30 the equivalent
/// 1/2 E[log2 g_max] - 1/2 E[log2 g_min] is integrated instead. `force`
/// selects a path explicitly.
PairingGain expected_gain_asup(int k, std::optional<GainPath> force = std::nullopt);

inline constexpr int kAlternatingSumMaxK = 30;

/// Plug-in approximation of the gain at a_inf for large xi and K:
/// e^{K/(b xi)} E1(K/(b xi)) / ln 4 - log2(1 + (sqrt(1 + xi H) - 1)/(K H)),
/// with H = psi(K+1) + gamma.
double expected_gain_ainf_approx(int k, const SystemParams& params);

}  // namespace fairnoma::pairing
