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

#include <cstdint>

#include "fairnoma/engine.hpp"
#include "fairnoma/twouser.hpp"

// Outage probabilities Pr{C < R0} for OMA and for NOMA at the two ends of
// the fair region, i.i.d. exponential gains ordered g1 <= g2.

namespace fairnoma::outage {

double oma_outage_weak(const SystemParams& params);
double oma_outage_strong(const SystemParams& params);

/// Thresholds that split the weak-user outage event at a_inf.
/// The weak user is in outage iff g1 < g2 * alpha1(g2) when g2 > alpha2,
/// and always when g2 <= alpha2.
class AlphaPair {
public:
    AlphaPair(double xi, double r0);

    double alpha2() const noexcept { return alpha2_; }

    /// (2^R0 - 1) / (xi x + 2^R0 (1 - sqrt(1 + xi x))). Throws DomainError
    /// where the denominator is not positive (x at or below
    /// (4^R0 - 2^{R0+1}) / xi).
    double alpha1(double x) const;

    /// x * alpha1(x), computed without the cancellation in the denominator.
    double weak_threshold(double x) const;

private:
    double xi_;
    double r0_;
    double alpha2_;
};

AlphaPair alpha_pair(const SystemParams& params);

struct ProbabilityEstimate {
    double value = 0.0;
    double abs_error = 0.0;
};

/// Weak user at a_inf. No closed form: the semi-infinite integral is done by
/// adaptive quadrature on [alpha2, alpha2 + 40 beta] plus an analytic tail.
double noma_outage_weak_ainf(const SystemParams& params);
ProbabilityEstimate noma_outage_weak_ainf_detailed(const SystemParams& params);

/// Strong user at a_sup, closed form in erfc.
double noma_outage_strong_asup(const SystemParams& params);

struct OutagePoint {
    double xi = 0.0;
    double r0 = 0.0;
    double p_oma_weak = 0.0;
    double p_oma_strong = 0.0;
    double p_noma_weak_ainf = 0.0;
    double p_noma_strong_asup = 0.0;
};

OutagePoint outage_point(const SystemParams& params);

struct EmpiricalOutage {
    mcsim::SimResult weak;
    mcsim::SimResult strong;
};

/// Monte Carlo outage frequencies for an arbitrary policy. Deterministic in
/// `seed`; draws are shared with mcsim::run_outage at grid index 0.
EmpiricalOutage noma_outage_empirical(const SystemParams& params, const APolicy& policy,
                                      std::uint64_t trials, std::uint64_t seed,
                                      unsigned workers = 0);

}  // namespace fairnoma::outage
