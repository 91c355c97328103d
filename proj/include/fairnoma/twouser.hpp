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

#include <string>
#include <string_view>

// Two-user downlink model: OMA and superposition-coded NOMA capacities, the
// fair allocation region and the high-SNR approximations. Capacities are in
// b/s/Hz and SNRs are linear throughout.

namespace fairnoma {

/// Transmit SNR, mean channel SNR gain and target rate.
struct SystemParams {
    double xi = 1.0;
    double beta = 1.0;
    double r0 = 0.0;

    void validate() const;
};

double db_to_linear(double db);
double linear_to_db(double linear);

/// Ordered pair of channel SNR gains, g1 <= g2. The constructor accepts the
/// gains in either order; `swapped()` reports whether it had to reorder.
class ChannelPair {
public:
    ChannelPair(double first, double second);

    double g1() const noexcept { return g1_; }
    double g2() const noexcept { return g2_; }
    bool swapped() const noexcept { return swapped_; }
    bool tied() const noexcept { return g1_ == g2_; }

private:
    double g1_;
    double g2_;
    bool swapped_;
};

/// Fraction of power to the strong user for which both users do at least as
/// well as under OMA.
struct FairRegion {
    double a_inf = 0.0;
    double a_sup = 0.0;

    bool degenerate() const noexcept { return a_inf == a_sup; }
    double mid() const noexcept { return 0.5 * (a_inf + a_sup); }
    bool contains(double a) const noexcept { return a >= a_inf && a <= a_sup; }
};

/// How the strong-user power fraction is chosen for a given region.
struct APolicy {
    enum class Kind { inf, sup, mid, fixed };

    Kind kind = Kind::sup;
    double value = 0.0;  // only meaningful for Kind::fixed

    static APolicy inf() { return {Kind::inf, 0.0}; }
    static APolicy sup() { return {Kind::sup, 0.0}; }
    static APolicy mid() { return {Kind::mid, 0.0}; }
    static APolicy fixed(double a);

    /// Accepts "inf", "sup", "mid" or "fixed:<a>".
    static APolicy parse(std::string_view text);
    std::string name() const;

    double resolve(const FairRegion& region) const noexcept;
};

namespace twouser {

/// C_i^O = 1/2 log2(1 + xi g): full power over half the resource.
double oma_capacity(double xi, double g);

/// Weak user under NOMA, decoding its own signal with the strong user's
/// share a treated as noise.
double noma_capacity_weak(double xi, double g1, double a);

/// Strong user under NOMA after cancelling the weak user's signal.
double noma_capacity_strong(double xi, double g2, double a);

/// (sqrt(1 + xi x) - 1) / (xi x), evaluated as 1 / (sqrt(1 + xi x) + 1).
double allocation_bound(double xi, double x);

FairRegion fair_region(double xi, const ChannelPair& ch);
FairRegion fair_region(const SystemParams& params, const ChannelPair& ch);

double sum_rate(double xi, const ChannelPair& ch, double a);
double sum_rate_oma(double xi, const ChannelPair& ch);

struct HighSnrCapacities {
    double c1_oma = 0.0;
    double c2_oma = 0.0;
    double c1_ainf = 0.0;
    double c2_asup = 0.0;
};

HighSnrCapacities high_snr_capacities(double xi, const ChannelPair& ch);

}  // namespace twouser
}  // namespace fairnoma
