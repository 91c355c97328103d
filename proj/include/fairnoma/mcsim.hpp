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
#include <string>
#include <vector>

#include "fairnoma/engine.hpp"
#include "fairnoma/twouser.hpp"

// Monte Carlo estimates of every expectation and probability the closed forms
// predict. Trial i at grid point j draws from the stream keyed by
// (seed, scenario, j[, K]) with counter i, so results are bit-identical for
// any worker count, and every a-policy sees the same channel draws.

namespace fairnoma::mcsim {

std::string scenario_name(Scenario s);
Scenario parse_scenario(const std::string& text);

struct SimConfig {
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 1;
    std::vector<double> xi_grid;  // linear SNR, strictly increasing
    double beta = 1.0;
    int k_users = 2;
    std::vector<int> k_grid;  // pair_minmax sweep; empty means {k_users}
    double r0 = 2.0;
    APolicy a_policy = APolicy::sup();
    Scenario scenario = Scenario::pair_iid;
    unsigned workers = 0;  // 0: hardware concurrency

    void validate() const;
};

/// Linear SNR grid from a dB range, inclusive of both ends.
std::vector<double> db_grid(double first_db, double last_db, double step_db);

struct ErgodicPairPoint {
    double xi = 0.0;
    SimResult c1_oma, c2_oma;
    SimResult c1_noma, c2_noma;  // under config.a_policy
    SimResult s_oma, s_noma;
    SimResult delta_s;            // s_noma - s_oma per draw
    SimResult half_log_ratio;     // 1/2 log2(g2 / g1)
};

std::vector<ErgodicPairPoint> run_ergodic_pair(const SimConfig& config);

struct OutageMcPoint {
    double xi = 0.0;
    SimResult oma_weak, oma_strong;
    SimResult noma_weak_ainf, noma_strong_asup;
    SimResult noma_weak_asup, noma_strong_ainf;  // equal to OMA draw by draw
    SimResult noma_weak_mid, noma_strong_mid;
};

std::vector<OutageMcPoint> run_outage(const SimConfig& config);

/// Single grid point; the stream key matches the full sweep's, so a longer
/// run here extends the same draws.
OutageMcPoint run_outage_at(const SimConfig& config, std::size_t xi_index);

struct PairingPoint {
    int k = 0;
    double xi = 0.0;
    double fixed_a = 0.0;
    SimResult c_min_oma, c_max_oma;
    SimResult c_min_inf, c_max_inf;
    SimResult c_min_sup, c_max_sup;
    SimResult c_min_fixed, c_max_fixed;
    SimResult s_oma, s_inf, s_sup, s_fixed;
    SimResult ds_inf, ds_sup, ds_fixed;
    SimResult a_sup;
    SimResult half_log_ratio;  // 1/2 log2(g_max / g_min)
};

/// One point per (K, xi) pair, K outermost. The fixed-power comparison uses
/// config.a_policy when it is fixed, otherwise a = 1/5.
std::vector<PairingPoint> run_pairing(const SimConfig& config);

inline constexpr double kDefaultFixedA = 0.2;

struct MultiuserPowerPoint {
    double xi = 0.0;
    SimResult sum_b;  // minimum total power fraction
    SimResult sum_a;  // a-vector total, before the residual is assigned
};

std::vector<MultiuserPowerPoint> run_multiuser_power(const SimConfig& config);

}  // namespace fairnoma::mcsim
