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

#include "fairnoma/mcsim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fairnoma/error.hpp"
#include "fairnoma/multiuser.hpp"
#include "fairnoma/pairing.hpp"
#include "fairnoma/rng.hpp"

namespace fairnoma::mcsim {
namespace {

using twouser::noma_capacity_strong;
using twouser::noma_capacity_weak;
using twouser::oma_capacity;

rng::StreamKey key_for(const SimConfig& c, std::size_t xi_index, int k = 0) {
    return rng::StreamKey::derive(c.seed, static_cast<std::uint64_t>(c.scenario), xi_index,
                                  static_cast<std::uint64_t>(k));
}

void require_scenario(const SimConfig& c, Scenario s, const char* op) {
    if (c.scenario != s) {
        detail::domain_fail(std::string(op) + " requires scenario " + scenario_name(s) + ", got " +
                            scenario_name(c.scenario));
    }
}

}  // namespace

std::string scenario_name(Scenario s) {
    switch (s) {
        case Scenario::pair_iid: return "pair_iid";
        case Scenario::pair_minmax: return "pair_minmax";
        case Scenario::multiuser: return "multiuser";
    }
    return "?";
}

Scenario parse_scenario(const std::string& text) {
    if (text == "pair_iid") return Scenario::pair_iid;
    if (text == "pair_minmax") return Scenario::pair_minmax;
    if (text == "multiuser") return Scenario::multiuser;
    detail::domain_fail("unknown scenario '" + text + "'");
}

void SimConfig::validate() const {
    if (trials < 1) detail::domain_fail("trials must be >= 1");
    detail::require_positive(beta, "beta");
    detail::require_nonnegative(r0, "r0");
    if (xi_grid.empty()) detail::domain_fail("xi grid must not be empty");
    for (std::size_t i = 0; i < xi_grid.size(); ++i) {
        detail::require_positive(xi_grid[i], "xi");
        if (i > 0 && !(xi_grid[i] > xi_grid[i - 1])) {
            detail::domain_fail("xi grid must be strictly increasing");
        }
    }
    if (a_policy.kind == APolicy::Kind::fixed && !(a_policy.value > 0.0 && a_policy.value < 1.0)) {
        detail::domain_fail("fixed power fraction must lie in (0, 1)");
    }
    if (k_users < 1) detail::domain_fail("k_users must be >= 1");
    for (int k : k_grid) {
        if (k < 1) detail::domain_fail("every K in the sweep must be >= 1");
    }
}

std::vector<double> db_grid(double first_db, double last_db, double step_db) {
    if (!(step_db > 0.0) || last_db < first_db) {
        detail::domain_fail("dB grid needs step > 0 and last >= first");
    }
    std::vector<double> out;
    const auto n = static_cast<std::size_t>(std::floor((last_db - first_db) / step_db + 1e-9)) + 1;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(db_to_linear(first_db + static_cast<double>(i) * step_db));
    }
    return out;
}

std::vector<ErgodicPairPoint> run_ergodic_pair(const SimConfig& config) {
    config.validate();
    require_scenario(config, Scenario::pair_iid, "run_ergodic_pair");
    std::vector<ErgodicPairPoint> out;
    for (std::size_t j = 0; j < config.xi_grid.size(); ++j) {
        const double xi = config.xi_grid[j];
        const rng::StreamKey key = key_for(config, j);
        const auto s = run_trials<8>(config.trials, config.workers, [&](std::uint64_t t, auto& v) {
            rng::TrialStream stream(key, t);
            const ChannelPair ch(stream.exponential(config.beta), stream.exponential(config.beta));
            const double a = config.a_policy.resolve(twouser::fair_region(xi, ch));
            v[0] = oma_capacity(xi, ch.g1());
            v[1] = oma_capacity(xi, ch.g2());
            v[2] = noma_capacity_weak(xi, ch.g1(), a);
            v[3] = noma_capacity_strong(xi, ch.g2(), a);
            v[4] = v[0] + v[1];
            v[5] = v[2] + v[3];
            v[6] = v[5] - v[4];
            v[7] = 0.5 * std::log2(ch.g2() / ch.g1());
        });
        const auto r = [&](int i) { return to_result(s[i], config.seed); };
        out.push_back({xi, r(0), r(1), r(2), r(3), r(4), r(5), r(6), r(7)});
    }
    return out;
}

OutageMcPoint run_outage_at(const SimConfig& config, std::size_t j) {
    config.validate();
    require_scenario(config, Scenario::pair_iid, "run_outage");
    if (j >= config.xi_grid.size()) detail::domain_fail("xi index out of range");
    const double r0 = config.r0;
    const double xi = config.xi_grid[j];
    const rng::StreamKey key = key_for(config, j);
    const auto s = run_trials<8>(config.trials, config.workers, [&](std::uint64_t t, auto& v) {
        rng::TrialStream stream(key, t);
        const ChannelPair ch(stream.exponential(config.beta), stream.exponential(config.beta));
        const FairRegion reg = twouser::fair_region(xi, ch);
        auto below = [r0](double c) { return c < r0 ? 1.0 : 0.0; };
        v[0] = below(oma_capacity(xi, ch.g1()));
        v[1] = below(oma_capacity(xi, ch.g2()));
        v[2] = below(noma_capacity_weak(xi, ch.g1(), reg.a_inf));
        v[3] = below(noma_capacity_strong(xi, ch.g2(), reg.a_sup));
        v[4] = below(noma_capacity_weak(xi, ch.g1(), reg.a_sup));
        v[5] = below(noma_capacity_strong(xi, ch.g2(), reg.a_inf));
        v[6] = below(noma_capacity_weak(xi, ch.g1(), reg.mid()));
        v[7] = below(noma_capacity_strong(xi, ch.g2(), reg.mid()));
    });
    const auto r = [&](int i) { return to_result(s[i], config.seed); };
    return {xi, r(0), r(1), r(2), r(3), r(4), r(5), r(6), r(7)};
}

std::vector<OutageMcPoint> run_outage(const SimConfig& config) {
    config.validate();
    std::vector<OutageMcPoint> out;
    for (std::size_t j = 0; j < config.xi_grid.size(); ++j) out.push_back(run_outage_at(config, j));
    return out;
}

std::vector<PairingPoint> run_pairing(const SimConfig& config) {
    config.validate();
    require_scenario(config, Scenario::pair_minmax, "run_pairing");
    const std::vector<int> ks = config.k_grid.empty() ? std::vector<int>{config.k_users} : config.k_grid;
    for (int k : ks) {
        if (k < 2) detail::domain_fail("pairing needs K >= 2");
    }
    const double fixed_a =
        config.a_policy.kind == APolicy::Kind::fixed ? config.a_policy.value : kDefaultFixedA;

    std::vector<PairingPoint> out;
    for (int k : ks) {
        for (std::size_t j = 0; j < config.xi_grid.size(); ++j) {
            const double xi = config.xi_grid[j];
            const rng::StreamKey key = key_for(config, j, k);
            const auto s = run_trials<17>(config.trials, config.workers, [&](std::uint64_t t, auto& v) {
                rng::TrialStream stream(key, t);
                const pairing::MinMaxPair mm = pairing::sample_minmax(k, config.beta, stream);
                const ChannelPair ch(mm.g_min, mm.g_max);
                const FairRegion reg = twouser::fair_region(xi, ch);
                v[0] = oma_capacity(xi, ch.g1());
                v[1] = oma_capacity(xi, ch.g2());
                v[2] = noma_capacity_weak(xi, ch.g1(), reg.a_inf);
                v[3] = noma_capacity_strong(xi, ch.g2(), reg.a_inf);
                v[4] = noma_capacity_weak(xi, ch.g1(), reg.a_sup);
                v[5] = noma_capacity_strong(xi, ch.g2(), reg.a_sup);
                v[6] = noma_capacity_weak(xi, ch.g1(), fixed_a);
                v[7] = noma_capacity_strong(xi, ch.g2(), fixed_a);
                v[8] = v[0] + v[1];
                v[9] = v[2] + v[3];
                v[10] = v[4] + v[5];
                v[11] = v[6] + v[7];
                v[12] = v[9] - v[8];
                v[13] = v[10] - v[8];
                v[14] = v[11] - v[8];
                v[15] = reg.a_sup;
                v[16] = 0.5 * std::log2(ch.g2() / ch.g1());
            });
            const auto r = [&](int i) { return to_result(s[i], config.seed); };
            PairingPoint p;
            p.k = k;
            p.xi = xi;
            p.fixed_a = fixed_a;
            p.c_min_oma = r(0);
            p.c_max_oma = r(1);
            p.c_min_inf = r(2);
            p.c_max_inf = r(3);
            p.c_min_sup = r(4);
            p.c_max_sup = r(5);
            p.c_min_fixed = r(6);
            p.c_max_fixed = r(7);
            p.s_oma = r(8);
            p.s_inf = r(9);
            p.s_sup = r(10);
            p.s_fixed = r(11);
            p.ds_inf = r(12);
            p.ds_sup = r(13);
            p.ds_fixed = r(14);
            p.a_sup = r(15);
            p.half_log_ratio = r(16);
            out.push_back(p);
        }
    }
    return out;
}

std::vector<MultiuserPowerPoint> run_multiuser_power(const SimConfig& config) {
    config.validate();
    require_scenario(config, Scenario::multiuser, "run_multiuser_power");
    const int k = config.k_users;
    std::vector<MultiuserPowerPoint> out;
    for (std::size_t j = 0; j < config.xi_grid.size(); ++j) {
        const double xi = config.xi_grid[j];
        const rng::StreamKey key = key_for(config, j, k);
        const auto s = run_trials<2>(config.trials, config.workers, [&](std::uint64_t t, auto& v) {
            rng::TrialStream stream(key, t);
            std::vector<double> gains(static_cast<std::size_t>(k));
            for (double& g : gains) g = stream.exponential(config.beta);
            const multiuser::ChannelSet ch(std::move(gains), config.beta);
            v[0] = multiuser::min_alloc_b(xi, ch).total();
            v[1] = multiuser::full_alloc_a(xi, ch).total();
        });
        out.push_back({xi, to_result(s[0], config.seed), to_result(s[1], config.seed)});
    }
    return out;
}

}  // namespace fairnoma::mcsim
