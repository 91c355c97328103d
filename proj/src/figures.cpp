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

#include "fairnoma/figures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "fairnoma/ergodic.hpp"
#include "fairnoma/error.hpp"
#include "fairnoma/mcsim.hpp"
#include "fairnoma/outage.hpp"
#include "fairnoma/pairing.hpp"

namespace fairnoma::figures {
namespace {

using mcsim::Scenario;
using mcsim::SimConfig;

std::vector<double> xi_db_values(const FigureSpec& s) {
    std::vector<double> out;
    const auto n = static_cast<int>(std::floor((s.xi_db_max - s.xi_db_min) / s.xi_db_step + 1e-9)) + 1;
    for (int i = 0; i < n; ++i) out.push_back(s.xi_db_min + i * s.xi_db_step);
    return out;
}

std::vector<int> k_values(const FigureSpec& s) {
    std::vector<int> out;
    for (int k = s.k_min; k <= s.k_max; ++k) out.push_back(k);
    return out;
}

SimConfig base_config(const FigureSpec& s, Scenario scenario) {
    SimConfig c;
    c.trials = s.trials;
    c.seed = s.seed;
    c.workers = s.workers;
    c.beta = s.beta;
    c.r0 = s.r0;
    c.scenario = scenario;
    c.xi_grid = mcsim::db_grid(s.xi_db_min, s.xi_db_max, s.xi_db_step);
    return c;
}

Table figure1(const FigureSpec& s) {
    Table t;
    t.header = {"xi_db", "e_c1_oma", "e_c2_oma", "e_c1_noma_ainf_cf", "e_c2_noma_asup_cf",
                "e_c1_noma_ainf_mc", "e_c2_noma_asup_mc", "approx_c1", "approx_c2"};
    SimConfig c = base_config(s, Scenario::pair_iid);
    c.a_policy = APolicy::inf();
    const auto inf = mcsim::run_ergodic_pair(c);
    c.a_policy = APolicy::sup();
    const auto sup = mcsim::run_ergodic_pair(c);
    const auto db = xi_db_values(s);
    for (std::size_t i = 0; i < db.size(); ++i) {
        const SystemParams p{c.xi_grid[i], s.beta, 0.0};
        const auto cf = ergodic::ergodic_curve_point(p);
        const auto hi = ergodic::high_snr_ergodic(p);
        t.rows.push_back({db[i], cf.e_c1_oma, cf.e_c2_oma, cf.e_c1_noma_ainf, cf.e_c2_noma_asup,
                          inf[i].c1_noma.mean, sup[i].c2_noma.mean, hi.c1_ainf, hi.c2_asup});
    }
    return t;
}

Table figure2(const FigureSpec& s) {
    Table t;
    t.header = {"xi_db",
                "p_oma_weak_cf", "p_oma_strong_cf", "p_noma_weak_ainf_cf", "p_noma_strong_asup_cf",
                "p_oma_weak_mc", "p_oma_strong_mc", "p_noma_weak_ainf_mc", "p_noma_strong_asup_mc",
                "p_noma_weak_mid_mc", "p_noma_strong_mid_mc", "trials"};
    SimConfig c = base_config(s, Scenario::pair_iid);
    auto points = mcsim::run_outage(c);
    const std::size_t n = c.xi_grid.size();
    const std::size_t tail = std::min<std::size_t>(2, n);
    if (s.effective_tail_trials() != s.trials) {
        SimConfig deep = c;
        deep.trials = s.effective_tail_trials();
        for (std::size_t j = n - tail; j < n; ++j) points[j] = mcsim::run_outage_at(deep, j);
    }
    const auto db = xi_db_values(s);
    for (std::size_t i = 0; i < n; ++i) {
        const SystemParams p{c.xi_grid[i], s.beta, s.r0};
        const auto cf = outage::outage_point(p);
        const auto& m = points[i];
        t.rows.push_back({db[i], cf.p_oma_weak, cf.p_oma_strong, cf.p_noma_weak_ainf, cf.p_noma_strong_asup,
                          m.oma_weak.mean, m.oma_strong.mean, m.noma_weak_ainf.mean, m.noma_strong_asup.mean,
                          m.noma_weak_mid.mean, m.noma_strong_mid.mean,
                          static_cast<double>(m.oma_weak.trials)});
    }
    return t;
}

Table figure3(const FigureSpec& s) {
    Table t;
    t.header = {"k", "c_min_oma", "c_max_oma", "c_min_ainf", "c_max_ainf", "c_min_asup", "c_max_asup"};
    SimConfig c = base_config(s, Scenario::pair_minmax);
    c.xi_grid = {db_to_linear(s.k_xi_db)};
    c.k_grid = k_values(s);
    for (const auto& p : mcsim::run_pairing(c)) {
        t.rows.push_back({static_cast<double>(p.k), p.c_min_oma.mean, p.c_max_oma.mean, p.c_min_inf.mean,
                          p.c_max_inf.mean, p.c_min_sup.mean, p.c_max_sup.mean});
    }
    return t;
}

Table figure4(const FigureSpec& s) {
    Table t;
    t.header = {"xi_db", "s_oma", "s_fair_ainf", "s_fair_asup", "s_fixed", "fixed_a"};
    SimConfig c = base_config(s, Scenario::pair_minmax);
    c.k_users = s.effective_k_users();
    c.a_policy = APolicy::fixed(s.fixed_a);
    const auto pts = mcsim::run_pairing(c);
    const auto db = xi_db_values(s);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& p = pts[i];
        t.rows.push_back({db[i], p.s_oma.mean, p.s_inf.mean, p.s_sup.mean, p.s_fixed.mean, p.fixed_a});
    }
    return t;
}

Table figure5(const FigureSpec& s) {
    Table t;
    t.header = {"k", "ds_asup_cf", "ds_asup_mc", "ds_asup_se", "ds_ainf_approx", "ds_ainf_mc", "ds_ainf_se",
                "ds_fixed_mc", "ds_fixed_se"};
    SimConfig c = base_config(s, Scenario::pair_minmax);
    const double xi = db_to_linear(s.k_xi_db);
    c.xi_grid = {xi};
    c.k_grid = k_values(s);
    c.a_policy = APolicy::fixed(s.fixed_a);
    const SystemParams params{xi, s.beta, 0.0};
    for (const auto& p : mcsim::run_pairing(c)) {
        t.rows.push_back({static_cast<double>(p.k), pairing::expected_gain_asup(p.k).value, p.ds_sup.mean,
                          p.ds_sup.std_error, pairing::expected_gain_ainf_approx(p.k, params), p.ds_inf.mean,
                          p.ds_inf.std_error, p.ds_fixed.mean, p.ds_fixed.std_error});
    }
    return t;
}

Table figure6(const FigureSpec& s) {
    Table t;
    t.header = {"xi_db", "sum_b_mc", "sum_b_se", "sum_a_mc", "k"};
    SimConfig c = base_config(s, Scenario::multiuser);
    c.k_users = s.effective_k_users();
    const auto pts = mcsim::run_multiuser_power(c);
    const auto db = xi_db_values(s);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        t.rows.push_back({db[i], pts[i].sum_b.mean, pts[i].sum_b.std_error, pts[i].sum_a.mean,
                          static_cast<double>(c.k_users)});
    }
    return t;
}

}  // namespace

void FigureSpec::validate() const {
    if (id < 1 || id > 6) detail::domain_fail("figure id must be in 1..6, got " + std::to_string(id));
    if (trials < 1) detail::domain_fail("trials must be >= 1");
    detail::require_positive(beta, "beta");
    detail::require_nonnegative(r0, "r0");
    if (!(xi_db_step > 0.0) || xi_db_max < xi_db_min) {
        detail::domain_fail("xi dB grid needs step > 0 and max >= min");
    }
    if (k_min < 2 || k_max < k_min) detail::domain_fail("K sweep needs 2 <= k_min <= k_max");
    if (k_users < 0) detail::domain_fail("k_users must be >= 1");
    if (!(fixed_a > 0.0 && fixed_a < 1.0)) detail::domain_fail("fixed_a must lie in (0, 1)");
}

int FigureSpec::effective_k_users() const noexcept {
    if (k_users > 0) return k_users;
    return id == 6 ? 5 : 10;
}

std::uint64_t FigureSpec::effective_tail_trials() const noexcept {
    return tail_trials > 0 ? tail_trials : 10 * trials;
}

Table compute_figure(const FigureSpec& spec) {
    spec.validate();
    if (spec.id == 4 && spec.effective_k_users() < 2) detail::domain_fail("figure 4 needs K >= 2");
    switch (spec.id) {
        case 1: return figure1(spec);
        case 2: return figure2(spec);
        case 3: return figure3(spec);
        case 4: return figure4(spec);
        case 5: return figure5(spec);
        default: return figure6(spec);
    }
}

std::string to_csv(const Table& table) {
    std::string out;
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        if (i) out += ',';
        out += table.header[i];
    }
    out += '\n';
    char buf[40];
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            std::snprintf(buf, sizeof buf, "%.17g", row[i]);
            out += buf;
        }
        out += '\n';
    }
    return out;
}

std::string csv_name(int id) { return "fig" + std::to_string(id) + ".csv"; }

std::string plot_script(int id, const std::string& csv_file, const Table& table) {
    static const char* titles[] = {"", "Ergodic capacity, NOMA vs OMA", "Outage probability",
                                   "Ergodic capacity with min/max pairing", "Sum rate with min/max pairing",
                                   "Sum-rate gain over OMA", "Minimum total NOMA power"};
    std::ostringstream o;
    o << "import csv\nimport matplotlib\nmatplotlib.use(\"Agg\")\nimport matplotlib.pyplot as plt\n\n";
    o << "with open(\"" << csv_file << "\") as f:\n    rows = list(csv.DictReader(f))\n";
    o << "x = [float(r[\"" << table.header.front() << "\"]) for r in rows]\n";
    o << "fig, ax = plt.subplots()\n";
    for (std::size_t i = 1; i < table.header.size(); ++i) {
        const std::string& h = table.header[i];
        if (h == "trials" || h == "k" || h == "fixed_a" || h.ends_with("_se")) continue;
        o << "ax.plot(x, [float(r[\"" << h << "\"]) for r in rows], label=\"" << h << "\")\n";
    }
    if (id == 2) o << "ax.set_yscale(\"log\")\n";
    o << "ax.set_xlabel(\"" << table.header.front() << "\")\n";
    o << "ax.set_title(\"" << titles[id] << "\")\n";
    o << "ax.legend()\nfig.savefig(\"" << csv_file.substr(0, csv_file.size() - 4) << ".png\", dpi=150)\n";
    return o.str();
}

}  // namespace fairnoma::figures
