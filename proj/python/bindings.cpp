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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fairnoma/cli.hpp"
#include "fairnoma/ergodic.hpp"
#include "fairnoma/error.hpp"
#include "fairnoma/figures.hpp"
#include "fairnoma/mcsim.hpp"
#include "fairnoma/multiuser.hpp"
#include "fairnoma/outage.hpp"
#include "fairnoma/pairing.hpp"
#include "fairnoma/specfun.hpp"
#include "fairnoma/twouser.hpp"

namespace py = pybind11;
using namespace fairnoma;

namespace {

py::dict sim_dict(const mcsim::SimResult& r) {
    py::dict d;
    d["mean"] = r.mean;
    d["std_error"] = r.std_error;
    d["trials"] = r.trials;
    d["seed"] = r.seed;
    return d;
}

mcsim::SimConfig make_config(const std::vector<double>& xi_grid, std::uint64_t trials, std::uint64_t seed,
                             double beta, double r0, const std::string& policy, const std::string& scenario,
                             int k_users, const std::vector<int>& k_grid, unsigned workers) {
    mcsim::SimConfig c;
    c.xi_grid = xi_grid;
    c.trials = trials;
    c.seed = seed;
    c.beta = beta;
    c.r0 = r0;
    c.a_policy = APolicy::parse(policy);
    c.scenario = mcsim::parse_scenario(scenario);
    c.k_users = k_users;
    c.k_grid = k_grid;
    c.workers = workers;
    return c;
}

}  // namespace

PYBIND11_MODULE(_fairnoma, m) {
    m.doc() = "Fair power allocation for NOMA downlinks";
    m.attr("__version__") = FAIRNOMA_PY_VERSION;

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<QuadratureError>(m, "QuadratureError", PyExc_ArithmeticError);

    m.def("exp_integral_e1", &specfun::exp_integral_e1, py::arg("x"));
    m.def("erfc", &specfun::erfc, py::arg("z"));
    m.def("digamma", &specfun::digamma, py::arg("w"));
    m.attr("EULER_GAMMA") = specfun::kEulerGamma;

    m.def("db_to_linear", &db_to_linear, py::arg("db"));
    m.def("linear_to_db", &linear_to_db, py::arg("linear"));

    py::class_<FairRegion>(m, "FairRegion")
        .def_readonly("a_inf", &FairRegion::a_inf)
        .def_readonly("a_sup", &FairRegion::a_sup)
        .def_property_readonly("degenerate", &FairRegion::degenerate)
        .def("mid", &FairRegion::mid)
        .def("contains", &FairRegion::contains, py::arg("a"))
        .def("__repr__", [](const FairRegion& r) {
            std::ostringstream o;
            o.precision(10);
            o << "FairRegion(a_inf=" << r.a_inf << ", a_sup=" << r.a_sup << ")";
            return o.str();
        });

    m.def(
        "fair_region", [](double xi, double g1, double g2) { return twouser::fair_region(xi, ChannelPair(g1, g2)); },
        py::arg("xi"), py::arg("g1"), py::arg("g2"));
    m.def("oma_capacity", &twouser::oma_capacity, py::arg("xi"), py::arg("g"));
    m.def("noma_capacity_weak", &twouser::noma_capacity_weak, py::arg("xi"), py::arg("g1"), py::arg("a"));
    m.def("noma_capacity_strong", &twouser::noma_capacity_strong, py::arg("xi"), py::arg("g2"), py::arg("a"));
    m.def(
        "sum_rate", [](double xi, double g1, double g2, double a) { return twouser::sum_rate(xi, ChannelPair(g1, g2), a); },
        py::arg("xi"), py::arg("g1"), py::arg("g2"), py::arg("a"));

    m.def(
        "ergodic",
        [](double xi, double beta) {
            const auto p = ergodic::ergodic_curve_point(SystemParams{xi, beta, 0.0});
            py::dict d;
            d["e_c1_oma"] = p.e_c1_oma;
            d["e_c2_oma"] = p.e_c2_oma;
            d["e_s_oma"] = p.e_s_oma;
            d["e_c1_noma_ainf"] = p.e_c1_noma_ainf;
            d["e_c2_noma_asup"] = p.e_c2_noma_asup;
            return d;
        },
        py::arg("xi"), py::arg("beta") = 1.0);

    m.def(
        "outage",
        [](double xi, double r0, double beta) {
            const auto p = outage::outage_point(SystemParams{xi, beta, r0});
            py::dict d;
            d["p_oma_weak"] = p.p_oma_weak;
            d["p_oma_strong"] = p.p_oma_strong;
            d["p_noma_weak_ainf"] = p.p_noma_weak_ainf;
            d["p_noma_strong_asup"] = p.p_noma_strong_asup;
            return d;
        },
        py::arg("xi"), py::arg("r0"), py::arg("beta") = 1.0);

    m.def(
        "pairing_gain_asup", [](int k) { return pairing::expected_gain_asup(k).value; }, py::arg("k"));
    m.def(
        "pairing_gain_ainf_approx",
        [](int k, double xi, double beta) { return pairing::expected_gain_ainf_approx(k, SystemParams{xi, beta, 0.0}); },
        py::arg("k"), py::arg("xi"), py::arg("beta") = 1.0);

    m.def(
        "multiuser_allocation",
        [](double xi, std::vector<double> gains) {
            const multiuser::ChannelSet ch(std::move(gains));
            const auto b = multiuser::min_alloc_b(xi, ch);
            const auto a = multiuser::full_alloc_a(xi, ch);
            py::dict d;
            d["gains"] = std::vector<double>(ch.gains().begin(), ch.gains().end());
            d["b"] = b.coeffs;
            d["a"] = a.coeffs;
            d["residual"] = a.residual;
            d["slack_a"] = multiuser::verify_fairness(xi, ch, a).slack;
            d["slack_b"] = multiuser::verify_fairness(xi, ch, b).slack;
            return d;
        },
        py::arg("xi"), py::arg("gains"));

    m.def(
        "run_ergodic_pair",
        [](const std::vector<double>& xi_grid, std::uint64_t trials, std::uint64_t seed, double beta,
           const std::string& policy, unsigned workers) {
            const auto c = make_config(xi_grid, trials, seed, beta, 0.0, policy, "pair_iid", 2, {}, workers);
            std::vector<mcsim::ErgodicPairPoint> pts;
            {
                py::gil_scoped_release release;
                pts = mcsim::run_ergodic_pair(c);
            }
            py::list out;
            for (const auto& p : pts) {
                py::dict d;
                d["xi"] = p.xi;
                d["c1_oma"] = sim_dict(p.c1_oma);
                d["c2_oma"] = sim_dict(p.c2_oma);
                d["c1_noma"] = sim_dict(p.c1_noma);
                d["c2_noma"] = sim_dict(p.c2_noma);
                d["s_oma"] = sim_dict(p.s_oma);
                d["s_noma"] = sim_dict(p.s_noma);
                d["delta_s"] = sim_dict(p.delta_s);
                out.append(d);
            }
            return out;
        },
        py::arg("xi_grid"), py::arg("trials") = 100000, py::arg("seed") = 1, py::arg("beta") = 1.0,
        py::arg("policy") = "sup", py::arg("workers") = 0);

    m.def(
        "run_multiuser_power",
        [](const std::vector<double>& xi_grid, int k, std::uint64_t trials, std::uint64_t seed, double beta,
           unsigned workers) {
            const auto c = make_config(xi_grid, trials, seed, beta, 0.0, "sup", "multiuser", k, {}, workers);
            std::vector<mcsim::MultiuserPowerPoint> pts;
            {
                py::gil_scoped_release release;
                pts = mcsim::run_multiuser_power(c);
            }
            py::list out;
            for (const auto& p : pts) out.append(sim_dict(p.sum_b));
            return out;
        },
        py::arg("xi_grid"), py::arg("k"), py::arg("trials") = 100000, py::arg("seed") = 1, py::arg("beta") = 1.0,
        py::arg("workers") = 0);

    m.def(
        "figure_csv",
        [](int id, std::uint64_t trials, std::uint64_t seed, unsigned workers) {
            figures::FigureSpec s;
            s.id = id;
            s.trials = trials;
            s.seed = seed;
            s.workers = workers;
            py::gil_scoped_release release;
            return figures::to_csv(figures::compute_figure(s));
        },
        py::arg("id"), py::arg("trials") = 100000, py::arg("seed") = 1, py::arg("workers") = 0);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code;
            {
                py::gil_scoped_release release;
                code = cli::run_cli(args, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
