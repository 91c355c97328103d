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

#include "fairnoma/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fairnoma/engine.hpp"
#include "fairnoma/ergodic.hpp"
#include "fairnoma/error.hpp"
#include "fairnoma/figures.hpp"
#include "fairnoma/multiuser.hpp"
#include "fairnoma/outage.hpp"
#include "fairnoma/pairing.hpp"
#include "fairnoma/rng.hpp"
#include "fairnoma/twouser.hpp"

#ifndef FAIRNOMA_VERSION
#define FAIRNOMA_VERSION "0.0.0"
#endif

namespace fairnoma::cli {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string fmt(double v, int digits = 10) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string scalar_token(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number_unsigned()) return std::to_string(v.get<unsigned long long>());
    if (v.is_number_float()) return fmt(v.get<double>(), 17);
    throw UsageError("unsupported config value " + v.dump());
}

// Turns a flat JSON object (or a run manifest holding one under "config")
// into flag tokens. They are placed before the command-line flags, and every
// option keeps its last value, so the command line wins.
std::vector<std::string> config_tokens(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read config file " + path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw UsageError("config file " + path.string() + " is not valid JSON: " + e.what());
    }
    if (doc.is_object() && doc.contains("config") && doc["config"].is_object()) doc = doc["config"];
    if (!doc.is_object()) throw UsageError("config file must hold a JSON object");
    std::vector<std::string> out;
    for (const auto& [key, value] : doc.items()) {
        std::string flag = "--" + key;
        std::replace(flag.begin(), flag.end(), '_', '-');
        if (value.is_null()) continue;
        if (value.is_boolean()) {
            if (value.get<bool>()) out.push_back(flag);
            continue;
        }
        if (value.is_array()) {
            std::string joined;
            for (const auto& e : value) joined += (joined.empty() ? "" : ",") + scalar_token(e);
            out.push_back(flag);
            out.push_back(joined);
            continue;
        }
        out.push_back(flag);
        out.push_back(scalar_token(value));
    }
    return out;
}

std::vector<std::string> expand_config(std::vector<std::string> args) {
    std::optional<fs::path> config;
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--config") {
            if (i + 1 >= args.size()) throw UsageError("--config needs a file argument");
            config = args[++i];
        } else if (a.starts_with("--config=")) {
            config = a.substr(9);
        } else {
            rest.push_back(a);
        }
    }
    if (!config) return rest;
    if (rest.empty() || rest.front().starts_with("-")) {
        throw UsageError("--config must follow a subcommand");
    }
    auto tokens = config_tokens(*config);
    rest.insert(rest.begin() + 1, tokens.begin(), tokens.end());
    return rest;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open " + path.string() + " for writing");
    f << text;
    f.close();
    if (!f) throw IoError("failed writing " + path.string());
}

struct XiArgs {
    std::optional<double> xi_db;
    std::optional<double> xi;

    void add(CLI::App* app) {
        auto* a = app->add_option("--xi-db", xi_db, "transmit SNR in dB");
        auto* b = app->add_option("--xi", xi, "transmit SNR, linear");
        a->excludes(b);
    }

    double linear() const {
        if (xi) return *xi;
        if (xi_db) return db_to_linear(*xi_db);
        throw UsageError("one of --xi-db or --xi is required");
    }

    std::string echo() const {
        const double x = linear();
        return "xi = " + fmt(x) + " (" + fmt(linear_to_db(x)) + " dB)";
    }
};

void add_format(CLI::App* app, std::string& format) {
    app->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
}

// region -------------------------------------------------------------------

struct RegionArgs {
    XiArgs xi;
    double g1 = 0.0;
    double g2 = 0.0;
    std::string format = "text";
};

int cmd_region(const RegionArgs& r, std::ostream& out, std::ostream& err) {
    const double xi = r.xi.linear();
    detail::require_positive(xi, "xi");
    const ChannelPair ch(r.g1, r.g2);
    if (ch.swapped()) err << "warning: --g1 > --g2, inputs swapped so that g1 <= g2\n";
    const FairRegion reg = twouser::fair_region(xi, ch);
    const double c1o = twouser::oma_capacity(xi, ch.g1());
    const double c2o = twouser::oma_capacity(xi, ch.g2());
    struct End {
        const char* name;
        double a, c1, c2;
    };
    const End ends[] = {
        {"inf", reg.a_inf, twouser::noma_capacity_weak(xi, ch.g1(), reg.a_inf),
         twouser::noma_capacity_strong(xi, ch.g2(), reg.a_inf)},
        {"sup", reg.a_sup, twouser::noma_capacity_weak(xi, ch.g1(), reg.a_sup),
         twouser::noma_capacity_strong(xi, ch.g2(), reg.a_sup)},
    };
    if (r.format == "json") {
        json j = {{"xi", xi}, {"xi_db", linear_to_db(xi)}, {"g1", ch.g1()}, {"g2", ch.g2()},
                  {"swapped", ch.swapped()}, {"degenerate", reg.degenerate()},
                  {"a_inf", reg.a_inf}, {"a_sup", reg.a_sup}, {"c1_oma", c1o}, {"c2_oma", c2o}};
        for (const End& e : ends) {
            j[e.name] = {{"a", e.a}, {"c1_noma", e.c1}, {"c2_noma", e.c2}, {"sum_noma", e.c1 + e.c2}};
        }
        out << j.dump(2) << '\n';
        return kOk;
    }
    if (r.format == "text") {
        out << r.xi.echo() << '\n';
        out << "g1 = " << fmt(ch.g1()) << ", g2 = " << fmt(ch.g2()) << '\n';
        out << "a_inf = " << fmt(reg.a_inf) << '\n';
        out << "a_sup = " << fmt(reg.a_sup) << '\n';
        if (reg.degenerate()) out << "note: g1 == g2, the fair region is the single point a_inf = a_sup\n";
    }
    out << "endpoint,a,c1_oma,c2_oma,c1_noma,c2_noma,sum_oma,sum_noma\n";
    for (const End& e : ends) {
        out << e.name << ',' << fmt(e.a, 17) << ',' << fmt(c1o, 17) << ',' << fmt(c2o, 17) << ','
            << fmt(e.c1, 17) << ',' << fmt(e.c2, 17) << ',' << fmt(c1o + c2o, 17) << ','
            << fmt(e.c1 + e.c2, 17) << '\n';
    }
    return kOk;
}

// figure -------------------------------------------------------------------

struct FigureArgs {
    figures::FigureSpec spec;
    std::string out_dir;
    bool plot = false;
};

json figure_config_echo(const figures::FigureSpec& s) {
    return {{"figure", s.id},
            {"trials", s.trials},
            {"tail-trials", s.effective_tail_trials()},
            {"seed", s.seed},
            {"workers", s.workers},
            {"beta", s.beta},
            {"r0", s.r0},
            {"xi-db-min", s.xi_db_min},
            {"xi-db-max", s.xi_db_max},
            {"xi-db-step", s.xi_db_step},
            {"k-xi-db", s.k_xi_db},
            {"k-min", s.k_min},
            {"k-max", s.k_max},
            {"k", s.effective_k_users()},
            {"fixed-a", s.fixed_a}};
}

std::string default_out_dir() {
    const char* env = std::getenv(kOutDirEnv);
    return env && *env ? env : ".";
}

int cmd_figure(const FigureArgs& f, std::ostream& out) {
    f.spec.validate();
    const fs::path dir = f.out_dir.empty() ? fs::path(default_out_dir()) : fs::path(f.out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());

    const figures::Table table = figures::compute_figure(f.spec);
    const std::string stem = "fig" + std::to_string(f.spec.id);
    const fs::path csv = dir / figures::csv_name(f.spec.id);
    write_file(csv, figures::to_csv(table));
    std::vector<std::string> paths{csv.string()};
    if (f.plot) {
        const fs::path script = dir / (stem + "_plot.py");
        write_file(script, figures::plot_script(f.spec.id, figures::csv_name(f.spec.id), table));
        paths.push_back(script.string());
    }
    const fs::path manifest = dir / (stem + "_manifest.json");
    paths.push_back(manifest.string());
    const json m = {{"command", "figure"},
                    {"config", figure_config_echo(f.spec)},
                    {"tool_version", tool_version()},
                    {"timestamp", utc_timestamp()},
                    {"output_paths", paths}};
    write_file(manifest, m.dump(2) + "\n");
    for (const auto& p : paths) out << p << '\n';
    return kOk;
}

// multiuser ----------------------------------------------------------------

struct MultiuserArgs {
    XiArgs xi;
    std::optional<int> k;
    std::vector<double> gains;
    bool random = false;
    std::uint64_t seed = 1;
    double beta = 1.0;
    std::string format = "text";
};

int cmd_multiuser(const MultiuserArgs& m, std::ostream& out) {
    const double xi = m.xi.linear();
    detail::require_positive(xi, "xi");
    std::vector<double> gains = m.gains;
    if (m.random) {
        if (!gains.empty()) throw UsageError("--gains and --random are mutually exclusive");
        if (!m.k) throw UsageError("--random needs --k");
        if (*m.k < 1) detail::domain_fail("k must be >= 1, got " + std::to_string(*m.k));
        detail::require_positive(m.beta, "beta");
        const auto key = rng::StreamKey::derive(m.seed, static_cast<std::uint64_t>(mcsim::Scenario::multiuser),
                                                0, static_cast<std::uint64_t>(*m.k));
        rng::TrialStream stream(key, 0);
        for (int i = 0; i < *m.k; ++i) gains.push_back(stream.exponential(m.beta));
    } else {
        if (gains.empty()) throw UsageError("one of --gains or --random is required");
        if (m.k && static_cast<std::size_t>(*m.k) != gains.size()) {
            throw UsageError("--k " + std::to_string(*m.k) + " does not match " + std::to_string(gains.size()) +
                             " gains");
        }
    }
    for (double g : gains) detail::require_positive(g, "gain");
    const multiuser::ChannelSet ch(gains, m.beta);
    const auto b = multiuser::min_alloc_b(xi, ch);
    const auto a = multiuser::full_alloc_a(xi, ch);
    const auto fb = multiuser::verify_fairness(xi, ch, b);
    const auto fa = multiuser::verify_fairness(xi, ch, a);
    const std::size_t k = ch.size();
    bool b_below_a = true;
    for (std::size_t i = 0; i < k; ++i) b_below_a = b_below_a && b.coeffs[i] <= a.coeffs[i];
    const bool sum_ok = a.total() <= 1.0 + 1e-12;
    std::optional<double> two_user_a_sup;
    if (k == 2) {
        two_user_a_sup = twouser::fair_region(xi, ChannelPair(ch.gain(0), ch.gain(1))).a_sup;
    }

    if (m.format == "json") {
        json j = {{"k", k}, {"xi", xi}, {"xi_db", linear_to_db(xi)}, {"gains", std::vector<double>(ch.gains().begin(), ch.gains().end())},
                  {"input_index", ch.input_index()}, {"b", b.coeffs}, {"a", a.coeffs},
                  {"sum_b", b.total()}, {"sum_a", a.total()}, {"residual", a.residual},
                  {"c_oma", fa.oma}, {"c_noma_b", fb.noma}, {"c_noma_a", fa.noma},
                  {"slack_b", fb.slack}, {"slack_a", fa.slack},
                  {"sum_a_le_1", sum_ok}, {"b_le_a", b_below_a}};
        if (two_user_a_sup) {
            j["two_user_a_sup"] = *two_user_a_sup;
            j["one_minus_a1"] = 1.0 - a.coeffs[0];
        }
        out << j.dump(2) << '\n';
        return kOk;
    }
    out << "K = " << k << ", " << m.xi.echo() << '\n';
    out << "user,gain,input_index,b,a,c_oma,c_noma_b,c_noma_a,slack_b,slack_a\n";
    for (std::size_t i = 0; i < k; ++i) {
        out << i << ',' << fmt(ch.gain(i), 17) << ',' << ch.input_index()[i] << ',' << fmt(b.coeffs[i], 17) << ','
            << fmt(a.coeffs[i], 17) << ',' << fmt(fa.oma[i], 17) << ',' << fmt(fb.noma[i], 17) << ','
            << fmt(fa.noma[i], 17) << ',' << fmt(fb.slack[i], 17) << ',' << fmt(fa.slack[i], 17) << '\n';
    }
    out << "sum_b = " << fmt(b.total(), 17) << '\n';
    out << "sum_a = " << fmt(a.total(), 17) << '\n';
    out << "residual = " << fmt(a.residual, 17) << '\n';
    out << "check sum_a <= 1: " << (sum_ok ? "ok" : "FAILED") << '\n';
    out << "check b_k <= a_k: " << (b_below_a ? "ok" : "FAILED") << '\n';
    if (two_user_a_sup) {
        out << "one_minus_a1 = " << fmt(1.0 - a.coeffs[0], 17) << '\n';
        out << "two_user_a_sup = " << fmt(*two_user_a_sup, 17) << '\n';
    }
    return kOk;
}

// single-value helpers -----------------------------------------------------

int cmd_ergodic(const XiArgs& x, double beta, std::ostream& out) {
    const SystemParams p{x.linear(), beta, 0.0};
    p.validate();
    const auto cf = ergodic::ergodic_curve_point(p);
    const auto hi = ergodic::high_snr_ergodic(p);
    out << x.echo() << ", beta = " << fmt(beta) << '\n';
    out << "e_c1_oma = " << fmt(cf.e_c1_oma, 17) << '\n';
    out << "e_c2_oma = " << fmt(cf.e_c2_oma, 17) << '\n';
    out << "e_s_oma = " << fmt(cf.e_s_oma, 17) << '\n';
    out << "e_c1_noma_ainf = " << fmt(cf.e_c1_noma_ainf, 17) << '\n';
    out << "e_c2_noma_asup = " << fmt(cf.e_c2_noma_asup, 17) << '\n';
    out << "gain_ainf = " << fmt(ergodic::expected_gain(p, ergodic::RegionEnd::inf), 17) << '\n';
    out << "gain_asup = " << fmt(ergodic::expected_gain(p, ergodic::RegionEnd::sup), 17) << '\n';
    out << "approx_c1_ainf = " << fmt(hi.c1_ainf, 17) << '\n';
    out << "approx_c2_asup = " << fmt(hi.c2_asup, 17) << '\n';
    return kOk;
}

int cmd_outage(const XiArgs& x, double beta, double r0, std::ostream& out) {
    const SystemParams p{x.linear(), beta, r0};
    p.validate();
    const auto o = outage::outage_point(p);
    out << x.echo() << ", beta = " << fmt(beta) << ", r0 = " << fmt(r0) << '\n';
    out << "p_oma_weak = " << fmt(o.p_oma_weak, 17) << '\n';
    out << "p_oma_strong = " << fmt(o.p_oma_strong, 17) << '\n';
    out << "p_noma_weak_ainf = " << fmt(o.p_noma_weak_ainf, 17) << '\n';
    out << "p_noma_strong_asup = " << fmt(o.p_noma_strong_asup, 17) << '\n';
    return kOk;
}

int cmd_pairing(const XiArgs& x, int k, double beta, std::ostream& out) {
    const SystemParams p{x.linear(), beta, 0.0};
    p.validate();
    const auto g = pairing::expected_gain_asup(k);
    out << "K = " << k << ", " << x.echo() << ", beta = " << fmt(beta) << '\n';
    out << "gain_asup = " << fmt(g.value, 17) << " ("
        << (g.path == pairing::GainPath::alternating_sum ? "alternating sum" : "quadrature") << ")\n";
    if (k >= 2) out << "gain_ainf_approx = " << fmt(pairing::expected_gain_ainf_approx(k, p), 17) << '\n';
    return kOk;
}

}  // namespace

std::string tool_version() { return std::string("fairnoma ") + FAIRNOMA_VERSION; }

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fair power allocation for two-user and K-user NOMA downlinks", "fairnoma"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version());

    RegionArgs region;
    auto* sub_region = app.add_subcommand("region", "fair power region for one channel pair");
    region.xi.add(sub_region);
    sub_region->add_option("--g1", region.g1, "gain of the weaker user")->required();
    sub_region->add_option("--g2", region.g2, "gain of the stronger user")->required();
    add_format(sub_region, region.format);

    FigureArgs fig;
    auto* sub_fig = app.add_subcommand("figure", "write figure data as CSV with a run manifest");
    sub_fig->add_option("figure,--figure", fig.spec.id, "figure number 1..6")->required();
    sub_fig->add_option("--trials", fig.spec.trials, "Monte Carlo trials per grid point");
    sub_fig->add_option("--tail-trials", fig.spec.tail_trials, "trials at the two highest SNR points of figure 2");
    sub_fig->add_option("--seed", fig.spec.seed);
    sub_fig->add_option("--workers", fig.spec.workers, "worker threads, 0 for all cores");
    sub_fig->add_option("--beta", fig.spec.beta, "mean channel gain");
    sub_fig->add_option("--r0", fig.spec.r0, "target rate for figure 2");
    sub_fig->add_option("--xi-db-min", fig.spec.xi_db_min);
    sub_fig->add_option("--xi-db-max", fig.spec.xi_db_max);
    sub_fig->add_option("--xi-db-step", fig.spec.xi_db_step);
    sub_fig->add_option("--k-xi-db", fig.spec.k_xi_db, "SNR for the K sweeps of figures 3 and 5");
    sub_fig->add_option("--k-min", fig.spec.k_min);
    sub_fig->add_option("--k-max", fig.spec.k_max);
    sub_fig->add_option("--k", fig.spec.k_users, "users for figures 4 and 6");
    sub_fig->add_option("--fixed-a", fig.spec.fixed_a, "fixed power fraction for figures 4 and 5");
    sub_fig->add_option("--out-dir", fig.out_dir, std::string("output directory, default $") + kOutDirEnv);
    sub_fig->add_flag("--plot", fig.plot, "also write a matplotlib script");

    MultiuserArgs mu;
    auto* sub_mu = app.add_subcommand("multiuser", "K-user b-vector and a-vector");
    mu.xi.add(sub_mu);
    sub_mu->add_option("--k", mu.k, "number of users");
    sub_mu->add_option("--gains", mu.gains, "channel gains")->delimiter(',');
    sub_mu->add_flag("--random", mu.random, "draw exponential gains");
    sub_mu->add_option("--seed", mu.seed);
    sub_mu->add_option("--beta", mu.beta, "mean gain for --random");
    add_format(sub_mu, mu.format);

    XiArgs erg_xi;
    double erg_beta = 1.0;
    auto* sub_erg = app.add_subcommand("ergodic", "ergodic capacities");
    erg_xi.add(sub_erg);
    sub_erg->add_option("--beta", erg_beta);

    XiArgs out_xi;
    double out_beta = 1.0, out_r0 = 2.0;
    auto* sub_out = app.add_subcommand("outage", "outage probabilities");
    out_xi.add(sub_out);
    sub_out->add_option("--beta", out_beta);
    sub_out->add_option("--r0", out_r0);

    XiArgs pair_xi;
    double pair_beta = 1.0;
    int pair_k = 2;
    auto* sub_pair = app.add_subcommand("pairing", "min/max pairing gain over OMA");
    pair_xi.add(sub_pair);
    sub_pair->add_option("--k", pair_k)->required();
    sub_pair->add_option("--beta", pair_beta);

    try {
        std::vector<std::string> args = expand_config(raw_args);
        std::reverse(args.begin(), args.end());
        app.parse(args);
        if (*sub_region) return cmd_region(region, out, err);
        if (*sub_fig) return cmd_figure(fig, out);
        if (*sub_mu) return cmd_multiuser(mu, out);
        if (*sub_erg) return cmd_ergodic(erg_xi, erg_beta, out);
        if (*sub_out) return cmd_outage(out_xi, out_beta, out_r0, out);
        if (*sub_pair) return cmd_pairing(pair_xi, pair_k, pair_beta, out);
        return kUsageError;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << tool_version() << '\n';
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const std::ios_base::failure& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, out, err);
}

}  // namespace fairnoma::cli
