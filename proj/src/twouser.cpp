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

#include "fairnoma/twouser.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fairnoma/error.hpp"

namespace fairnoma {

void SystemParams::validate() const {
    detail::require_positive(xi, "xi");
    detail::require_positive(beta, "beta");
    detail::require_nonnegative(r0, "r0");
    if (!std::isfinite(xi) || !std::isfinite(beta) || !std::isfinite(r0)) {
        detail::domain_fail("system parameters must be finite");
    }
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) {
    detail::require_positive(linear, "linear SNR");
    return 10.0 * std::log10(linear);
}

ChannelPair::ChannelPair(double first, double second)
    : g1_(first), g2_(second), swapped_(false) {
    detail::require_positive(first, "g1");
    detail::require_positive(second, "g2");
    // Ties keep the input order.
    if (second < first) {
        g1_ = second;
        g2_ = first;
        swapped_ = true;
    }
}

APolicy APolicy::fixed(double a) {
    if (!(a > 0.0 && a < 1.0)) {
        detail::domain_fail("fixed power fraction must lie in (0, 1), got " + std::to_string(a));
    }
    return {Kind::fixed, a};
}

APolicy APolicy::parse(std::string_view text) {
    if (text == "inf") return inf();
    if (text == "sup") return sup();
    if (text == "mid") return mid();
    constexpr std::string_view prefix = "fixed:";
    if (text.substr(0, prefix.size()) == prefix) {
        const std::string rest(text.substr(prefix.size()));
        std::size_t used = 0;
        double a = 0.0;
        try {
            a = std::stod(rest, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != rest.size()) {
            detail::domain_fail("cannot parse power fraction in '" + std::string(text) + "'");
        }
        return fixed(a);
    }
    detail::domain_fail("unknown power policy '" + std::string(text) +
                        "' (expected inf, sup, mid or fixed:<a>)");
}

std::string APolicy::name() const {
    switch (kind) {
        case Kind::inf: return "inf";
        case Kind::sup: return "sup";
        case Kind::mid: return "mid";
        case Kind::fixed: {
            char buf[32];
            const auto res = std::to_chars(buf, buf + sizeof buf, value);
            return "fixed:" + std::string(buf, res.ptr);
        }
    }
    return "?";
}

double APolicy::resolve(const FairRegion& region) const noexcept {
    switch (kind) {
        case Kind::inf: return region.a_inf;
        case Kind::sup: return region.a_sup;
        case Kind::mid: return region.mid();
        case Kind::fixed: return value;
    }
    return region.a_sup;
}

namespace twouser {
namespace {

void check_fraction(double a) {
    if (!(a >= 0.0 && a <= 1.0)) {
        detail::domain_fail("power fraction a must lie in [0, 1], got " + std::to_string(a));
    }
}

}  // namespace

double oma_capacity(double xi, double g) {
    detail::require_positive(xi, "xi");
    detail::require_positive(g, "g");
    return 0.5 * std::log1p(xi * g) / std::numbers::ln2;
}

double noma_capacity_weak(double xi, double g1, double a) {
    detail::require_positive(xi, "xi");
    detail::require_positive(g1, "g1");
    check_fraction(a);
    const double y = xi * g1;
    return std::log1p((1.0 - a) * y / (a * y + 1.0)) / std::numbers::ln2;
}

double noma_capacity_strong(double xi, double g2, double a) {
    detail::require_positive(xi, "xi");
    detail::require_positive(g2, "g2");
    check_fraction(a);
    return std::log1p(a * xi * g2) / std::numbers::ln2;
}

double allocation_bound(double xi, double x) {
    detail::require_positive(xi, "xi");
    detail::require_positive(x, "x");
    return 1.0 / (std::sqrt(1.0 + xi * x) + 1.0);
}

FairRegion fair_region(double xi, const ChannelPair& ch) {
    return {allocation_bound(xi, ch.g2()), allocation_bound(xi, ch.g1())};
}

FairRegion fair_region(const SystemParams& params, const ChannelPair& ch) {
    params.validate();
    return fair_region(params.xi, ch);
}

double sum_rate(double xi, const ChannelPair& ch, double a) {
    return noma_capacity_weak(xi, ch.g1(), a) + noma_capacity_strong(xi, ch.g2(), a);
}

double sum_rate_oma(double xi, const ChannelPair& ch) {
    return oma_capacity(xi, ch.g1()) + oma_capacity(xi, ch.g2());
}

HighSnrCapacities high_snr_capacities(double xi, const ChannelPair& ch) {
    detail::require_positive(xi, "xi");
    const double l2 = std::numbers::ln2;
    HighSnrCapacities c;
    c.c1_oma = 0.5 * std::log(xi * ch.g1()) / l2;
    c.c2_oma = 0.5 * std::log(xi * ch.g2()) / l2;
    c.c1_ainf = c.c2_oma;
    c.c2_asup = (0.5 * std::log(xi / ch.g1()) + std::log(ch.g2())) / l2;
    return c;
}

}  // namespace twouser
}  // namespace fairnoma
