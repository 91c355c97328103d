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

#include "fairnoma/multiuser.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "fairnoma/error.hpp"

namespace fairnoma::multiuser {
namespace {

void check_user(const ChannelSet& ch, std::size_t user) {
    if (user >= ch.size()) {
        throw std::out_of_range("user index " + std::to_string(user) + " out of range for K = " +
                                std::to_string(ch.size()));
    }
}

// (1 + y)^{1/K} - 1 and (1 + y)^{1/K}, through ln(1 + y).
struct Root {
    double minus_one;
    double value;
};

Root kth_root(double y, double k) {
    const double l = std::log1p(y) / k;
    return {std::expm1(l), std::exp(l)};
}

}  // namespace

ChannelSet::ChannelSet(std::vector<double> gains, double beta) : beta_(beta) {
    if (gains.empty()) {
        detail::domain_fail("channel set must contain at least one user");
    }
    detail::require_positive(beta, "beta");
    for (double g : gains) {
        if (!(g > 0.0) || !std::isfinite(g)) {
            detail::domain_fail("channel gains must be finite and > 0, got " + std::to_string(g));
        }
    }
    input_index_.resize(gains.size());
    std::iota(input_index_.begin(), input_index_.end(), std::size_t{0});
    std::stable_sort(input_index_.begin(), input_index_.end(),
                     [&](std::size_t a, std::size_t b) { return gains[a] < gains[b]; });
    gains_.reserve(gains.size());
    for (std::size_t i : input_index_) gains_.push_back(gains[i]);
}

double ChannelSet::gain(std::size_t user) const {
    check_user(*this, user);
    return gains_[user];
}

double AllocationVector::total() const noexcept {
    return std::accumulate(coeffs.begin(), coeffs.end(), 0.0);
}

double oma_capacity_k(double xi, const ChannelSet& channels, std::size_t user) {
    detail::require_positive(xi, "xi");
    const double g = channels.gain(user);
    return std::log1p(xi * g) / (static_cast<double>(channels.size()) * std::numbers::ln2);
}

double noma_capacity_k(double xi, const ChannelSet& channels, std::span<const double> coeffs,
                       std::size_t user) {
    detail::require_positive(xi, "xi");
    if (coeffs.size() != channels.size()) {
        detail::domain_fail("coefficient count does not match the number of users");
    }
    const double y = xi * channels.gain(user);
    double interference = 0.0;
    for (std::size_t l = user + 1; l < coeffs.size(); ++l) interference += coeffs[l];
    return std::log1p(coeffs[user] * y / (1.0 + y * interference)) / std::numbers::ln2;
}

AllocationVector min_alloc_b(double xi, const ChannelSet& channels) {
    detail::require_positive(xi, "xi");
    const std::size_t n = channels.size();
    const double k = static_cast<double>(n);
    AllocationVector out;
    out.kind = AllocationKind::b_min;
    out.coeffs.assign(n, 0.0);
    double above = 0.0;  // sum of coefficients of stronger users
    for (std::size_t i = n; i-- > 0;) {
        const double y = xi * channels.gain(i);
        const Root r = kth_root(y, k);
        out.coeffs[i] = r.minus_one * (1.0 + y * above) / y;
        above += out.coeffs[i];
    }
    out.residual = 1.0 - above;
    return out;
}

AllocationVector full_alloc_a(double xi, const ChannelSet& channels) {
    detail::require_positive(xi, "xi");
    const std::size_t n = channels.size();
    const double k = static_cast<double>(n);
    AllocationVector out;
    out.kind = AllocationKind::a_full;
    out.coeffs.assign(n, 0.0);

    // Weakest user: everything else is assumed to interfere,
    // (1 + y)^{1/K} = (1 + y) / (1 + y (1 - a_0)).
    const double y0 = xi * channels.gain(0);
    const double l0 = std::log1p(y0);
    double remaining = std::expm1((k - 1.0) / k * l0) / y0;  // A_1
    out.coeffs[0] = std::exp((k - 1.0) / k * l0) * std::expm1(l0 / k) / y0;
    for (std::size_t i = 1; i < n; ++i) {
        const double y = xi * channels.gain(i);
        const Root r = kth_root(y, k);
        const double a = (1.0 + remaining * y) * r.minus_one / (y * r.value);
        out.coeffs[i] = a;
        remaining -= a;
    }
    out.residual = remaining;
    return out;
}

AllocationVector with_residual_to_strongest(AllocationVector alloc) {
    if (!alloc.coeffs.empty()) {
        alloc.coeffs.back() += alloc.residual;
        alloc.residual = 0.0;
    }
    return alloc;
}

InterferenceLadder interference_ladder(const AllocationVector& alloc) {
    InterferenceLadder ladder;
    ladder.levels.reserve(alloc.coeffs.size() + 1);
    double level = 1.0;
    ladder.levels.push_back(level);
    for (double c : alloc.coeffs) {
        level -= c;
        ladder.levels.push_back(level);
    }
    return ladder;
}

FairnessReport verify_fairness(double xi, const ChannelSet& channels, const AllocationVector& alloc) {
    const std::size_t n = channels.size();
    FairnessReport rep;
    rep.oma.resize(n);
    rep.noma.resize(n);
    rep.slack.resize(n);
    rep.min_slack = INFINITY;
    for (std::size_t i = 0; i < n; ++i) {
        rep.oma[i] = oma_capacity_k(xi, channels, i);
        rep.noma[i] = noma_capacity_k(xi, channels, alloc.coeffs, i);
        rep.slack[i] = rep.noma[i] - rep.oma[i];
        rep.max_abs_slack = std::max(rep.max_abs_slack, std::fabs(rep.slack[i]));
        rep.min_slack = std::min(rep.min_slack, rep.slack[i]);
    }
    return rep;
}

}  // namespace fairnoma::multiuser
