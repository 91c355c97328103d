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

#include <cstddef>
#include <span>
#include <vector>

// K-user downlink NOMA with successive interference cancellation. Users are
// indexed 0..K-1 from weakest to strongest channel; user k decodes and
// removes the signals of users 0..k-1 and sees users k+1..K-1 as noise.

namespace fairnoma::multiuser {

/// Channel gains sorted ascending. Equal gains keep their input order.
class ChannelSet {
public:
    explicit ChannelSet(std::vector<double> gains, double beta = 1.0);

    std::size_t size() const noexcept { return gains_.size(); }
    std::span<const double> gains() const noexcept { return gains_; }
    double gain(std::size_t user) const;
    double beta() const noexcept { return beta_; }
    /// Input position of each sorted user.
    const std::vector<std::size_t>& input_index() const noexcept { return input_index_; }

private:
    std::vector<double> gains_;
    std::vector<std::size_t> input_index_;
    double beta_;
};

enum class AllocationKind { b_min, a_full };

/// Power fractions per user plus whatever is left unallocated.
struct AllocationVector {
    std::vector<double> coeffs;
    double residual = 0.0;
    AllocationKind kind = AllocationKind::b_min;

    double total() const noexcept;
};

/// A_0 = 1, A_k = 1 - (a_0 + ... + a_{k-1}) for the a-vector; size K + 1.
struct InterferenceLadder {
    std::vector<double> levels;
};

double oma_capacity_k(double xi, const ChannelSet& channels, std::size_t user);

/// log2(1 + c_k xi g_k / (1 + xi g_k sum_{l>k} c_l)).
double noma_capacity_k(double xi, const ChannelSet& channels, std::span<const double> coeffs,
                       std::size_t user);

/// Smallest coefficients giving every user exactly its OMA capacity, solved
/// from the strongest user down.
AllocationVector min_alloc_b(double xi, const ChannelSet& channels);

/// Coefficients solved from the weakest user up, each assuming everything
/// not yet allocated interferes. The sum stays at or below one; the
/// remainder is reported as `residual`.
AllocationVector full_alloc_a(double xi, const ChannelSet& channels);

/// Moves the residual onto the strongest user, who sees no interference.
AllocationVector with_residual_to_strongest(AllocationVector alloc);

InterferenceLadder interference_ladder(const AllocationVector& alloc);

struct FairnessReport {
    std::vector<double> oma;
    std::vector<double> noma;
    std::vector<double> slack;  // noma - oma, per user
    double max_abs_slack = 0.0;
    double min_slack = 0.0;
};

/// Recomputes every user's NOMA capacity under the interference the
/// allocation actually produces and compares with OMA.
FairnessReport verify_fairness(double xi, const ChannelSet& channels, const AllocationVector& alloc);

}  // namespace fairnoma::multiuser
