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

#include <array>
#include <cstdint>

// Counter-based random numbers. A draw is a pure function of
// (key, trial index, draw index), so any partitioning of trials across
// threads reproduces the same sample path.

namespace fairnoma::rng {

/// Philox4x32 with 10 rounds.
struct Philox4x32 {
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static Counter generate(Counter ctr, Key key) noexcept;
};

/// SplitMix64 finaliser; used to fold stream coordinates into a key.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Key identifying one independent stream, derived from the run seed and
/// whatever coordinates (scenario, grid index, population size) separate it
/// from its neighbours.
struct StreamKey {
    std::uint64_t value = 0;

    static StreamKey derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                            std::uint64_t c = 0) noexcept;
};

/// Draws for a single trial. Cheap to construct; keep one per trial.
class TrialStream {
public:
    TrialStream(StreamKey key, std::uint64_t trial) noexcept;

    /// Uniform on the open interval (0, 1): 53 random bits, offset by half a
    /// step so neither endpoint occurs.
    double uniform() noexcept;

    /// Exponential with the given mean, by inversion: -mean ln(1 - u).
    /// Always strictly positive.
    double exponential(double mean) noexcept;

private:
    void refill() noexcept;

    Philox4x32::Key key_;
    std::uint64_t trial_;
    std::uint64_t block_ = 0;
    std::array<std::uint64_t, 2> buffer_{};
    int available_ = 0;
};

}  // namespace fairnoma::rng
