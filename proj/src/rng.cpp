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

#include "fairnoma/rng.hpp"

#include <cmath>

namespace fairnoma::rng {
namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

}  // namespace

Philox4x32::Counter Philox4x32::generate(Counter ctr, Key key) noexcept {
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            key[0] += kWeyl0;
            key[1] += kWeyl1;
        }
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kMul0, ctr[0], hi0, lo0);
        mulhilo(kMul1, ctr[2], hi1, lo1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
}

std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

StreamKey StreamKey::derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                            std::uint64_t c) noexcept {
    std::uint64_t h = mix64(seed);
    h = mix64(h ^ a);
    h = mix64(h ^ b);
    h = mix64(h ^ c);
    return {h};
}

TrialStream::TrialStream(StreamKey key, std::uint64_t trial) noexcept
    : key_{static_cast<std::uint32_t>(key.value), static_cast<std::uint32_t>(key.value >> 32)},
      trial_(trial) {}

void TrialStream::refill() noexcept {
    const Philox4x32::Counter ctr = {
        static_cast<std::uint32_t>(trial_), static_cast<std::uint32_t>(trial_ >> 32),
        static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32)};
    const Philox4x32::Counter out = Philox4x32::generate(ctr, key_);
    ++block_;
    buffer_[0] = (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
    buffer_[1] = (static_cast<std::uint64_t>(out[2]) << 32) | out[3];
    available_ = 2;
}

double TrialStream::uniform() noexcept {
    if (available_ == 0) {
        refill();
    }
    const std::uint64_t bits = buffer_[2 - available_];
    --available_;
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

double TrialStream::exponential(double mean) noexcept {
    return -mean * std::log1p(-uniform());
}

}  // namespace fairnoma::rng
