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

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

// Deterministic parallel trial loop. Trials are grouped into fixed-size
// blocks; each block is reduced in trial order and blocks are merged in block
// order, so the result does not depend on how many workers ran.

namespace fairnoma::mcsim {

/// Welford accumulator with Chan's pairwise merge.
struct RunningStats {
    std::uint64_t count = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) noexcept {
        ++count;
        const double delta = x - mean;
        mean += delta / static_cast<double>(count);
        m2 += delta * (x - mean);
    }

    void merge(const RunningStats& o) noexcept {
        if (o.count == 0) return;
        if (count == 0) {
            *this = o;
            return;
        }
        const double n1 = static_cast<double>(count);
        const double n2 = static_cast<double>(o.count);
        const double n = n1 + n2;
        const double delta = o.mean - mean;
        mean += delta * n2 / n;
        m2 += o.m2 + delta * delta * n1 * n2 / n;
        count += o.count;
    }

    double sample_variance() const noexcept {
        return count > 1 ? m2 / static_cast<double>(count - 1) : 0.0;
    }
};

/// Monte Carlo estimate of one quantity.
struct SimResult {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;

    /// |mean - reference| within k standard errors.
    bool agrees_with(double reference, double k = 3.0) const noexcept {
        return std::fabs(mean - reference) <= k * std_error;
    }
};

inline SimResult to_result(const RunningStats& s, std::uint64_t seed) noexcept {
    const double se =
        s.count > 0 ? std::sqrt(s.sample_variance() / static_cast<double>(s.count)) : 0.0;
    return {s.mean, se, s.count, seed};
}

inline constexpr std::uint64_t kBlockTrials = 4096;

/// Stream families; part of every stream key so scenarios never share draws.
enum class Scenario : std::uint8_t { pair_iid = 0, pair_minmax = 1, multiuser = 2 };

inline unsigned resolve_workers(unsigned requested) noexcept {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

/// Runs `fn(trial, values)` for every trial in [0, trials) and accumulates
/// the N values it writes.
template <std::size_t N, class TrialFn>
std::array<RunningStats, N> run_trials(std::uint64_t trials, unsigned workers, TrialFn&& fn) {
    using Block = std::array<RunningStats, N>;
    const std::uint64_t blocks = (trials + kBlockTrials - 1) / kBlockTrials;
    std::vector<Block> partial(blocks);

    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto work = [&] {
        try {
            std::array<double, N> values{};
            for (std::uint64_t b = next++; b < blocks; b = next++) {
                Block& acc = partial[b];
                const std::uint64_t begin = b * kBlockTrials;
                const std::uint64_t end = std::min(trials, begin + kBlockTrials);
                for (std::uint64_t t = begin; t < end; ++t) {
                    fn(t, values);
                    for (std::size_t i = 0; i < N; ++i) acc[i].add(values[i]);
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = blocks;
        }
    };

    const unsigned n_workers =
        static_cast<unsigned>(std::min<std::uint64_t>(resolve_workers(workers), std::max<std::uint64_t>(blocks, 1)));
    if (n_workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_workers);
        for (unsigned w = 0; w < n_workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    Block total{};
    for (const Block& b : partial) {
        for (std::size_t i = 0; i < N; ++i) total[i].merge(b[i]);
    }
    return total;
}

}  // namespace fairnoma::mcsim
