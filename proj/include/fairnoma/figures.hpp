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

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "fairnoma/twouser.hpp"

namespace fairnoma::figures {

struct FigureSpec {
    int id = 1;
    std::uint64_t trials = 1'000'000;
    std::uint64_t tail_trials = 0;  // figure 2, two highest SNR points; 0 means 10 * trials
    std::uint64_t seed = 1;
    unsigned workers = 0;
    double beta = 1.0;
    double r0 = 2.0;
    double xi_db_min = 0.0;
    double xi_db_max = 60.0;
    double xi_db_step = 2.0;
    double k_xi_db = 50.0;  // figures 3 and 5
    int k_min = 2;
    int k_max = 30;
    int k_users = 0;  // figures 4 and 6; 0 picks 10 and 5
    double fixed_a = 0.2;

    void validate() const;
    int effective_k_users() const noexcept;
    std::uint64_t effective_tail_trials() const noexcept;
};

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

Table compute_figure(const FigureSpec& spec);

/// Comma separated, header row, LF line endings, 17 significant digits.
std::string to_csv(const Table& table);

std::string csv_name(int id);
std::string plot_script(int id, const std::string& csv_file, const Table& table);

}  // namespace fairnoma::figures
