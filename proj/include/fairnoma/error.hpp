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

#include <stdexcept>
#include <string>

namespace fairnoma {

/// Raised when an argument lies outside the mathematical domain of an
/// operation. The message names the offending parameter.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when adaptive quadrature stops before meeting its tolerance.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double achieved_error)
        : std::runtime_error(what + " (achieved error estimate " +
                             std::to_string(achieved_error) + ")"),
          achieved_error_(achieved_error) {}

    double achieved_error() const noexcept { return achieved_error_; }

private:
    double achieved_error_;
};

namespace detail {

[[noreturn]] inline void domain_fail(const std::string& msg) { throw DomainError(msg); }

inline void require_positive(double v, const char* name) {
    if (!(v > 0.0)) {
        domain_fail(std::string(name) + " must be > 0, got " + std::to_string(v));
    }
}

inline void require_nonnegative(double v, const char* name) {
    if (!(v >= 0.0)) {
        domain_fail(std::string(name) + " must be >= 0, got " + std::to_string(v));
    }
}

}  // namespace detail
}  // namespace fairnoma
