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

// Special functions used by the closed-form capacity and outage expressions.
// Everything here is dependency-free and thread-safe.

namespace fairnoma::specfun {

/// Euler-Mascheroni constant to 20 significant digits.
inline constexpr double kEulerGamma = 0.57721566490153286061;

struct SpecFunResult {
    double value = 0.0;
    double est_rel_error = 0.0;
};

/// Exponential integral E1(x) = int_x^inf e^{-u}/u du, x > 0.
/// Power series below 1, continued fraction above.
double exp_integral_e1(double x);
SpecFunResult exp_integral_e1_checked(double x);

/// e^x E1(x). Stays finite where E1 underflows; every closed form in this
/// library that multiplies E1(y) by e^y goes through this entry point.
double exp_integral_e1_scaled(double x);

/// Complementary error function, relative error below 1e-12 on the real line
/// (until erfc itself underflows near z = 26.5).
double erfc(double z);
SpecFunResult erfc_checked(double z);

double erf(double z);

/// Scaled complementary error function e^{z^2} erfc(z), for z >= 0.
double erfcx(double z);

/// Digamma psi(w) = Gamma'(w)/Gamma(w), w > 0.
double digamma(double w);
SpecFunResult digamma_checked(double w);

/// H_k = 1 + 1/2 + ... + 1/k; H_0 = 0.
double harmonic_number(int k);

}  // namespace fairnoma::specfun
