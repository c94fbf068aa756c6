// SPDX-License-Identifier: Apache-2.0
//
// chanstat: statistics and synthesis of multipath channel measurements
// Copyright (C) 2026 The chanstat authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef CHANSTAT_SPECIAL_FUNCTIONS_HPP
#define CHANSTAT_SPECIAL_FUNCTIONS_HPP

#include <functional>

namespace chanstat::special
{
    // Regularized lower incomplete gamma P(a, x), a > 0, x >= 0
    double gamma_p(double a, double x);

    // Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x)
    double gamma_q(double a, double x);

    // Inverse of P(a, .) : returns x with P(a, x) = p, 0 < p < 1
    double gamma_p_inv(double a, double p);

    // Regularized incomplete beta I_x(a, b), a > 0, b > 0, 0 <= x <= 1
    double beta_inc(double a, double b, double x);

    // Inverse of I_.(a, b) : returns x in [0, 1] with I_x(a, b) = p
    double beta_inc_inv(double a, double b, double p);

    // Exponentially scaled modified Bessel functions e^{-|x|} I_0(x) and e^{-|x|} I_1(x)
    double bessel_i0e(double x);
    double bessel_i1e(double x);

    // Standard normal CDF and its inverse
    double normal_cdf(double z);
    double normal_quantile(double p);

    // Natural log of the prefactor x^a e^{-x} / Gamma(a), accurate for large a
    double log_gamma_prefactor(double a, double x);

    // Solves cdf(x) = p for a nondecreasing cdf with density pdf on [lower, upper].
    // `guess` seeds a Newton iteration guarded by bisection; the bracket is expanded
    // outward from the guess when the bounds are infinite.
    double invert_monotone(const std::function<double(double)> &cdf,
                           const std::function<double(double)> &pdf,
                           double p, double lower, double upper, double guess);

} // namespace chanstat::special

#endif
