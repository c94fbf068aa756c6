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

#include "chanstat/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace chanstat::special
{
    namespace
    {
        constexpr double kEps = std::numeric_limits<double>::epsilon();
        constexpr double kTiny = 1.0e-300;
        constexpr int kMaxIterations = 100000;

        // lnGamma(a) - Stirling approximation, valid for a >= 10
        double stirling_error(double a)
        {
            const double r = 1.0 / a;
            const double r2 = r * r;
            return r * (1.0 / 12.0 - r2 * (1.0 / 360.0 - r2 * (1.0 / 1260.0 - r2 * (1.0 / 1680.0 - r2 / 1188.0))));
        }

        // Series for P(a, x), converges for x < a + 1
        double gamma_p_series(double a, double x)
        {
            double ap = a;
            double term = 1.0 / a;
            double sum = term;
            for (int n = 0; n < kMaxIterations; ++n)
            {
                ap += 1.0;
                term *= x / ap;
                sum += term;
                if (std::abs(term) < std::abs(sum) * kEps)
                    break;
            }
            return sum * std::exp(log_gamma_prefactor(a, x));
        }

        // Continued fraction for Q(a, x) (modified Lentz), converges for x >= a + 1
        double gamma_q_fraction(double a, double x)
        {
            double b = x + 1.0 - a;
            double c = 1.0 / kTiny;
            double d = 1.0 / b;
            double h = d;
            for (int i = 1; i < kMaxIterations; ++i)
            {
                const double an = -i * (i - a);
                b += 2.0;
                d = an * d + b;
                if (std::abs(d) < kTiny)
                    d = kTiny;
                c = b + an / c;
                if (std::abs(c) < kTiny)
                    c = kTiny;
                d = 1.0 / d;
                const double delta = d * c;
                h *= delta;
                if (std::abs(delta - 1.0) < kEps)
                    break;
            }
            return std::exp(log_gamma_prefactor(a, x)) * h;
        }

        // Continued fraction for the incomplete beta function (modified Lentz)
        double beta_fraction(double a, double b, double x)
        {
            const double qab = a + b;
            const double qap = a + 1.0;
            const double qam = a - 1.0;
            double c = 1.0;
            double d = 1.0 - qab * x / qap;
            if (std::abs(d) < kTiny)
                d = kTiny;
            d = 1.0 / d;
            double h = d;
            for (int m = 1; m < kMaxIterations; ++m)
            {
                const double m2 = 2.0 * m;
                double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
                d = 1.0 + aa * d;
                if (std::abs(d) < kTiny)
                    d = kTiny;
                c = 1.0 + aa / c;
                if (std::abs(c) < kTiny)
                    c = kTiny;
                d = 1.0 / d;
                h *= d * c;
                aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
                d = 1.0 + aa * d;
                if (std::abs(d) < kTiny)
                    d = kTiny;
                c = 1.0 + aa / c;
                if (std::abs(c) < kTiny)
                    c = kTiny;
                d = 1.0 / d;
                const double delta = d * c;
                h *= delta;
                if (std::abs(delta - 1.0) < kEps)
                    break;
            }
            return h;
        }

        // Large-argument expansion of e^{-x} I_nu(x) for nu in {0, 1}
        double bessel_ie_asymptotic(int nu, double x)
        {
            const double mu = 4.0 * nu * nu;
            double term = 1.0;
            double sum = 1.0;
            for (int k = 1; k < 200; ++k)
            {
                const double odd = 2.0 * k - 1.0;
                const double next = -term * (mu - odd * odd) / (8.0 * k * x);
                if (std::abs(next) >= std::abs(term))
                    break;
                term = next;
                sum += term;
                if (std::abs(term) < kEps * std::abs(sum))
                    break;
            }
            return sum / std::sqrt(2.0 * std::numbers::pi * x);
        }

        constexpr double kBesselSeriesLimit = 20.0;
    } // namespace

    double log_gamma_prefactor(double a, double x)
    {
        if (x == 0.0)
            return -std::numeric_limits<double>::infinity();
        if (a < 10.0)
            return a * std::log(x) - x - std::lgamma(a);
        // a ln(x/a) - (x - a), via log1p only near x = a where it avoids cancellation
        const double u = (x - a) / a;
        const double core = std::abs(u) < 0.5 ? std::log1p(u) - u : std::log(x / a) - u;
        return a * core + 0.5 * std::log(a / (2.0 * std::numbers::pi)) - stirling_error(a);
    }

    double gamma_p(double a, double x)
    {
        if (!(a > 0.0) || x < 0.0 || std::isnan(x))
            throw std::invalid_argument("gamma_p requires a > 0 and x >= 0.");
        if (x == 0.0)
            return 0.0;
        if (std::isinf(x))
            return 1.0;
        if (x < a + 1.0)
            return std::min(1.0, gamma_p_series(a, x));
        return std::max(0.0, 1.0 - gamma_q_fraction(a, x));
    }

    double gamma_q(double a, double x)
    {
        if (!(a > 0.0) || x < 0.0 || std::isnan(x))
            throw std::invalid_argument("gamma_q requires a > 0 and x >= 0.");
        if (x == 0.0)
            return 1.0;
        if (std::isinf(x))
            return 0.0;
        if (x < a + 1.0)
            return std::max(0.0, 1.0 - gamma_p_series(a, x));
        return std::min(1.0, gamma_q_fraction(a, x));
    }

    double gamma_p_inv(double a, double p)
    {
        if (!(a > 0.0))
            throw std::invalid_argument("gamma_p_inv requires a > 0.");
        if (!(p > 0.0 && p < 1.0))
            throw std::invalid_argument("gamma_p_inv requires 0 < p < 1.");

        // Wilson-Hilferty starting point, or the small-x power law for small a
        double guess;
        if (a >= 1.0)
        {
            const double z = normal_quantile(p);
            const double t = 1.0 - 1.0 / (9.0 * a) + z / (3.0 * std::sqrt(a));
            guess = a * t * t * t;
            if (!(guess > 0.0))
                guess = std::exp((std::log(p) + std::lgamma(a + 1.0)) / a);
        }
        else
            guess = std::exp((std::log(p) + std::lgamma(a + 1.0)) / a);
        if (!(guess > 0.0) || !std::isfinite(guess))
            guess = a;

        const auto cdf = [a](double x)
        { return gamma_p(a, x); };
        const auto pdf = [a](double x)
        { return x > 0.0 ? std::exp(log_gamma_prefactor(a, x)) / x : 0.0; };
        return invert_monotone(cdf, pdf, p, 0.0, std::numeric_limits<double>::infinity(), guess);
    }

    double beta_inc(double a, double b, double x)
    {
        if (!(a > 0.0) || !(b > 0.0))
            throw std::invalid_argument("beta_inc requires a > 0 and b > 0.");
        if (!(x >= 0.0 && x <= 1.0))
            throw std::invalid_argument("beta_inc requires 0 <= x <= 1.");
        if (x == 0.0)
            return 0.0;
        if (x == 1.0)
            return 1.0;

        const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) + b * std::log1p(-x);
        const double front = std::exp(log_front);
        if (x < (a + 1.0) / (a + b + 2.0))
            return std::clamp(front * beta_fraction(a, b, x) / a, 0.0, 1.0);
        return std::clamp(1.0 - front * beta_fraction(b, a, 1.0 - x) / b, 0.0, 1.0);
    }

    double beta_inc_inv(double a, double b, double p)
    {
        if (!(a > 0.0) || !(b > 0.0))
            throw std::invalid_argument("beta_inc_inv requires a > 0 and b > 0.");
        if (!(p > 0.0 && p < 1.0))
            throw std::invalid_argument("beta_inc_inv requires 0 < p < 1.");

        const double log_beta = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
        const auto cdf = [a, b](double x)
        { return beta_inc(a, b, x); };
        const auto pdf = [a, b, log_beta](double x)
        {
            if (x <= 0.0 || x >= 1.0)
                return 0.0;
            return std::exp((a - 1.0) * std::log(x) + (b - 1.0) * std::log1p(-x) - log_beta);
        };
        const double mean = a / (a + b);
        return invert_monotone(cdf, pdf, p, 0.0, 1.0, mean);
    }

    double bessel_i0e(double x)
    {
        const double ax = std::abs(x);
        if (ax > kBesselSeriesLimit)
            return bessel_ie_asymptotic(0, ax);

        // I_0(x) = sum_k (x^2/4)^k / (k!)^2
        const double q = 0.25 * ax * ax;
        double term = 1.0;
        double sum = 1.0;
        for (int k = 1; k < 500; ++k)
        {
            term *= q / (static_cast<double>(k) * k);
            sum += term;
            if (term < kEps * sum)
                break;
        }
        return sum * std::exp(-ax);
    }

    double bessel_i1e(double x)
    {
        const double ax = std::abs(x);
        double value;
        if (ax > kBesselSeriesLimit)
            value = bessel_ie_asymptotic(1, ax);
        else
        {
            // I_1(x) = (x/2) sum_k (x^2/4)^k / (k! (k+1)!)
            const double q = 0.25 * ax * ax;
            double term = 1.0;
            double sum = 1.0;
            for (int k = 1; k < 500; ++k)
            {
                term *= q / (static_cast<double>(k) * (k + 1));
                sum += term;
                if (term < kEps * sum)
                    break;
            }
            value = 0.5 * ax * sum * std::exp(-ax);
        }
        return x < 0.0 ? -value : value;
    }

    double normal_cdf(double z)
    {
        return 0.5 * std::erfc(-z / std::numbers::sqrt2);
    }

    double normal_quantile(double p)
    {
        if (!(p > 0.0 && p < 1.0))
            throw std::invalid_argument("normal_quantile requires 0 < p < 1.");

        // Acklam's rational approximation (relative error 1.15e-9) ...
        static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
                                       1.383577518672690e+02, -3.066479806614716e+01, 2.506628277459239e+00};
        static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
                                       6.680131188771972e+01, -1.328068155288572e+01};
        static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
                                       -2.549732539343734e+00, 4.374664141464968e+00, 2.938163982698783e+00};
        static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
                                       3.754408661907416e+00};
        constexpr double p_low = 0.02425;

        double z;
        if (p < p_low)
        {
            const double q = std::sqrt(-2.0 * std::log(p));
            z = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
                ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
        }
        else if (p <= 1.0 - p_low)
        {
            const double q = p - 0.5;
            const double r = q * q;
            z = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
                (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
        }
        else
        {
            const double q = std::sqrt(-2.0 * std::log1p(-p));
            z = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
                ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
        }

        // ... polished by two Halley steps against erfc
        for (int i = 0; i < 2; ++i)
        {
            const double e = (z < 0.0) ? normal_cdf(z) - p : (1.0 - p) - 0.5 * std::erfc(z / std::numbers::sqrt2);
            const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * z * z);
            z = z - u / (1.0 + 0.5 * z * u);
        }
        return z;
    }

    double invert_monotone(const std::function<double(double)> &cdf,
                           const std::function<double(double)> &pdf,
                           double p, double lower, double upper, double guess)
    {
        if (!(p > 0.0 && p < 1.0))
            throw std::invalid_argument("invert_monotone requires 0 < p < 1.");

        double x = guess;
        if (std::isfinite(lower) && x <= lower)
            x = std::isfinite(upper) ? 0.5 * (lower + upper) : lower + 1.0;
        if (std::isfinite(upper) && x >= upper)
            x = std::isfinite(lower) ? 0.5 * (lower + upper) : upper - 1.0;

        // Bracket [lo, hi] with cdf(lo) <= p <= cdf(hi)
        double lo = lower;
        double hi = upper;
        const double step0 = std::max(1.0, std::abs(x));
        if (!std::isfinite(lo))
        {
            double step = step0;
            lo = x - step;
            while (cdf(lo) > p)
            {
                step *= 2.0;
                lo = x - step;
                if (!std::isfinite(lo))
                    throw std::runtime_error("invert_monotone failed to bracket the root from below.");
            }
        }
        if (!std::isfinite(hi))
        {
            double step = step0;
            hi = x + step;
            while (cdf(hi) < p)
            {
                step *= 2.0;
                hi = x + step;
                if (!std::isfinite(hi))
                    throw std::runtime_error("invert_monotone failed to bracket the root from above.");
            }
        }
        if (x <= lo || x >= hi)
            x = 0.5 * (lo + hi);

        for (int iter = 0; iter < 1000; ++iter)
        {
            const double f = cdf(x) - p;
            if (f == 0.0)
                return x;
            if (f < 0.0)
                lo = x;
            else
                hi = x;

            if (std::abs(f) <= 4.0 * kEps * p || hi - lo <= 2.0 * kEps * std::max(std::abs(lo), std::abs(hi)))
                return x;

            const double density = pdf(x);
            double next = (density > 0.0 && std::isfinite(density)) ? x - f / density : lo - 1.0;
            if (!(next > lo && next < hi))
            {
                if (lo == 0.0 && hi > 0.0)
                    next = hi * 0.0625;
                else if (lo > 0.0 && hi / lo > 4.0)
                    next = std::sqrt(lo * hi);
                else
                    next = 0.5 * (lo + hi);
                if (!(next > lo && next < hi))
                    return x;
            }
            else if (std::abs(next - x) <= kEps * std::abs(x))
                return next;
            x = next;
        }
        return x;
    }

} // namespace chanstat::special
