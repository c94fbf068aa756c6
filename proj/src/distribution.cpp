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

#include "chanstat/distribution.hpp"
#include "chanstat/special_functions.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace chanstat
{
    namespace
    {
        constexpr double kInf = std::numeric_limits<double>::infinity();
        const double kLogSqrt2Pi = 0.5 * std::log(2.0 * std::numbers::pi);

        // coef * ln(y) with the convention 0 * ln(0) = 0
        double xlogy(double coef, double y)
        {
            if (coef == 0.0)
                return 0.0;
            return coef * std::log(y);
        }

        // ln(1 + y^c) without overflow for large y
        double log1p_pow(double y, double c)
        {
            const double t = c * std::log(y);
            return t > 0.0 ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t));
        }

        // Log density of the unit form, with the shape-only constants computed once
        class UnitLogDensity
        {
        public:
            explicit UnitLogDensity(const DistributionSpec &spec) : family_(spec.family())
            {
                const auto &s = spec.shapes();
                if (!s.empty())
                    s1_ = s[0];
                if (s.size() > 1)
                    s2_ = s[1];
                switch (family_)
                {
                case Family::LogNormal:
                    constant_ = -std::log(s1_) - kLogSqrt2Pi;
                    break;
                case Family::Nakagami:
                    constant_ = std::numbers::ln2 + s1_ * std::log(s1_) - std::lgamma(s1_);
                    break;
                case Family::Gamma:
                    constant_ = -std::lgamma(s1_);
                    break;
                case Family::Beta:
                    constant_ = std::lgamma(s1_ + s2_) - std::lgamma(s1_) - std::lgamma(s2_);
                    break;
                case Family::LogLogistic:
                case Family::Weibull:
                    constant_ = std::log(s1_);
                    break;
                default:
                    break;
                }
            }

            double operator()(double y) const
            {
                switch (family_)
                {
                case Family::Normal:
                    return -0.5 * y * y - kLogSqrt2Pi;
                case Family::Exponential:
                    return y < 0.0 ? -kInf : -y;
                case Family::LogNormal:
                {
                    if (y <= 0.0)
                        return -kInf;
                    const double ly = std::log(y);
                    return -ly * ly / (2.0 * s1_ * s1_) - ly + constant_;
                }
                case Family::Rayleigh:
                    return y <= 0.0 ? -kInf : std::log(y) - 0.5 * y * y;
                case Family::Rician:
                {
                    if (y <= 0.0)
                        return -kInf;
                    const double d = y - s1_;
                    return std::log(y) - 0.5 * d * d + std::log(special::bessel_i0e(s1_ * y));
                }
                case Family::Nakagami:
                    return y < 0.0 ? -kInf : constant_ + xlogy(2.0 * s1_ - 1.0, y) - s1_ * y * y;
                case Family::Gamma:
                    return y < 0.0 ? -kInf : constant_ + xlogy(s1_ - 1.0, y) - y;
                case Family::Beta:
                    if (y < 0.0 || y > 1.0)
                        return -kInf;
                    return constant_ + xlogy(s1_ - 1.0, y) + xlogy(s2_ - 1.0, 1.0 - y);
                case Family::LogLogistic:
                    if (y < 0.0)
                        return -kInf;
                    if (y == 0.0)
                        return constant_ + xlogy(s1_ - 1.0, y);
                    return constant_ + xlogy(s1_ - 1.0, y) - 2.0 * log1p_pow(y, s1_);
                case Family::Weibull:
                    return y < 0.0 ? -kInf : constant_ + xlogy(s1_ - 1.0, y) - std::pow(y, s1_);
                }
                return -kInf;
            }

        private:
            Family family_;
            double s1_ = 0.0;
            double s2_ = 0.0;
            double constant_ = 0.0;
        };

        // P(Y <= y) for the unit Rician: a Poisson(b^2/2) mixture of P(j + 1, y^2/2)
        double rician_unit_cdf(double y, double b)
        {
            if (y <= 0.0)
                return 0.0;
            const double x = 0.5 * y * y;
            if (b == 0.0)
                return -std::expm1(-x);

            const double lambda = 0.5 * b * b;
            const double spread = 10.0 * std::sqrt(lambda) + 20.0;
            const double j_lo = std::max(0.0, std::floor(lambda - spread));
            const double j_hi = std::floor(lambda + spread);

            const double log_lambda = std::log(lambda);
            const double log_x = std::log(x);
            double log_w = -lambda + j_lo * log_lambda - std::lgamma(j_lo + 1.0);
            double log_d = -x + (j_lo + 1.0) * log_x - std::lgamma(j_lo + 2.0);
            double p = special::gamma_p(j_lo + 1.0, x);

            double sum = 0.0;
            for (double j = j_lo; j <= j_hi; j += 1.0)
            {
                sum += std::exp(log_w) * p;
                // P(j + 2, x) = P(j + 1, x) - x^{j+1} e^{-x} / (j + 1)!
                p = std::max(0.0, p - std::exp(log_d));
                log_w += log_lambda - std::log(j + 1.0);
                log_d += log_x - std::log(j + 2.0);
            }
            return std::clamp(sum, 0.0, 1.0);
        }

        double unit_cdf(const DistributionSpec &spec, double y)
        {
            const auto &s = spec.shapes();
            switch (spec.family())
            {
            case Family::Normal:
                return special::normal_cdf(y);
            case Family::Exponential:
                return y <= 0.0 ? 0.0 : -std::expm1(-y);
            case Family::LogNormal:
                return y <= 0.0 ? 0.0 : special::normal_cdf(std::log(y) / s[0]);
            case Family::Rayleigh:
                return y <= 0.0 ? 0.0 : -std::expm1(-0.5 * y * y);
            case Family::Rician:
                return rician_unit_cdf(y, s[0]);
            case Family::Nakagami:
                return y <= 0.0 ? 0.0 : special::gamma_p(s[0], s[0] * y * y);
            case Family::Gamma:
                return y <= 0.0 ? 0.0 : special::gamma_p(s[0], y);
            case Family::Beta:
                return special::beta_inc(s[0], s[1], std::clamp(y, 0.0, 1.0));
            case Family::LogLogistic:
                return y <= 0.0 ? 0.0 : 1.0 / (1.0 + std::exp(-s[0] * std::log(y)));
            case Family::Weibull:
                return y <= 0.0 ? 0.0 : -std::expm1(-std::pow(y, s[0]));
            }
            return 0.0;
        }

        double unit_quantile(const DistributionSpec &spec, double q)
        {
            const auto &s = spec.shapes();
            switch (spec.family())
            {
            case Family::Normal:
                return special::normal_quantile(q);
            case Family::Exponential:
                return -std::log1p(-q);
            case Family::LogNormal:
                return std::exp(s[0] * special::normal_quantile(q));
            case Family::Rayleigh:
                return std::sqrt(-2.0 * std::log1p(-q));
            case Family::Rician:
            {
                const double b = s[0];
                const double guess = b > 3.0 ? std::max(0.1, b + special::normal_quantile(q))
                                             : std::sqrt(-2.0 * std::log1p(-q)) + 0.5 * b;
                const UnitLogDensity log_density(DistributionSpec(Family::Rician, 0.0, 1.0, {b}));
                return special::invert_monotone([b](double y)
                                                { return rician_unit_cdf(y, b); },
                                                [&log_density](double y)
                                                { return std::exp(log_density(y)); },
                                                q, 0.0, kInf, guess);
            }
            case Family::Nakagami:
                return std::sqrt(special::gamma_p_inv(s[0], q) / s[0]);
            case Family::Gamma:
                return special::gamma_p_inv(s[0], q);
            case Family::Beta:
                return special::beta_inc_inv(s[0], s[1], q);
            case Family::LogLogistic:
                return std::exp((std::log(q) - std::log1p(-q)) / s[0]);
            case Family::Weibull:
                return std::pow(-std::log1p(-q), 1.0 / s[0]);
            }
            return 0.0;
        }

        std::string normalize_name(std::string_view name)
        {
            std::string out;
            for (char ch : name)
                if (std::isalnum(static_cast<unsigned char>(ch)))
                    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
            return out;
        }
    } // namespace

    std::string_view family_name(Family family)
    {
        switch (family)
        {
        case Family::Normal:
            return "normal";
        case Family::Exponential:
            return "exponential";
        case Family::LogNormal:
            return "lognormal";
        case Family::Rayleigh:
            return "rayleigh";
        case Family::Rician:
            return "rician";
        case Family::Nakagami:
            return "nakagami";
        case Family::Gamma:
            return "gamma";
        case Family::Beta:
            return "beta";
        case Family::LogLogistic:
            return "loglogistic";
        case Family::Weibull:
            return "weibull";
        }
        return "unknown";
    }

    Family parse_family(std::string_view name)
    {
        const std::string key = normalize_name(name);
        for (Family f : all_families)
            if (key == family_name(f))
                return f;
        if (key == "expon")
            return Family::Exponential;
        if (key == "lognorm")
            return Family::LogNormal;
        if (key == "rice")
            return Family::Rician;
        if (key == "fisk")
            return Family::LogLogistic;
        if (key == "weibullmin")
            return Family::Weibull;
        throw std::invalid_argument("Unknown distribution family '" + std::string(name) + "'.");
    }

    std::size_t shape_arity(Family family)
    {
        switch (family)
        {
        case Family::Normal:
        case Family::Exponential:
        case Family::Rayleigh:
            return 0;
        case Family::Beta:
            return 2;
        default:
            return 1;
        }
    }

    DistributionSpec::DistributionSpec(Family family, double loc, double scale, std::vector<double> shapes)
        : family_(family), loc_(loc), scale_(scale), shapes_(std::move(shapes))
    {
        const std::string name(family_name(family));
        if (!std::isfinite(loc))
            throw std::invalid_argument(name + ": loc must be finite.");
        if (!(scale > 0.0) || !std::isfinite(scale))
            throw std::invalid_argument(name + ": scale must be finite and > 0.");
        if (shapes_.size() != shape_arity(family))
            throw std::invalid_argument(name + ": expected " + std::to_string(shape_arity(family)) +
                                        " shape parameter(s), got " + std::to_string(shapes_.size()) + ".");
        for (double s : shapes_)
        {
            if (!std::isfinite(s))
                throw std::invalid_argument(name + ": shape parameters must be finite.");
            const bool ok = family == Family::Rician ? s >= 0.0 : s > 0.0;
            if (!ok)
                throw std::invalid_argument(name + ": shape parameter out of domain.");
        }
    }

    double DistributionSpec::support_lower() const
    {
        return family_ == Family::Normal ? -kInf : loc_;
    }

    double DistributionSpec::support_upper() const
    {
        return family_ == Family::Beta ? loc_ + scale_ : kInf;
    }

    double log_pdf(const DistributionSpec &spec, double x)
    {
        const UnitLogDensity unit(spec);
        return unit((x - spec.loc()) / spec.scale()) - std::log(spec.scale());
    }

    double pdf(const DistributionSpec &spec, double x)
    {
        return std::exp(log_pdf(spec, x));
    }

    double cdf(const DistributionSpec &spec, double x)
    {
        if (std::isnan(x))
            throw std::invalid_argument("cdf: x is NaN.");
        if (x == kInf)
            return 1.0;
        if (x == -kInf)
            return 0.0;
        return unit_cdf(spec, (x - spec.loc()) / spec.scale());
    }

    double quantile(const DistributionSpec &spec, double q)
    {
        if (!(q > 0.0 && q < 1.0))
            throw std::invalid_argument("quantile: q must lie in (0, 1).");
        return spec.loc() + spec.scale() * unit_quantile(spec, q);
    }

    std::vector<double> sample(const DistributionSpec &spec, std::size_t n, Rng &rng)
    {
        std::vector<double> out;
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            out.push_back(quantile(spec, rng.uniform()));
        return out;
    }

    std::vector<double> sample(const DistributionSpec &spec, std::size_t n, std::uint64_t seed)
    {
        Rng rng(seed);
        return sample(spec, n, rng);
    }

    double log_likelihood(const DistributionSpec &spec, std::span<const double> data)
    {
        if (data.empty())
            throw std::invalid_argument("log_likelihood: data must not be empty.");
        const UnitLogDensity unit(spec);
        const double inv_scale = 1.0 / spec.scale();
        double sum = 0.0;
        for (double x : data)
        {
            const double v = unit((x - spec.loc()) * inv_scale);
            if (v == -kInf)
                return -kInf;
            sum += v;
        }
        return sum - static_cast<double>(data.size()) * std::log(spec.scale());
    }

    std::optional<double> mean(const DistributionSpec &spec)
    {
        const double loc = spec.loc();
        const double scale = spec.scale();
        const auto &s = spec.shapes();
        switch (spec.family())
        {
        case Family::Normal:
            return loc;
        case Family::Exponential:
            return loc + scale;
        case Family::LogNormal:
            return loc + scale * std::exp(0.5 * s[0] * s[0]);
        case Family::Rayleigh:
            return loc + scale * std::sqrt(0.5 * std::numbers::pi);
        case Family::Rician:
        {
            // sqrt(pi/2) L_{1/2}(-b^2/2) with the Laguerre function written through scaled I0, I1
            const double h = 0.25 * s[0] * s[0];
            const double laguerre = (1.0 + 2.0 * h) * special::bessel_i0e(h) + 2.0 * h * special::bessel_i1e(h);
            return loc + scale * std::sqrt(0.5 * std::numbers::pi) * laguerre;
        }
        case Family::Nakagami:
            return loc + scale * std::exp(std::lgamma(s[0] + 0.5) - std::lgamma(s[0])) / std::sqrt(s[0]);
        case Family::Gamma:
            return loc + scale * s[0];
        case Family::Beta:
            return loc + scale * s[0] / (s[0] + s[1]);
        case Family::LogLogistic:
        {
            if (s[0] <= 1.0)
                return std::nullopt;
            const double t = std::numbers::pi / s[0];
            return loc + scale * t / std::sin(t);
        }
        case Family::Weibull:
            return loc + scale * std::tgamma(1.0 + 1.0 / s[0]);
        }
        return std::nullopt;
    }

} // namespace chanstat
