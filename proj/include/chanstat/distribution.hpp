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

#ifndef CHANSTAT_DISTRIBUTION_HPP
#define CHANSTAT_DISTRIBUTION_HPP

#include "chanstat/rng.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chanstat
{
    // Parametric families. Every family is used in its standardized form
    //   y = (x - loc) / scale,   f(x) = f0(y; shapes) / scale
    // with the unit-form densities
    //   Normal            exp(-y^2/2) / sqrt(2 pi)
    //   Exponential       exp(-y),                          y >= 0
    //   LogNormal(s)      exp(-(ln y)^2 / (2 s^2)) / (y s sqrt(2 pi)),  y > 0
    //   Rayleigh          y exp(-y^2/2),                    y >= 0
    //   Rician(b)         y exp(-(y^2 + b^2)/2) I0(b y),    y >= 0, b >= 0
    //   Nakagami(nu)      2 nu^nu y^(2nu-1) exp(-nu y^2) / Gamma(nu)
    //   Gamma(a)          y^(a-1) exp(-y) / Gamma(a)
    //   Beta(a, b)        y^(a-1) (1-y)^(b-1) / B(a, b),    0 <= y <= 1
    //   LogLogistic(c)    c y^(c-1) / (1 + y^c)^2
    //   Weibull(c)        c y^(c-1) exp(-y^c)
    enum class Family
    {
        Normal,
        Exponential,
        LogNormal,
        Rayleigh,
        Rician,
        Nakagami,
        Gamma,
        Beta,
        LogLogistic,
        Weibull
    };

    inline constexpr std::array<Family, 10> all_families = {
        Family::Normal, Family::Exponential, Family::LogNormal, Family::Rayleigh, Family::Rician,
        Family::Nakagami, Family::Gamma, Family::Beta, Family::LogLogistic, Family::Weibull};

    std::string_view family_name(Family family);

    // Accepts the canonical names plus the usual spellings ("Log-Normal", "log logistic", "fisk", ...)
    Family parse_family(std::string_view name);

    // Number of shape parameters of the family
    std::size_t shape_arity(Family family);

    // A family together with its location, scale and shape parameters. Validated on construction.
    class DistributionSpec
    {
    public:
        DistributionSpec(Family family, double loc, double scale, std::vector<double> shapes = {});

        Family family() const { return family_; }
        double loc() const { return loc_; }
        double scale() const { return scale_; }
        const std::vector<double> &shapes() const { return shapes_; }
        double shape(std::size_t i = 0) const { return shapes_.at(i); }

        // Closed support [lower, upper]; infinite bounds where unbounded
        double support_lower() const;
        double support_upper() const;

        bool operator==(const DistributionSpec &) const = default;

    private:
        Family family_;
        double loc_;
        double scale_;
        std::vector<double> shapes_;
    };

    double pdf(const DistributionSpec &spec, double x);
    double log_pdf(const DistributionSpec &spec, double x);
    double cdf(const DistributionSpec &spec, double x);

    // Inverse CDF for 0 < q < 1
    double quantile(const DistributionSpec &spec, double q);

    // n draws by inversion of uniform variates on (0, 1)
    std::vector<double> sample(const DistributionSpec &spec, std::size_t n, Rng &rng);
    std::vector<double> sample(const DistributionSpec &spec, std::size_t n, std::uint64_t seed);

    // Sum of log densities; -inf when any point lies outside the support
    double log_likelihood(const DistributionSpec &spec, std::span<const double> data);

    // Analytic mean; std::nullopt where the mean diverges (LogLogistic with c <= 1)
    std::optional<double> mean(const DistributionSpec &spec);

} // namespace chanstat

#endif
