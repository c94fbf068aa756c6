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

#ifndef CHANSTAT_GOF_HPP
#define CHANSTAT_GOF_HPP

#include "chanstat/distribution.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace chanstat
{
    inline constexpr double kDefaultSignificance = 0.05;

    struct GofReport
    {
        double ks_d = 0.0;
        double p_value = 0.0;
        double qq_r = 0.0;
        std::size_t n = 0;
        DistributionSpec spec;

        bool passes(double significance = kDefaultSignificance) const { return p_value > significance; }
    };

    // Kolmogorov-Smirnov distance between the empirical CDF of data and cdf(spec, .)
    double ks_statistic(std::span<const double> data, const DistributionSpec &spec);

    // Asymptotic Kolmogorov survival function Q(sqrt(n) d). The parameters are usually estimated
    // from the same data, so the value is optimistic (Lilliefors effect); it is not corrected here.
    double ks_pvalue(double d, std::size_t n);

    struct QqPoint
    {
        double theoretical = 0.0;
        double empirical = 0.0;
    };

    // Sorted data against quantile(spec, (i - 0.5) / n)
    std::vector<QqPoint> qq_points(std::span<const double> data, const DistributionSpec &spec);

    // Pearson correlation of the two coordinates; throws on zero variance
    double qq_correlation(std::span<const QqPoint> points);

    GofReport evaluate(std::span<const double> data, const DistributionSpec &spec);

} // namespace chanstat

#endif
