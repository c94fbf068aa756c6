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

#include "chanstat/gof.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace chanstat
{
    double ks_statistic(std::span<const double> data, const DistributionSpec &spec)
    {
        if (data.empty())
            throw std::invalid_argument("ks_statistic: data must not be empty.");
        std::vector<double> sorted(data.begin(), data.end());
        std::sort(sorted.begin(), sorted.end());
        const double n = static_cast<double>(sorted.size());
        double d = 0.0;
        for (std::size_t i = 0; i < sorted.size(); ++i)
        {
            const double f = cdf(spec, sorted[i]);
            d = std::max({d, (static_cast<double>(i) + 1.0) / n - f, f - static_cast<double>(i) / n});
        }
        return std::clamp(d, 0.0, 1.0);
    }

    double ks_pvalue(double d, std::size_t n)
    {
        if (!(d >= 0.0 && d <= 1.0))
            throw std::invalid_argument("ks_pvalue: d must lie in [0, 1].");
        if (n == 0)
            throw std::invalid_argument("ks_pvalue: n must be >= 1.");
        const double lambda = std::sqrt(static_cast<double>(n)) * d;
        if (lambda == 0.0)
            return 1.0;

        double q;
        if (lambda < 1.0)
        {
            // Theta-function form of the same law; the alternating series converges slowly here
            //   1 - Q = sqrt(2 pi) / lambda * sum_k exp(-(2k - 1)^2 pi^2 / (8 lambda^2))
            const double c = std::numbers::pi * std::numbers::pi / (8.0 * lambda * lambda);
            double sum = 0.0;
            for (int k = 1; k < 1000; ++k)
            {
                const double odd = 2.0 * k - 1.0;
                const double term = std::exp(-odd * odd * c);
                sum += term;
                if (term < 1e-16 * sum)
                    break;
            }
            q = 1.0 - std::sqrt(2.0 * std::numbers::pi) / lambda * sum;
        }
        else
        {
            // Q = 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 lambda^2), truncated once terms drop below 1e-12
            double sum = 0.0;
            for (int k = 1; k < 1000; ++k)
            {
                const double term = std::exp(-2.0 * k * k * lambda * lambda);
                sum += (k % 2 == 1) ? term : -term;
                if (term < 1e-12)
                    break;
            }
            q = 2.0 * sum;
        }
        return std::clamp(q, 0.0, 1.0);
    }

    std::vector<QqPoint> qq_points(std::span<const double> data, const DistributionSpec &spec)
    {
        if (data.empty())
            throw std::invalid_argument("qq_points: data must not be empty.");
        std::vector<double> sorted(data.begin(), data.end());
        std::sort(sorted.begin(), sorted.end());
        const double n = static_cast<double>(sorted.size());
        std::vector<QqPoint> out;
        out.reserve(sorted.size());
        for (std::size_t i = 0; i < sorted.size(); ++i)
            out.push_back({quantile(spec, (static_cast<double>(i) + 0.5) / n), sorted[i]});
        return out;
    }

    double qq_correlation(std::span<const QqPoint> points)
    {
        if (points.size() < 2)
            throw std::invalid_argument("qq_correlation: need at least 2 points.");
        const double n = static_cast<double>(points.size());
        double mx = 0.0, my = 0.0;
        for (const auto &p : points)
        {
            mx += p.theoretical;
            my += p.empirical;
        }
        mx /= n;
        my /= n;
        double sxx = 0.0, syy = 0.0, sxy = 0.0;
        for (const auto &p : points)
        {
            const double dx = p.theoretical - mx;
            const double dy = p.empirical - my;
            sxx += dx * dx;
            syy += dy * dy;
            sxy += dx * dy;
        }
        if (!(sxx > 0.0) || !(syy > 0.0))
            throw std::invalid_argument("qq_correlation: zero variance on an axis.");
        return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
    }

    GofReport evaluate(std::span<const double> data, const DistributionSpec &spec)
    {
        const double d = ks_statistic(data, spec);
        const auto points = qq_points(data, spec);
        return GofReport{d, ks_pvalue(d, data.size()), qq_correlation(points), data.size(), spec};
    }

} // namespace chanstat
