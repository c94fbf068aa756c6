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

// Shared fixtures: parameter grids, an independent quadrature and synthetic datasets

#ifndef CHANSTAT_TEST_SUPPORT_HPP
#define CHANSTAT_TEST_SUPPORT_HPP

#include "chanstat/distribution.hpp"
#include "chanstat/measurement.hpp"
#include "chanstat/normalization.hpp"
#include "chanstat/rng.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <string>
#include <vector>

namespace chanstat::test
{
    // Five parameter points per family, spanning the table values and awkward shapes
    inline std::vector<DistributionSpec> parameter_points()
    {
        using F = Family;
        return {
            {F::Normal, 0.0, 1.0}, {F::Normal, -17.0, 7.0}, {F::Normal, 3.5, 0.01}, {F::Normal, -23.2, 6.62}, {F::Normal, 1e3, 250.0},
            {F::Exponential, 0.0, 1.0}, {F::Exponential, 0.0, 50.52}, {F::Exponential, -29.0, 12.1}, {F::Exponential, 5.0, 0.2}, {F::Exponential, 0.0, 81.21},
            {F::LogNormal, -35.5, 17.4, {0.37}}, {F::LogNormal, 0.0, 1.0, {1.0}}, {F::LogNormal, 2.0, 3.0, {0.05}}, {F::LogNormal, -10.0, 2.0, {2.5}}, {F::LogNormal, 0.0, 10.0, {0.8}},
            {F::Rayleigh, 0.0, 1.0}, {F::Rayleigh, -29.6, 10.3}, {F::Rayleigh, 4.0, 0.3}, {F::Rayleigh, -50.0, 25.0}, {F::Rayleigh, 100.0, 7.0},
            {F::Rician, -38.54, 6.6, {1.8}}, {F::Rician, 0.0, 1.0, {0.0}}, {F::Rician, 0.0, 1.0, {0.3}}, {F::Rician, -5.0, 2.0, {8.0}}, {F::Rician, 0.0, 1.0, {30.0}},
            {F::Nakagami, -29.3, 14.2, {0.876}}, {F::Nakagami, 0.0, 1.0, {0.5}}, {F::Nakagami, 0.0, 2.0, {1.0}}, {F::Nakagami, -3.0, 1.0, {5.0}}, {F::Nakagami, 0.0, 1.0, {40.0}},
            {F::Gamma, -30.7, 3.73, {3.66}}, {F::Gamma, 0.0, 1.0, {1.0}}, {F::Gamma, 0.0, 1.0, {0.6}}, {F::Gamma, 2.0, 0.5, {25.0}}, {F::Gamma, -200.0, 3.1, {59.7}},
            {F::Beta, -16.9, 7.14, {1.04, 1.0}}, {F::Beta, 0.0, 1.0, {2.5, 1.8}}, {F::Beta, 0.0, 1.0, {0.6, 0.7}}, {F::Beta, -40.0, 30.0, {5.0, 0.8}}, {F::Beta, 1.0, 2.0, {30.0, 40.0}},
            {F::LogLogistic, -33.79, 15.5, {4.04}}, {F::LogLogistic, -29.0, 5.6, {0.84}}, {F::LogLogistic, 0.0, 1.0, {1.0}}, {F::LogLogistic, 0.0, 2.0, {2.0}}, {F::LogLogistic, 10.0, 0.5, {12.0}},
            {F::Weibull, 0.0, 1.0, {1.0}}, {F::Weibull, 0.0, 50.0, {0.6}}, {F::Weibull, 0.0, 60.0, {1.3}}, {F::Weibull, -5.0, 2.0, {3.5}}, {F::Weibull, 0.0, 1.0, {8.0}},
        };
    }

    // Integral of the density over its support, computed independently of the library's cdf.
    // Semi-infinite supports are mapped by y = e^u, Beta by the logistic map, so that endpoint
    // singularities and algebraic tails become exponentially decaying integrands. The mass is
    // translation invariant, so the copy at loc = 0 is integrated: near the support edge
    // loc + scale * y would otherwise round to loc itself.
    inline double total_mass(const DistributionSpec &shifted)
    {
        using boost::math::quadrature::gauss_kronrod;
        const DistributionSpec spec(shifted.family(), 0.0, shifted.scale(), shifted.shapes());
        const double s = spec.scale();
        auto piecewise = [](auto &&g, double a, double b, double width)
        {
            double sum = 0.0;
            for (double u = a; u < b; u += width)
                sum += gauss_kronrod<double, 31>::integrate(g, u, std::min(u + width, b), 2, 1e-12);
            return sum;
        };
        switch (spec.family())
        {
        case Family::Normal:
            return piecewise([&](double x) { return pdf(spec, x); }, -40.0 * s, 40.0 * s, s);
        case Family::Beta:
            // Above u = 36 the map rounds to y = 1; the mass left out there is below 1e-10
            return piecewise([&](double u)
                             {
                const double y = 1.0 / (1.0 + std::exp(-u));
                return pdf(spec, s * y) * s * y * (1.0 - y); }, -700.0, 36.0, 0.5);
        default:
            return piecewise([&](double u)
                             {
                const double y = std::exp(u);
                return pdf(spec, s * y) * s * y; }, -700.0, 700.0, 0.25);
        }
    }

    // Records whose normalized powers and excess delays follow the given laws: links spread
    // over 5..50 m, the first path of every link at the free-space delay (excess 0) and the
    // others at free-space delay + an excess-delay draw; every power is a draw minus FSPL.
    inline std::vector<PathRecord> synthetic_records(const std::string &location, Scenario scenario,
                                                     const DistributionSpec &power, const DistributionSpec &delay,
                                                     std::size_t n, std::size_t links, std::uint64_t seed,
                                                     double frequency_hz = 143.1e9)
    {
        Rng rng(seed);
        const auto powers = sample(power, n, rng);
        const auto excess = sample(delay, n, rng);
        std::vector<PathRecord> out;
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
        {
            const std::size_t link = i % links;
            const double d = 5.0 + 45.0 * (static_cast<double>(link) + 0.5) / static_cast<double>(links);
            const bool first = i < links;
            const double tau = d / kSpeedOfLight * 1e9 + (first ? 0.0 : excess[i]);
            out.push_back({location, location + "-" + std::string(scenario_name(scenario)) + "-" + std::to_string(link),
                           scenario, d, tau, powers[i] - fspl_db(d, frequency_hz), frequency_hz});
        }
        return out;
    }

    inline double relative_error(double estimate, double truth)
    {
        return std::abs(estimate - truth) / std::abs(truth);
    }

} // namespace chanstat::test

#endif
