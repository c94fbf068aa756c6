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

#include "chanstat/presets.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace chanstat
{
    namespace
    {
        constexpr double kNoShape = std::numeric_limits<double>::quiet_NaN();

        struct Row
        {
            const char *location;
            Scenario scenario;
            Quantity quantity;
            Family family;
            double p_value;
            double qq_r;
            double loc;
            double scale;
            double shape; // NaN when the family has none or it was not published
        };

        constexpr Scenario L = Scenario::Los;
        constexpr Scenario N = Scenario::Nlos;
        constexpr Quantity P = Quantity::Power;
        constexpr Quantity D = Quantity::Delay;

        // clang-format off
        const Row kRows[] = {
            {"Sello", L, P, Family::Normal,      0.0325,  0.97, -17.0,   7.0,   kNoShape},
            {"Sello", L, P, Family::Exponential, 9.4e-12, 0.97, -29.0,   12.1,  kNoShape},
            {"Sello", L, P, Family::LogNormal,   0.8526,  0.99, -35.5,   17.4,  0.37},
            {"Sello", L, P, Family::Rayleigh,    0.4456,  0.99, -29.6,   10.3,  kNoShape},
            {"Sello", L, P, Family::Rician,      0.4456,  0.99, -29.6,   10.3,  0.0},
            {"Sello", L, P, Family::Nakagami,    0.5238,  0.99, -29.3,   14.2,  0.876},
            {"Sello", L, P, Family::Gamma,       0.8106,  0.99, -30.7,   3.73,  3.66},
            {"Sello", L, P, Family::Beta,        0.8106,  0.99, -16.9,   7.14,  1.04},
            {"Sello", L, P, Family::LogLogistic, 2.1e-34, 0.57, -29.0,   5.60,  0.84},
            {"Sello", N, P, Family::Normal,      0.0957,  0.92, -17.2,   4.93,  kNoShape},
            {"Sello", N, P, Family::Exponential, 0.8664,  0.96, -22.5,   5.31,  kNoShape},
            {"Sello", N, P, Family::LogNormal,   0.7512,  0.91, -23.1,   4.03,  0.91},
            {"Sello", N, P, Family::Rayleigh,    0.0741,  0.96, -24.95,  6.48,  kNoShape},
            {"Sello", N, P, Family::Rician,      0.0741,  0.96, -24.95,  6.48,  0.0},
            {"Sello", N, P, Family::Nakagami,    0.7722,  0.98, -22.53,  7.26,  0.88},
            {"Sello", N, P, Family::Gamma,       0.7210,  0.98, -22.53,  5.74,  0.88},
            {"Sello", N, P, Family::Beta,        0.8828,  0.98, -17.12,  5.69,  2.1},
            {"Sello", N, P, Family::LogLogistic, 5.546e-05, 0.58, -22.53, 1.04, 0.83},

            {"Airport", L, P, Family::Normal,      0.6897,   0.99, -16.08,  7.3,   kNoShape},
            {"Airport", L, P, Family::Exponential, 2.51e-24, 0.93, -32.42,  16.33, kNoShape},
            {"Airport", L, P, Family::LogNormal,   0.8837,   0.99, -105.55, 89.16, 0.08},
            {"Airport", L, P, Family::Rayleigh,    0.0057,   0.99, -32.27,  16.3,  kNoShape},
            {"Airport", L, P, Family::Rician,      0.0,      0.27, -32.4,   2.21,  0.0},
            {"Airport", L, P, Family::Nakagami,    0.8393,   0.99, -41.2,   26.16, 3.04},
            {"Airport", L, P, Family::Gamma,       0.8927,   0.99, -72.57,  0.94,  59.7},
            {"Airport", L, P, Family::Beta,        0.8927,   0.99, -16.0,   7.31,  0.26},
            {"Airport", L, P, Family::LogLogistic, 0.72,     0.99, -102.75, 86.38, 20.64},
            {"Airport", N, P, Family::Normal,      0.5092,   0.92, -20.56,  4.83,  kNoShape},
            {"Airport", N, P, Family::Exponential, 0.0141,   0.97, -27.95,  7.38,  kNoShape},
            {"Airport", N, P, Family::LogNormal,   0.8920,   0.97, -30.97,  9.48,  0.42},
            {"Airport", N, P, Family::Rayleigh,    0.7153,   0.96, -28.75,  6.72,  kNoShape},
            {"Airport", N, P, Family::Rician,      0.7153,   0.95, -28.75,  6.72,  0.0},
            {"Airport", N, P, Family::Nakagami,    0.8640,   0.96, -28.23,  9.06,  0.79},
            {"Airport", N, P, Family::Gamma,       1.5e-31,  0.97, -27.95,  1.55,  0.73},
            {"Airport", N, P, Family::Beta,        0.9718,   0.97, -20.56,  4.55,  1.08},
            {"Airport", N, P, Family::LogLogistic, 7.6e-05,  0.78, -27.95,  4.14,  0.88},

            {"TUAS", L, P, Family::Normal,      0.6357,   0.95, -14.38, 7.0,   kNoShape},
            {"TUAS", L, P, Family::Exponential, 0.2978,   0.93, -24.56, 10.17, kNoShape},
            {"TUAS", L, P, Family::LogNormal,   0.9650,   0.94, -28.21, 12.12, 0.52},
            {"TUAS", L, P, Family::Rayleigh,    0.7257,   0.97, -26.43, 9.85,  kNoShape},
            {"TUAS", L, P, Family::Rician,      0.7257,   0.97, -26.43, 9.85,  0.0},
            {"TUAS", L, P, Family::Nakagami,    0.9070,   0.97, -24.67, 12.44, 2.16},
            {"TUAS", L, P, Family::Gamma,       0.9581,   0.96, -25.27, 5.04,  1.36},
            {"TUAS", L, P, Family::Beta,        0.9581,   0.96, -14.39, 7.41,  1.04},
            {"TUAS", L, P, Family::LogLogistic, 2.37e-05, 0.47, -24.56, 3.38,  0.81},
            {"TUAS", N, P, Family::Normal,      0.0269,   0.97, -24.57, 5.88,  kNoShape},
            {"TUAS", N, P, Family::Exponential, 7.37e-36, 0.90, -38.24, 13.67, kNoShape},
            {"TUAS", N, P, Family::LogNormal,   0.9235,   0.96, -48.56, 23.3,  0.24},
            {"TUAS", N, P, Family::Rayleigh,    3.06e-05, 0.96, -32.5,  6.98,  kNoShape},
            {"TUAS", N, P, Family::Rician,      0.1117,   0.96, -38.54, 6.6,   1.8},
            {"TUAS", N, P, Family::Nakagami,    0.3818,   0.96, -39.53, 16.07, 1.78},
            {"TUAS", N, P, Family::Gamma,       0.8315,   0.99, -42.47, 1.88,  9.50},
            {"TUAS", N, P, Family::Beta,        0.8315,   0.99, -24.57, 5.8,   0.64},
            {"TUAS", N, P, Family::LogLogistic, 0.9695,   0.99, -46.11, 20.78, 6.62},

            {"TUAS2", L, P, Family::Normal,      3.47e-04,  0.94, -16.7,  7.3,   kNoShape},
            {"TUAS2", L, P, Family::Exponential, 7.06e-15,  0.90, -29.9,  13.17, kNoShape},
            {"TUAS2", L, P, Family::LogNormal,   0.2833,    0.98, -36.4,  18.38, 0.37},
            {"TUAS2", L, P, Family::Rayleigh,    0.0172,    0.98, -30.42, 11.0,  kNoShape},
            {"TUAS2", L, P, Family::Rician,      0.0172,    0.98, -30.42, 11.0,  0.0},
            {"TUAS2", L, P, Family::Nakagami,    0.0182,    0.98, -30.38, 15.51, 1.0},
            {"TUAS2", L, P, Family::Gamma,       0.1461,    0.99, -32.0,  3.51,  4.35},
            {"TUAS2", L, P, Family::Beta,        3.837e-04, 0.93, -16.7,  7.3,   0.95},
            {"TUAS2", L, P, Family::LogLogistic, 0.70,      0.99, -33.79, 15.5,  4.04},
            {"TUAS2", N, P, Family::Normal,      9.88e-12,  0.98, -24.63, 6.5,   kNoShape},
            {"TUAS2", N, P, Family::Exponential, 8.969e-177, 0.24, -40.61, 15.86, kNoShape},
            {"TUAS2", N, P, Family::LogNormal,   2.685e-03, 0.98, -50.15, 24.62, 0.24},
            {"TUAS2", N, P, Family::Rayleigh,    5.165e-06, 0.98, -37.34, 10.0,  kNoShape},
            {"TUAS2", N, P, Family::Rician,      2.920e-32, 0.98, -40.63, 12.1,  0.11},
            {"TUAS2", N, P, Family::Nakagami,    5.7e-07,   0.97, -41.7,  18.17, 1.8},
            {"TUAS2", N, P, Family::Gamma,       3.8e-04,   0.98, -44.4,  2.06,  9.56},
            {"TUAS2", N, P, Family::Beta,        3.837e-04, 0.98, -24.74, 6.37,  0.64},
            {"TUAS2", N, P, Family::LogLogistic, 0.878,     0.98, -47.4,  21.7,  6.46},

            {"Sello",   L, D, Family::Exponential, 0.0401,   0.99, 0.0, 50.52, kNoShape},
            {"Sello",   L, D, Family::Weibull,     0.0142,   0.99, 0.0, 52.72, kNoShape},
            {"Sello",   N, D, Family::Exponential, 0.562,    0.99, 0.0, 43.51, kNoShape},
            {"Sello",   N, D, Family::Weibull,     4.3e-22,  0.91, 0.0, 1.05,  kNoShape},
            {"Airport", L, D, Family::Exponential, 0.21,     0.99, 0.0, 69.7,  kNoShape},
            {"Airport", L, D, Family::Weibull,     0.09,     0.99, 0.0, 71.65, kNoShape},
            {"Airport", N, D, Family::Exponential, 0.800,    0.99, 0.0, 81.21, kNoShape},
            {"Airport", N, D, Family::Weibull,     2.46e-66, 0.90, 0.0, 1.05,  kNoShape},
            {"TUAS",    L, D, Family::Exponential, 0.161,    0.99, 0.0, 26.5,  kNoShape},
            {"TUAS",    L, D, Family::Weibull,     4.87e-32, 0.91, 0.0, 1.05,  kNoShape},
            {"TUAS",    N, D, Family::Exponential, 0.002,    0.99, 0.0, 63.2,  kNoShape},
            {"TUAS",    N, D, Family::Weibull,     0.0,      0.99, 0.0, 1.05,  kNoShape},
            {"TUAS2",   L, D, Family::Exponential, 0.283,    0.99, 0.0, 37.5,  kNoShape},
            {"TUAS2",   L, D, Family::Weibull,     1e-262,   0.99, 0.0, 1.05,  kNoShape},
            {"TUAS2",   N, D, Family::Exponential, 0.0001,   0.99, 0.0, 55.7,  kNoShape},
            {"TUAS2",   N, D, Family::Weibull,     0.0,      0.99, 0.0, 1.05,  kNoShape},
        };
        // clang-format on

        struct SiteCounts
        {
            const char *location;
            std::size_t los;
            std::size_t nlos;
        };

        const SiteCounts kCounts[] = {{"Sello", 304, 29}, {"Airport", 375, 41}, {"TUAS", 29, 387}, {"TUAS2", 268, 1812}};

        std::size_t count_for(const std::string &location, Scenario scenario)
        {
            for (const auto &c : kCounts)
                if (location == c.location)
                    return scenario == Scenario::Los ? c.los : c.nlos;
            return 0;
        }

        FitRow to_row(const Row &r, std::size_t n)
        {
            FitRow row;
            row.family = r.family;
            row.p_value = r.p_value;
            row.qq_r = r.qq_r;
            row.n = n;
            const std::size_t arity = shape_arity(r.family);
            const std::size_t published = std::isnan(r.shape) ? 0 : 1;
            if (published != arity)
            {
                row.error = "published parameters incomplete (" + std::to_string(published) + " of " +
                            std::to_string(arity) + " shape values)";
                return row;
            }
            std::vector<double> shapes;
            if (published)
                shapes.push_back(r.shape);
            row.spec = DistributionSpec(r.family, r.loc, r.scale, shapes);
            return row;
        }

        std::string lower(std::string_view s)
        {
            std::string out;
            for (char c : s)
                out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
            return out;
        }
    } // namespace

    std::vector<FitGroup> preset_fit_groups()
    {
        std::vector<FitGroup> groups;
        for (const Row &r : kRows)
        {
            auto it = std::find_if(groups.begin(), groups.end(), [&](const FitGroup &g)
                                   { return g.location == r.location && g.scenario == r.scenario && g.quantity == r.quantity; });
            if (it == groups.end())
            {
                const std::string location = r.location;
                groups.push_back({location, r.scenario, r.quantity, count_for(location, r.scenario), {}});
                it = std::prev(groups.end());
            }
            it->rows.push_back(to_row(r, it->n));
        }
        return groups;
    }

    std::vector<std::string> preset_names()
    {
        std::vector<std::string> names;
        for (const auto &c : kCounts)
            for (Scenario s : {Scenario::Los, Scenario::Nlos})
                names.push_back(lower(c.location) + "-" + lower(scenario_name(s)));
        return names;
    }

    ChannelStatistics preset_statistics(std::string_view name, const SelectionPolicy &policy)
    {
        const std::string key = lower(name);
        const auto groups = preset_fit_groups();
        for (const auto &c : kCounts)
            for (Scenario s : {Scenario::Los, Scenario::Nlos})
            {
                if (key != lower(c.location) + "-" + lower(scenario_name(s)))
                    continue;
                const FitGroup *power = nullptr;
                const FitGroup *delay = nullptr;
                for (const auto &g : groups)
                    if (g.location == c.location && g.scenario == s)
                        (g.quantity == Quantity::Power ? power : delay) = &g;
                return build_statistics(c.location, s, power->rows, delay->rows, NopTable{}, kPresetFrequencyHz, policy);
            }
        std::string known;
        for (const auto &n : preset_names())
            known += (known.empty() ? "" : ", ") + n;
        throw std::invalid_argument("unknown preset '" + std::string(name) + "' (known: " + known + ")");
    }

} // namespace chanstat
