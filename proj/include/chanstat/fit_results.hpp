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

#ifndef CHANSTAT_FIT_RESULTS_HPP
#define CHANSTAT_FIT_RESULTS_HPP

#include "chanstat/distribution.hpp"
#include "chanstat/fit.hpp"
#include "chanstat/measurement.hpp"

#include <array>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chanstat
{
    // Normalized power (dB) or excess delay (ns)
    enum class Quantity
    {
        Power,
        Delay
    };

    std::string_view quantity_name(Quantity quantity); // "power" / "delay"
    Quantity parse_quantity(std::string_view text);

    // Families fitted to normalized powers and to excess delays
    inline constexpr std::array<Family, 9> kPowerFamilies = {
        Family::Normal, Family::Exponential, Family::LogNormal, Family::Rayleigh, Family::Rician,
        Family::Nakagami, Family::Gamma, Family::Beta, Family::LogLogistic};
    inline constexpr std::array<Family, 2> kDelayFamilies = {Family::Exponential, Family::Weibull};

    // One family's fit plus its goodness-of-fit scores; `error` is set when the fit failed
    struct FitRow
    {
        Family family = Family::Normal;
        std::optional<DistributionSpec> spec;
        double p_value = std::numeric_limits<double>::quiet_NaN();
        double qq_r = std::numeric_limits<double>::quiet_NaN();
        double ks_d = std::numeric_limits<double>::quiet_NaN();
        std::size_t n = 0;
        std::string error;

        bool ok() const { return error.empty() && spec.has_value(); }
    };

    struct FitGroup
    {
        std::string location;
        Scenario scenario = Scenario::Los;
        Quantity quantity = Quantity::Power;
        std::size_t n = 0;
        std::vector<FitRow> rows;
    };

    // Fits one family and scores it; failures are captured in the row instead of thrown
    FitRow fit_row(Family family, std::span<const double> data, const FitOptions &options);

    FitGroup fit_group(const std::string &location, Scenario scenario, Quantity quantity,
                       std::span<const double> data, std::span<const Family> families, const FitOptions &options);

} // namespace chanstat

#endif
