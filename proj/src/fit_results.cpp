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

#include "chanstat/fit_results.hpp"
#include "chanstat/gof.hpp"

#include <cctype>
#include <stdexcept>

namespace chanstat
{
    std::string_view quantity_name(Quantity quantity)
    {
        return quantity == Quantity::Power ? "power" : "delay";
    }

    Quantity parse_quantity(std::string_view text)
    {
        std::string lower;
        for (char c : text)
            lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        if (lower == "power" || lower == "npd")
            return Quantity::Power;
        if (lower == "delay" || lower == "ndd")
            return Quantity::Delay;
        throw std::invalid_argument("unknown quantity '" + std::string(text) + "' (expected power or delay)");
    }

    FitRow fit_row(Family family, std::span<const double> data, const FitOptions &options)
    {
        FitRow row;
        row.family = family;
        row.n = data.size();
        try
        {
            const DistributionSpec spec = fit_mle(family, data, options);
            row.spec = spec;
            const GofReport report = evaluate(data, spec);
            row.p_value = report.p_value;
            row.qq_r = report.qq_r;
            row.ks_d = report.ks_d;
        }
        catch (const std::exception &e)
        {
            row.error = e.what();
        }
        return row;
    }

    FitGroup fit_group(const std::string &location, Scenario scenario, Quantity quantity,
                       std::span<const double> data, std::span<const Family> families, const FitOptions &options)
    {
        FitGroup group{location, scenario, quantity, data.size(), {}};
        for (Family f : families)
            group.rows.push_back(fit_row(f, data, options));
        return group;
    }

} // namespace chanstat
