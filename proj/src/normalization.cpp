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

#include "chanstat/normalization.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace chanstat
{
    double fspl_db(double distance_m, double frequency_hz)
    {
        if (!(distance_m > 0.0) || !std::isfinite(distance_m))
            throw std::invalid_argument("fspl_db: distance must be finite and > 0.");
        if (!(frequency_hz > 0.0) || !std::isfinite(frequency_hz))
            throw std::invalid_argument("fspl_db: frequency must be finite and > 0.");
        return 20.0 * std::log10(4.0 * std::numbers::pi * frequency_hz * distance_m / kSpeedOfLight);
    }

    double normalize_power(const PathRecord &record)
    {
        return record.power_db + fspl_db(record.distance_m, record.frequency_hz);
    }

    std::vector<NormalizedPath> normalize_delays(const LinkGroup &link)
    {
        std::vector<NormalizedPath> out;
        if (link.paths.empty())
            return out;
        double first = link.paths.front().delay_ns;
        for (const auto &p : link.paths)
            first = std::min(first, p.delay_ns);
        const double loss = fspl_db(link.distance_m, link.frequency_hz);
        out.reserve(link.paths.size());
        for (const auto &p : link.paths)
            out.push_back({p.delay_ns - first, p.power_db + loss, link.location, link.scenario, link.link_id, link.distance_m});
        return out;
    }

    std::vector<PdpPoint> pdp_points(const MeasurementSet &set)
    {
        std::vector<PdpPoint> out;
        out.reserve(set.size());
        for (const auto &r : set.records())
            out.push_back({r.delay_ns, normalize_power(r), r.scenario});
        return out;
    }

    void write_pdp_csv(const std::vector<PdpPoint> &points, std::ostream &out)
    {
        out << "delay_ns,power_norm_db,scenario\n";
        char buf[96];
        for (const auto &p : points)
        {
            std::snprintf(buf, sizeof buf, "%.9g,%.9g,", p.delay_ns, p.power_norm_db);
            out << buf << scenario_name(p.scenario) << '\n';
        }
    }

    std::vector<double> normalized_powers(const MeasurementSet &set)
    {
        std::vector<double> out;
        out.reserve(set.size());
        for (const auto &r : set.records())
            out.push_back(normalize_power(r));
        return out;
    }

    std::vector<double> excess_delays(const MeasurementSet &set)
    {
        std::vector<double> out;
        out.reserve(set.size());
        for (const auto &link : group_links(set))
            for (const auto &p : normalize_delays(link))
                out.push_back(p.excess_delay_ns);
        return out;
    }

} // namespace chanstat
