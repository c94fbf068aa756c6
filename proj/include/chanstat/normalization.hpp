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

#ifndef CHANSTAT_NORMALIZATION_HPP
#define CHANSTAT_NORMALIZATION_HPP

#include "chanstat/measurement.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace chanstat
{
    inline constexpr double kSpeedOfLight = 299792458.0; // m/s

    // Free-space path loss 20 log10(4 pi f d / c) in dB
    double fspl_db(double distance_m, double frequency_hz);

    // Path gain with the free-space loss of the link distance removed: P + FSPL(d, f).
    // A direct path in free space maps to 0 dB.
    double normalize_power(const PathRecord &record);

    struct NormalizedPath
    {
        double excess_delay_ns = 0.0;
        double normalized_power_db = 0.0;
        std::string location;
        Scenario scenario = Scenario::Los;
        std::string link_id;
        double distance_m = 0.0;
    };

    // Delays relative to the first arrival of the link; the first path gets exactly 0
    std::vector<NormalizedPath> normalize_delays(const LinkGroup &link);

    struct PdpPoint
    {
        double delay_ns = 0.0;       // measured (absolute) delay
        double power_norm_db = 0.0;
        Scenario scenario = Scenario::Los;
    };

    std::vector<PdpPoint> pdp_points(const MeasurementSet &set);

    // CSV with header delay_ns,power_norm_db,scenario
    void write_pdp_csv(const std::vector<PdpPoint> &points, std::ostream &out);

    // Normalized powers of all records, in record order
    std::vector<double> normalized_powers(const MeasurementSet &set);

    // Excess delays of all paths, link by link
    std::vector<double> excess_delays(const MeasurementSet &set);

} // namespace chanstat

#endif
