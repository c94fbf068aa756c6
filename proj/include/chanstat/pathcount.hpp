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

#ifndef CHANSTAT_PATHCOUNT_HPP
#define CHANSTAT_PATHCOUNT_HPP

#include "chanstat/measurement.hpp"

#include <cstddef>
#include <ostream>
#include <span>
#include <vector>

namespace chanstat
{
    struct NopSample
    {
        double distance_m = 0.0;
        std::size_t nop = 0;
    };

    // Box statistics of the path counts of the links in [lower, upper).
    // Quartiles and median are nearest-rank order statistics: q1 = x(ceil(n/4)),
    // median = x(ceil(n/2)) (the lower median for even n), q3 = x(ceil(3n/4)).
    struct NopBin
    {
        double lower = 0.0;
        double upper = 0.0;
        std::size_t link_count = 0;
        std::size_t min = 0;
        std::size_t q1 = 0;
        std::size_t median = 0;
        std::size_t q3 = 0;
        std::size_t max = 0;
    };

    std::vector<NopSample> count_paths(std::span<const LinkGroup> links);

    // Index of the right-open bin [k w, (k + 1) w) containing distance
    long bin_index(double distance_m, double width_m);

    // Bins anchored at 0, ascending, empty bins omitted
    std::vector<NopBin> bin_by_distance(std::span<const NopSample> samples, double width_m = 10.0);

    // Bin with the largest median, ties broken toward the smaller lower bound
    const NopBin &peak_bin(std::span<const NopBin> bins);

    // CSV with header lower_m,upper_m,links,min,q1,median,q3,max
    void write_bins_csv(std::span<const NopBin> bins, std::ostream &out);

} // namespace chanstat

#endif
