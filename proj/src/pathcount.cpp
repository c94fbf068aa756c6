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

#include "chanstat/pathcount.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

namespace chanstat
{
    namespace
    {
        // x(ceil(n * num / den)) of sorted values, 1-based rank
        std::size_t nearest_rank(const std::vector<std::size_t> &sorted, std::size_t num, std::size_t den)
        {
            const std::size_t n = sorted.size();
            const std::size_t rank = std::max<std::size_t>(1, (n * num + den - 1) / den);
            return sorted[rank - 1];
        }
    } // namespace

    std::vector<NopSample> count_paths(std::span<const LinkGroup> links)
    {
        std::vector<NopSample> out;
        out.reserve(links.size());
        for (const auto &link : links)
            out.push_back({link.distance_m, link.paths.size()});
        return out;
    }

    long bin_index(double distance_m, double width_m)
    {
        if (!(width_m > 0.0) || !std::isfinite(width_m))
            throw std::invalid_argument("bin width must be finite and > 0.");
        return static_cast<long>(std::floor(distance_m / width_m));
    }

    std::vector<NopBin> bin_by_distance(std::span<const NopSample> samples, double width_m)
    {
        if (!(width_m > 0.0) || !std::isfinite(width_m))
            throw std::invalid_argument("bin width must be finite and > 0.");

        std::map<long, std::vector<std::size_t>> groups;
        for (const auto &s : samples)
            groups[bin_index(s.distance_m, width_m)].push_back(s.nop);

        std::vector<NopBin> bins;
        for (auto &[k, counts] : groups)
        {
            std::sort(counts.begin(), counts.end());
            NopBin bin;
            bin.lower = static_cast<double>(k) * width_m;
            bin.upper = static_cast<double>(k + 1) * width_m;
            bin.link_count = counts.size();
            bin.min = counts.front();
            bin.q1 = nearest_rank(counts, 1, 4);
            bin.median = nearest_rank(counts, 1, 2);
            bin.q3 = nearest_rank(counts, 3, 4);
            bin.max = counts.back();
            bins.push_back(bin);
        }
        return bins;
    }

    const NopBin &peak_bin(std::span<const NopBin> bins)
    {
        if (bins.empty())
            throw std::invalid_argument("peak_bin: no bins.");
        const NopBin *best = &bins.front();
        for (const auto &b : bins)
            if (b.median > best->median || (b.median == best->median && b.lower < best->lower))
                best = &b;
        return *best;
    }

    void write_bins_csv(std::span<const NopBin> bins, std::ostream &out)
    {
        out << "lower_m,upper_m,links,min,q1,median,q3,max\n";
        char buf[64];
        for (const auto &b : bins)
        {
            std::snprintf(buf, sizeof buf, "%.9g,%.9g,", b.lower, b.upper);
            out << buf << b.link_count << ',' << b.min << ',' << b.q1 << ',' << b.median << ','
                << b.q3 << ',' << b.max << '\n';
        }
    }

} // namespace chanstat
