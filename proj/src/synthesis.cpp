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

#include "chanstat/synthesis.hpp"
#include "chanstat/gof.hpp"
#include "chanstat/normalization.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

namespace chanstat
{
    NopTable NopTable::from_samples(std::span<const NopSample> samples, double width_m)
    {
        NopTable table;
        table.width_m = width_m;
        std::map<long, std::vector<std::size_t>> groups;
        for (const auto &s : samples)
            groups[bin_index(s.distance_m, width_m)].push_back(s.nop);
        for (auto &[k, counts] : groups)
            table.bins.push_back({static_cast<double>(k) * width_m, static_cast<double>(k + 1) * width_m, std::move(counts)});
        return table;
    }

    const NopTableBin *NopTable::find(double distance_m) const
    {
        if (bins.empty())
            return nullptr;
        const long k = bin_index(distance_m, width_m);
        for (const auto &b : bins)
            if (bin_index(b.lower, width_m) == k)
                return &b;
        return nullptr;
    }

    void ChannelStatistics::validate() const
    {
        if (delay_spec.loc() != 0.0)
            throw std::invalid_argument("delay_spec must have loc = 0.");
        if (!(frequency_hz > 0.0) || !std::isfinite(frequency_hz))
            throw std::invalid_argument("frequency must be finite and > 0.");
        if (!(nop_table.width_m > 0.0))
            throw std::invalid_argument("NoP table bin width must be > 0.");
        for (const auto &b : nop_table.bins)
            if (b.counts.empty())
                throw std::invalid_argument("NoP table contains an empty bin.");
    }

    const FitRow &select_fit(std::span<const FitRow> rows, const SelectionPolicy &policy)
    {
        const FitRow *best = nullptr;
        std::size_t successful = 0;
        const FitRow *only = nullptr;
        for (const auto &row : rows)
        {
            if (!row.ok())
                continue;
            ++successful;
            only = &row;
            if (!(row.qq_r >= policy.min_qq_r) || std::isnan(row.p_value))
                continue;
            if (!best || row.p_value > best->p_value)
                best = &row;
        }
        if (successful == 1)
            return *only;
        if (best)
            return *best;

        std::string message = "no fit meets the selection policy (R >= " + std::to_string(policy.min_qq_r) + "); candidates:";
        if (rows.empty())
            message += " none";
        char buf[128];
        for (const auto &row : rows)
        {
            if (row.ok())
                std::snprintf(buf, sizeof buf, " %s (p=%.4g, R=%.4g)", std::string(family_name(row.family)).c_str(), row.p_value, row.qq_r);
            else
                std::snprintf(buf, sizeof buf, " %s (failed)", std::string(family_name(row.family)).c_str());
            message += buf;
        }
        throw std::runtime_error(message);
    }

    ChannelStatistics build_statistics(const std::string &location, Scenario scenario,
                                       std::span<const FitRow> power_rows, std::span<const FitRow> delay_rows,
                                       NopTable nop_table, double frequency_hz,
                                       const SelectionPolicy &policy)
    {
        const FitRow &power = select_fit(power_rows, policy);
        const FitRow &delay = select_fit(delay_rows, policy);
        ChannelStatistics stats{location, scenario, *power.spec, *delay.spec, std::move(nop_table), frequency_hz};
        stats.validate();
        return stats;
    }

    PdpRealization sample_pdp(const ChannelStatistics &stats, double distance_m, std::uint64_t seed,
                              std::optional<std::size_t> n_paths)
    {
        if (!(distance_m > 0.0) || !std::isfinite(distance_m))
            throw std::invalid_argument("sample_pdp: distance must be finite and > 0.");
        if (n_paths && *n_paths == 0)
            throw std::invalid_argument("sample_pdp: n_paths must be >= 1.");

        Rng rng(seed);
        std::size_t count;
        if (n_paths)
            count = *n_paths;
        else
        {
            const NopTableBin *bin = stats.nop_table.find(distance_m);
            if (!bin)
            {
                char buf[160];
                std::snprintf(buf, sizeof buf, "sample_pdp: distance %.6g m is outside the NoP table coverage; pass n_paths explicitly.", distance_m);
                throw std::out_of_range(buf);
            }
            count = bin->counts[rng.index(bin->counts.size())];
        }

        std::vector<double> excess = sample(stats.delay_spec, count - 1, rng);
        std::sort(excess.begin(), excess.end());
        const std::vector<double> powers = sample(stats.power_spec, count, rng);

        const double first_ns = distance_m / kSpeedOfLight * 1e9;
        const double loss = fspl_db(distance_m, stats.frequency_hz);

        PdpRealization pdp;
        pdp.distance_m = distance_m;
        pdp.seed = seed;
        pdp.taps.reserve(count);
        for (std::size_t i = 0; i < count; ++i)
        {
            const double delay = i == 0 ? first_ns : first_ns + excess[i - 1];
            pdp.taps.push_back({delay, powers[i] - loss, 2.0 * std::numbers::pi * rng.uniform()});
        }
        return pdp;
    }

    ChannelImpulseResponse pdp_to_cir(const PdpRealization &pdp, double bandwidth_hz)
    {
        if (!(bandwidth_hz > 0.0) || !std::isfinite(bandwidth_hz))
            throw std::invalid_argument("pdp_to_cir: bandwidth must be finite and > 0.");
        ChannelImpulseResponse cir;
        cir.spacing_ns = 1e9 / bandwidth_hz;
        if (pdp.taps.empty())
            return cir;
        cir.origin_ns = pdp.taps.front().delay_ns;
        for (const auto &tap : pdp.taps)
        {
            const auto k = static_cast<std::size_t>(std::llround((tap.delay_ns - cir.origin_ns) / cir.spacing_ns));
            if (k >= cir.taps.size())
                cir.taps.resize(k + 1);
            cir.taps[k] += std::polar(std::pow(10.0, tap.gain_db / 20.0), tap.phase_rad);
        }
        return cir;
    }

    std::vector<double> pooled_excess_delays(std::span<const PdpRealization> ensemble)
    {
        std::vector<double> out;
        for (const auto &pdp : ensemble)
            for (std::size_t i = 1; i < pdp.taps.size(); ++i)
                out.push_back(pdp.taps[i].delay_ns - pdp.taps.front().delay_ns);
        return out;
    }

    std::vector<double> pooled_normalized_powers(std::span<const PdpRealization> ensemble, double frequency_hz)
    {
        std::vector<double> out;
        for (const auto &pdp : ensemble)
        {
            const double loss = fspl_db(pdp.distance_m, frequency_hz);
            for (const auto &tap : pdp.taps)
                out.push_back(tap.gain_db + loss);
        }
        return out;
    }

    EnsembleSummary summarize_ensemble(const ChannelStatistics &stats, std::span<const PdpRealization> ensemble)
    {
        constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
        EnsembleSummary summary;
        summary.realizations = ensemble.size();
        for (const auto &pdp : ensemble)
            summary.taps += pdp.taps.size();
        summary.mean_taps = ensemble.empty() ? kNaN : static_cast<double>(summary.taps) / static_cast<double>(ensemble.size());

        const auto delays = pooled_excess_delays(ensemble);
        const auto powers = pooled_normalized_powers(ensemble, stats.frequency_hz);
        summary.mean_excess_delay_ns = kNaN;
        summary.delay_ks_p = kNaN;
        summary.power_ks_p = kNaN;
        if (!delays.empty())
        {
            double sum = 0.0;
            for (double d : delays)
                sum += d;
            summary.mean_excess_delay_ns = sum / static_cast<double>(delays.size());
            summary.delay_ks_p = ks_pvalue(ks_statistic(delays, stats.delay_spec), delays.size());
        }
        if (!powers.empty())
            summary.power_ks_p = ks_pvalue(ks_statistic(powers, stats.power_spec), powers.size());
        return summary;
    }

} // namespace chanstat
