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

#ifndef CHANSTAT_SYNTHESIS_HPP
#define CHANSTAT_SYNTHESIS_HPP

#include "chanstat/distribution.hpp"
#include "chanstat/fit_results.hpp"
#include "chanstat/measurement.hpp"
#include "chanstat/pathcount.hpp"

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace chanstat
{
    // Empirical path counts per distance bin, anchored at 0 and right-open
    struct NopTableBin
    {
        double lower = 0.0;
        double upper = 0.0;
        std::vector<std::size_t> counts; // one entry per measured link
    };

    struct NopTable
    {
        double width_m = 10.0;
        std::vector<NopTableBin> bins; // ascending, nonempty bins only

        static NopTable from_samples(std::span<const NopSample> samples, double width_m = 10.0);

        // Bin containing the distance, or nullptr
        const NopTableBin *find(double distance_m) const;
    };

    // Everything needed to draw power-delay profiles for one location and scenario.
    // The delay law lives on excess delays, so its loc is 0.
    struct ChannelStatistics
    {
        std::string location;
        Scenario scenario = Scenario::Los;
        DistributionSpec power_spec{Family::Normal, 0.0, 1.0};
        DistributionSpec delay_spec{Family::Exponential, 0.0, 1.0};
        NopTable nop_table;
        double frequency_hz = 143.1e9;

        // Throws std::invalid_argument when an invariant is broken
        void validate() const;
    };

    struct SelectionPolicy
    {
        double min_qq_r = 0.95; // rows below this Q-Q correlation are not eligible
    };

    // Highest p-value among successful rows with qq_r >= min_qq_r. A lone successful row is
    // selected regardless of its scores. Throws std::runtime_error listing the candidates.
    const FitRow &select_fit(std::span<const FitRow> rows, const SelectionPolicy &policy = {});

    ChannelStatistics build_statistics(const std::string &location, Scenario scenario,
                                       std::span<const FitRow> power_rows, std::span<const FitRow> delay_rows,
                                       NopTable nop_table, double frequency_hz,
                                       const SelectionPolicy &policy = {});

    struct Tap
    {
        double delay_ns = 0.0;
        double gain_db = 0.0;
        double phase_rad = 0.0;
    };

    struct PdpRealization
    {
        double distance_m = 0.0;
        std::uint64_t seed = 0;
        std::vector<Tap> taps; // ascending delay, taps[0] at distance / c
    };

    // Draws one realization. The number of taps is n_paths when given, otherwise a uniformly chosen
    // measured count from the distance bin. The first tap sits at the free-space delay d / c; the
    // others add sorted excess delays from delay_spec. Every tap gain is -FSPL(d, f) plus a draw
    // from power_spec; phases are uniform on [0, 2 pi).
    PdpRealization sample_pdp(const ChannelStatistics &stats, double distance_m, std::uint64_t seed,
                              std::optional<std::size_t> n_paths = std::nullopt);

    // Taps on a uniform delay grid of spacing 1 / bandwidth starting at the first arrival.
    // Co-binned taps add coherently.
    struct ChannelImpulseResponse
    {
        double origin_ns = 0.0;
        double spacing_ns = 0.0;
        std::vector<std::complex<double>> taps;
    };

    ChannelImpulseResponse pdp_to_cir(const PdpRealization &pdp, double bandwidth_hz);

    struct EnsembleSummary
    {
        std::size_t realizations = 0;
        std::size_t taps = 0;
        double mean_taps = 0.0;
        double mean_excess_delay_ns = 0.0; // drawn excess delays only, first arrivals excluded
        double delay_ks_p = 0.0;           // pooled excess delays against delay_spec
        double power_ks_p = 0.0;           // pooled normalized powers against power_spec
    };

    // Pooled statistics of an ensemble. p-values are NaN when a pool is empty.
    EnsembleSummary summarize_ensemble(const ChannelStatistics &stats, std::span<const PdpRealization> ensemble);

    // Pooled excess delays (first arrival excluded) and normalized powers of an ensemble
    std::vector<double> pooled_excess_delays(std::span<const PdpRealization> ensemble);
    std::vector<double> pooled_normalized_powers(std::span<const PdpRealization> ensemble, double frequency_hz);

} // namespace chanstat

#endif
