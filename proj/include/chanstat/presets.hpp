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

#ifndef CHANSTAT_PRESETS_HPP
#define CHANSTAT_PRESETS_HPP

#include "chanstat/fit_results.hpp"
#include "chanstat/synthesis.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace chanstat
{
    inline constexpr double kPresetFrequencyHz = 143.1e9;

    // Published fits for the indoor D-band sites Sello, Airport, TUAS and TUAS2: normalized-power
    // rows for nine families and excess-delay rows for Exponential and Weibull, with their
    // reported p-value and Q-Q correlation. Rows whose parameters were not published completely
    // (Beta with a single shape, Weibull without a shape) are kept as failed rows so they show
    // up in listings but can never be selected.
    std::vector<FitGroup> preset_fit_groups();

    // "sello-los", "sello-nlos", ..., "tuas2-nlos"
    std::vector<std::string> preset_names();

    // Statistics assembled from the preset rows with the given policy. The NoP table is empty,
    // so sample_pdp needs an explicit path count.
    ChannelStatistics preset_statistics(std::string_view name, const SelectionPolicy &policy = {});

} // namespace chanstat

#endif
