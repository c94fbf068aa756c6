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

#ifndef CHANSTAT_COMMANDS_HPP
#define CHANSTAT_COMMANDS_HPP

#include "chanstat/distribution.hpp"
#include "chanstat/fit_results.hpp"
#include "chanstat/measurement.hpp"
#include "chanstat/synthesis.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace chanstat
{
    enum class OutputFormat
    {
        Json,
        Csv
    };

    OutputFormat parse_format(std::string_view text);

    struct RunConfig
    {
        std::vector<std::filesystem::path> inputs;
        std::filesystem::path out_dir = ".";
        std::optional<std::string> location;
        std::optional<Scenario> scenario;
        std::vector<Family> families; // empty = every family applicable to the quantity
        bool fix_loc = true;          // pin delay fits at loc = 0
        double bin_width_m = 10.0;
        std::uint64_t seed = 1;
        OutputFormat format = OutputFormat::Json;
        unsigned workers = 0; // 0 = hardware concurrency

        // Throws std::invalid_argument
        void validate() const;
    };

    // Flag beats environment beats default
    std::uint64_t resolve_seed(std::optional<std::uint64_t> flag, const char *env_value, std::uint64_t fallback = 1);

    struct GofConfig
    {
        Quantity quantity = Quantity::Power;
        std::optional<DistributionSpec> spec;
    };

    struct SynthConfig
    {
        std::optional<std::filesystem::path> fits; // fit report (json or csv)
        std::optional<std::string> preset;
        double distance_m = 0.0;
        std::size_t count = 1;
        std::optional<std::size_t> n_paths;     // fixed NoP, else drawn from --input data
        std::optional<double> bandwidth_hz;     // also export CIRs
        SelectionPolicy policy;
    };

    // Load and merge every input file, then apply the location/scenario filters.
    // Parse errors carry "<file>: line N: ...".
    MeasurementSet load_inputs(const RunConfig &config);

    // Each command returns the process exit code and writes diagnostics to `diag`.
    int cmd_ingest(const RunConfig &config, std::ostream &diag);
    int cmd_fit(const RunConfig &config, std::ostream &diag);
    int cmd_gof(const RunConfig &config, const GofConfig &gof, std::ostream &diag);
    int cmd_nop(const RunConfig &config, std::ostream &diag);
    int cmd_synth(const RunConfig &config, const SynthConfig &synth, std::ostream &diag);

} // namespace chanstat

#endif
