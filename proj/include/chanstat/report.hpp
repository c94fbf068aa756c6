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

#ifndef CHANSTAT_REPORT_HPP
#define CHANSTAT_REPORT_HPP

#include "chanstat/distribution.hpp"
#include "chanstat/fit_results.hpp"
#include "chanstat/gof.hpp"
#include "chanstat/measurement.hpp"
#include "chanstat/pathcount.hpp"
#include "chanstat/synthesis.hpp"

#include "json.hpp"

#include <filesystem>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace chanstat
{
    // Value rounded to `digits` significant digits (NaN and infinities pass through)
    double round_significant(double value, int digits);

    // "%.<digits>g", or an empty string for NaN
    std::string format_significant(double value, int digits);

    // Writes to a temporary sibling and renames it over `path`
    void write_file_atomic(const std::filesystem::path &path, const std::string &content);

    // {family, loc, scale, shapes[]} with 6 significant digits
    nlohmann::json spec_to_json(const DistributionSpec &spec);
    DistributionSpec spec_from_json(const nlohmann::json &j);

    // Fit reports. A group additionally carries the carrier frequency of its data.
    struct FitReportGroup
    {
        FitGroup group;
        double frequency_hz = 0.0;
    };

    nlohmann::json fit_report_to_json(std::span<const FitReportGroup> groups);
    std::vector<FitReportGroup> fit_report_from_json(const nlohmann::json &j);

    // location,scenario,quantity,family,n,frequency_hz,p_value,R,loc,scale,shape1,shape2,ks_d,status,message
    void write_fit_report_csv(std::span<const FitReportGroup> groups, std::ostream &out);
    std::vector<FitReportGroup> read_fit_report_csv(std::istream &in);

    // Either format, chosen by file extension
    std::vector<FitReportGroup> load_fit_report(const std::filesystem::path &path);

    nlohmann::json counts_to_json(const CountTable &table);
    void write_counts_csv(const CountTable &table, std::ostream &out);

    nlohmann::json gof_to_json(const GofReport &report);

    nlohmann::json bins_to_json(std::span<const NopBin> bins);

    nlohmann::json realization_to_json(const PdpRealization &pdp);
    PdpRealization realization_from_json(const nlohmann::json &j);

    nlohmann::json ensemble_summary_to_json(const EnsembleSummary &summary);

    // bin_index,delay_ns,re,im
    void write_cir_csv(const ChannelImpulseResponse &cir, std::ostream &out);

} // namespace chanstat

#endif
