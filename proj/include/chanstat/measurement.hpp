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

#ifndef CHANSTAT_MEASUREMENT_HPP
#define CHANSTAT_MEASUREMENT_HPP

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chanstat
{
    enum class Scenario
    {
        Los,
        Nlos
    };

    std::string_view scenario_name(Scenario scenario); // "LOS" / "NLOS"
    Scenario parse_scenario(std::string_view text);    // case-insensitive

    // One measured multipath component. Power is a path gain in dB (<= 0 for a passive channel).
    struct PathRecord
    {
        std::string location;
        std::string link_id;
        Scenario scenario = Scenario::Los;
        double distance_m = 0.0;
        double delay_ns = 0.0;
        double power_db = 0.0;
        double frequency_hz = 0.0;

        bool operator==(const PathRecord &) const = default;
    };

    // Throws std::invalid_argument naming the offending field
    void validate(const PathRecord &record);

    // Immutable, validated collection of records. Bit-identical duplicates are rejected.
    class MeasurementSet
    {
    public:
        MeasurementSet() = default;
        explicit MeasurementSet(std::vector<PathRecord> records, std::string provenance = {});

        const std::vector<PathRecord> &records() const { return records_; }
        const std::string &provenance() const { return provenance_; }
        std::size_t size() const { return records_.size(); }
        bool empty() const { return records_.empty(); }

    private:
        std::vector<PathRecord> records_;
        std::string provenance_;
    };

    // Parse failure with the 1-based line number of the offending row (header is line 1)
    class ParseError : public std::runtime_error
    {
    public:
        ParseError(std::size_t line, const std::string &message)
            : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

        std::size_t line() const { return line_; }

    private:
        std::size_t line_;
    };

    inline constexpr std::string_view kRecordHeader = "location,link_id,scenario,distance_m,delay_ns,power_db,frequency_hz";

    // Reads the CSV schema above. Columns after the seven required ones are ignored.
    MeasurementSet parse_records(std::istream &in, const std::string &provenance = "stream");

    // Writes the header and one row per record, reals with 9 significant digits
    void serialize_records(const MeasurementSet &set, std::ostream &out);

    // Records matching every given predicate, original order kept
    MeasurementSet filter(const MeasurementSet &set,
                          const std::optional<std::string> &location = std::nullopt,
                          const std::optional<Scenario> &scenario = std::nullopt);

    struct PathPoint
    {
        double delay_ns = 0.0;
        double power_db = 0.0;
    };

    // All paths of one Tx-Rx position pair
    struct LinkGroup
    {
        std::string link_id;
        std::string location;
        Scenario scenario = Scenario::Los;
        double distance_m = 0.0;
        double frequency_hz = 0.0;
        std::vector<PathPoint> paths; // ascending delay
    };

    // One group per distinct link_id in order of first appearance. Throws std::invalid_argument
    // when records of one link disagree on location, scenario, distance or frequency.
    std::vector<LinkGroup> group_links(const MeasurementSet &set);

    struct CountRow
    {
        std::string location;
        std::size_t los = 0;
        std::size_t nlos = 0;
    };

    struct CountTable
    {
        std::vector<CountRow> rows; // order of first appearance
        std::size_t los_total = 0;
        std::size_t nlos_total = 0;
    };

    CountTable summary_counts(const MeasurementSet &set);

} // namespace chanstat

#endif
