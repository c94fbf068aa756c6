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

#include "chanstat/measurement.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <tuple>
#include <unordered_map>

namespace chanstat
{
    namespace
    {
        using RecordKey = std::tuple<std::string, std::string, int, double, double, double, double>;

        RecordKey key_of(const PathRecord &r)
        {
            return {r.location, r.link_id, static_cast<int>(r.scenario), r.distance_m, r.delay_ns, r.power_db, r.frequency_hz};
        }

        std::string_view trim(std::string_view s)
        {
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
                s.remove_prefix(1);
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
                s.remove_suffix(1);
            return s;
        }

        std::vector<std::string_view> split(std::string_view line)
        {
            std::vector<std::string_view> out;
            std::size_t start = 0;
            while (true)
            {
                const std::size_t comma = line.find(',', start);
                if (comma == std::string_view::npos)
                {
                    out.push_back(trim(line.substr(start)));
                    break;
                }
                out.push_back(trim(line.substr(start, comma - start)));
                start = comma + 1;
            }
            return out;
        }

        std::optional<double> parse_real(std::string_view text)
        {
            if (!text.empty() && text.front() == '+')
                text.remove_prefix(1);
            double value = 0.0;
            const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
                return std::nullopt;
            return value;
        }

        std::string format_real(double v)
        {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.9g", v);
            return buf;
        }

        constexpr std::array<std::string_view, 7> kColumns = {
            "location", "link_id", "scenario", "distance_m", "delay_ns", "power_db", "frequency_hz"};
    } // namespace

    std::string_view scenario_name(Scenario scenario)
    {
        return scenario == Scenario::Los ? "LOS" : "NLOS";
    }

    Scenario parse_scenario(std::string_view text)
    {
        std::string upper;
        for (char c : trim(text))
            upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
        if (upper == "LOS")
            return Scenario::Los;
        if (upper == "NLOS")
            return Scenario::Nlos;
        throw std::invalid_argument("unknown scenario '" + std::string(text) + "' (expected LOS or NLOS)");
    }

    void validate(const PathRecord &r)
    {
        if (r.location.empty())
            throw std::invalid_argument("location: must not be empty");
        if (r.link_id.empty())
            throw std::invalid_argument("link_id: must not be empty");
        if (!(r.distance_m > 0.0) || !std::isfinite(r.distance_m))
            throw std::invalid_argument("distance_m: must be finite and > 0");
        if (!(r.delay_ns > 0.0) || !std::isfinite(r.delay_ns))
            throw std::invalid_argument("delay_ns: must be finite and > 0");
        if (!std::isfinite(r.power_db))
            throw std::invalid_argument("power_db: must be finite");
        if (!(r.frequency_hz > 0.0) || !std::isfinite(r.frequency_hz))
            throw std::invalid_argument("frequency_hz: must be finite and > 0");
        for (const std::string *field : {&r.location, &r.link_id})
            if (field->find_first_of(",\n\r") != std::string::npos)
                throw std::invalid_argument((field == &r.location ? "location" : "link_id") +
                                            std::string(": must not contain commas or line breaks"));
    }

    MeasurementSet::MeasurementSet(std::vector<PathRecord> records, std::string provenance)
        : records_(std::move(records)), provenance_(std::move(provenance))
    {
        std::set<RecordKey> seen;
        for (std::size_t i = 0; i < records_.size(); ++i)
        {
            validate(records_[i]);
            if (!seen.insert(key_of(records_[i])).second)
                throw std::invalid_argument("duplicate record at index " + std::to_string(i));
        }
    }

    MeasurementSet parse_records(std::istream &in, const std::string &provenance)
    {
        std::string line;
        std::size_t line_no = 0;
        std::size_t columns = 0;
        std::vector<PathRecord> records;
        std::map<RecordKey, std::size_t> first_line;

        while (std::getline(in, line))
        {
            ++line_no;
            std::string_view view(line);
            if (line_no == 1 && view.substr(0, 3) == "\xEF\xBB\xBF")
                view.remove_prefix(3);
            if (trim(view).empty())
            {
                if (line_no == 1)
                    throw ParseError(line_no, "missing header row");
                continue;
            }

            const auto fields = split(view);
            if (columns == 0)
            {
                if (fields.size() < kColumns.size())
                    throw ParseError(line_no, "header must start with " + std::string(kRecordHeader));
                for (std::size_t i = 0; i < kColumns.size(); ++i)
                    if (fields[i] != kColumns[i])
                        throw ParseError(line_no, "header column " + std::to_string(i + 1) + " must be '" +
                                                      std::string(kColumns[i]) + "', got '" + std::string(fields[i]) + "'");
                columns = fields.size();
                continue;
            }

            if (fields.size() != columns)
                throw ParseError(line_no, "expected " + std::to_string(columns) + " columns, got " + std::to_string(fields.size()));

            PathRecord r;
            r.location = std::string(fields[0]);
            r.link_id = std::string(fields[1]);
            try
            {
                r.scenario = parse_scenario(fields[2]);
            }
            catch (const std::invalid_argument &e)
            {
                throw ParseError(line_no, e.what());
            }
            double *targets[] = {&r.distance_m, &r.delay_ns, &r.power_db, &r.frequency_hz};
            for (std::size_t i = 0; i < 4; ++i)
            {
                const auto value = parse_real(fields[3 + i]);
                if (!value)
                    throw ParseError(line_no, std::string(kColumns[3 + i]) + ": cannot parse number '" + std::string(fields[3 + i]) + "'");
                *targets[i] = *value;
            }
            try
            {
                validate(r);
            }
            catch (const std::invalid_argument &e)
            {
                throw ParseError(line_no, e.what());
            }
            const auto [it, inserted] = first_line.emplace(key_of(r), line_no);
            if (!inserted)
                throw ParseError(line_no, "duplicate of line " + std::to_string(it->second));
            records.push_back(std::move(r));
        }
        if (columns == 0)
            throw ParseError(line_no + 1, "missing header row");
        return MeasurementSet(std::move(records), provenance);
    }

    void serialize_records(const MeasurementSet &set, std::ostream &out)
    {
        out << kRecordHeader << '\n';
        for (const auto &r : set.records())
        {
            out << r.location << ',' << r.link_id << ',' << scenario_name(r.scenario) << ','
                << format_real(r.distance_m) << ',' << format_real(r.delay_ns) << ','
                << format_real(r.power_db) << ',' << format_real(r.frequency_hz) << '\n';
        }
    }

    MeasurementSet filter(const MeasurementSet &set,
                          const std::optional<std::string> &location,
                          const std::optional<Scenario> &scenario)
    {
        std::vector<PathRecord> out;
        for (const auto &r : set.records())
        {
            if (location && r.location != *location)
                continue;
            if (scenario && r.scenario != *scenario)
                continue;
            out.push_back(r);
        }
        return MeasurementSet(std::move(out), set.provenance());
    }

    std::vector<LinkGroup> group_links(const MeasurementSet &set)
    {
        std::vector<LinkGroup> groups;
        std::unordered_map<std::string, std::size_t> index;
        for (const auto &r : set.records())
        {
            const auto [it, inserted] = index.emplace(r.link_id, groups.size());
            if (inserted)
            {
                LinkGroup g;
                g.link_id = r.link_id;
                g.location = r.location;
                g.scenario = r.scenario;
                g.distance_m = r.distance_m;
                g.frequency_hz = r.frequency_hz;
                groups.push_back(std::move(g));
            }
            LinkGroup &g = groups[it->second];
            const char *field = nullptr;
            if (g.location != r.location)
                field = "location";
            else if (g.scenario != r.scenario)
                field = "scenario";
            else if (g.distance_m != r.distance_m)
                field = "distance_m";
            else if (g.frequency_hz != r.frequency_hz)
                field = "frequency_hz";
            if (field)
                throw std::invalid_argument("link '" + r.link_id + "': inconsistent " + field + " across records");
            g.paths.push_back({r.delay_ns, r.power_db});
        }
        for (auto &g : groups)
            std::stable_sort(g.paths.begin(), g.paths.end(), [](const PathPoint &a, const PathPoint &b)
                             { return a.delay_ns < b.delay_ns; });
        return groups;
    }

    CountTable summary_counts(const MeasurementSet &set)
    {
        CountTable table;
        std::unordered_map<std::string, std::size_t> index;
        for (const auto &r : set.records())
        {
            const auto [it, inserted] = index.emplace(r.location, table.rows.size());
            if (inserted)
                table.rows.push_back({r.location, 0, 0});
            CountRow &row = table.rows[it->second];
            if (r.scenario == Scenario::Los)
            {
                ++row.los;
                ++table.los_total;
            }
            else
            {
                ++row.nlos;
                ++table.nlos_total;
            }
        }
        return table;
    }

} // namespace chanstat
