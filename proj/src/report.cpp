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

#include "chanstat/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace chanstat
{
    namespace
    {
        constexpr int kParamDigits = 6;
        constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

        nlohmann::json number_or_null(double v, int digits = kParamDigits)
        {
            if (!std::isfinite(v))
                return nullptr;
            return round_significant(v, digits);
        }

        double number_from(const nlohmann::json &j)
        {
            return j.is_null() ? kNaN : j.get<double>();
        }

        std::vector<std::string> split_csv(const std::string &line)
        {
            std::vector<std::string> out;
            std::string field;
            std::istringstream ss(line);
            while (std::getline(ss, field, ','))
                out.push_back(field);
            if (!line.empty() && line.back() == ',')
                out.emplace_back();
            return out;
        }

        double parse_double(const std::string &s)
        {
            if (s.empty())
                return kNaN;
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc() || ptr != s.data() + s.size())
                throw std::invalid_argument("cannot parse number '" + s + "'");
            return v;
        }

        std::string csv_safe(std::string s)
        {
            for (char &c : s)
                if (c == ',' || c == '\n' || c == '\r')
                    c = ';';
            return s;
        }
    } // namespace

    double round_significant(double value, int digits)
    {
        if (!std::isfinite(value) || value == 0.0)
            return value;
        char buf[48];
        std::snprintf(buf, sizeof buf, "%.*g", digits, value);
        return std::strtod(buf, nullptr);
    }

    std::string format_significant(double value, int digits)
    {
        if (std::isnan(value))
            return {};
        char buf[48];
        std::snprintf(buf, sizeof buf, "%.*g", digits, value);
        return buf;
    }

    void write_file_atomic(const std::filesystem::path &path, const std::string &content)
    {
        std::filesystem::path tmp = path;
        tmp += ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out)
                throw std::runtime_error("cannot open " + tmp.string() + " for writing");
            out << content;
            out.flush();
            if (!out)
                throw std::runtime_error("failed writing " + tmp.string());
        }
        std::filesystem::rename(tmp, path);
    }

    nlohmann::json spec_to_json(const DistributionSpec &spec)
    {
        nlohmann::json shapes = nlohmann::json::array();
        for (double s : spec.shapes())
            shapes.push_back(round_significant(s, kParamDigits));
        return {{"family", family_name(spec.family())},
                {"loc", round_significant(spec.loc(), kParamDigits)},
                {"scale", round_significant(spec.scale(), kParamDigits)},
                {"shapes", shapes}};
    }

    DistributionSpec spec_from_json(const nlohmann::json &j)
    {
        return DistributionSpec(parse_family(j.at("family").get<std::string>()),
                                j.at("loc").get<double>(), j.at("scale").get<double>(),
                                j.value("shapes", std::vector<double>{}));
    }

    nlohmann::json fit_report_to_json(std::span<const FitReportGroup> groups)
    {
        nlohmann::json out_groups = nlohmann::json::array();
        for (const auto &entry : groups)
        {
            const FitGroup &g = entry.group;
            nlohmann::json fits = nlohmann::json::array();
            for (const auto &row : g.rows)
            {
                nlohmann::json f = {{"family", family_name(row.family)}, {"status", row.ok() ? "ok" : "error"}};
                f["p_value"] = number_or_null(row.p_value);
                f["R"] = number_or_null(row.qq_r);
                f["ks_d"] = number_or_null(row.ks_d);
                if (row.spec)
                    f["spec"] = spec_to_json(*row.spec);
                if (!row.error.empty())
                    f["message"] = row.error;
                fits.push_back(std::move(f));
            }
            out_groups.push_back({{"location", g.location},
                                  {"scenario", scenario_name(g.scenario)},
                                  {"quantity", quantity_name(g.quantity)},
                                  {"n", g.n},
                                  {"frequency_hz", number_or_null(entry.frequency_hz, 9)},
                                  {"fits", fits}});
        }
        return {{"format", "chanstat-fit-report"}, {"version", 1}, {"groups", out_groups}};
    }

    std::vector<FitReportGroup> fit_report_from_json(const nlohmann::json &j)
    {
        if (j.value("format", std::string{}) != "chanstat-fit-report")
            throw std::invalid_argument("not a chanstat fit report");
        std::vector<FitReportGroup> out;
        for (const auto &jg : j.at("groups"))
        {
            FitReportGroup entry;
            FitGroup &g = entry.group;
            g.location = jg.at("location").get<std::string>();
            g.scenario = parse_scenario(jg.at("scenario").get<std::string>());
            g.quantity = parse_quantity(jg.at("quantity").get<std::string>());
            g.n = jg.at("n").get<std::size_t>();
            entry.frequency_hz = number_from(jg.value("frequency_hz", nlohmann::json()));
            for (const auto &jf : jg.at("fits"))
            {
                FitRow row;
                row.family = parse_family(jf.at("family").get<std::string>());
                row.p_value = number_from(jf.value("p_value", nlohmann::json()));
                row.qq_r = number_from(jf.value("R", nlohmann::json()));
                row.ks_d = number_from(jf.value("ks_d", nlohmann::json()));
                row.n = g.n;
                if (jf.contains("spec"))
                    row.spec = spec_from_json(jf.at("spec"));
                if (jf.value("status", std::string("ok")) != "ok")
                    row.error = jf.value("message", std::string("fit failed"));
                g.rows.push_back(std::move(row));
            }
            out.push_back(std::move(entry));
        }
        return out;
    }

    void write_fit_report_csv(std::span<const FitReportGroup> groups, std::ostream &out)
    {
        out << "location,scenario,quantity,family,n,frequency_hz,p_value,R,loc,scale,shape1,shape2,ks_d,status,message\n";
        for (const auto &entry : groups)
        {
            const FitGroup &g = entry.group;
            for (const auto &row : g.rows)
            {
                out << g.location << ',' << scenario_name(g.scenario) << ',' << quantity_name(g.quantity) << ','
                    << family_name(row.family) << ',' << g.n << ',' << format_significant(entry.frequency_hz, 9) << ','
                    << format_significant(row.p_value, kParamDigits) << ',' << format_significant(row.qq_r, kParamDigits) << ',';
                if (row.spec)
                {
                    const auto &s = row.spec->shapes();
                    out << format_significant(row.spec->loc(), kParamDigits) << ','
                        << format_significant(row.spec->scale(), kParamDigits) << ','
                        << (s.size() > 0 ? format_significant(s[0], kParamDigits) : "") << ','
                        << (s.size() > 1 ? format_significant(s[1], kParamDigits) : "") << ',';
                }
                else
                    out << ",,,,";
                out << format_significant(row.ks_d, kParamDigits) << ',' << (row.ok() ? "ok" : "error") << ','
                    << csv_safe(row.error) << '\n';
            }
        }
    }

    std::vector<FitReportGroup> read_fit_report_csv(std::istream &in)
    {
        std::string line;
        if (!std::getline(in, line) || line.rfind("location,scenario,quantity,family", 0) != 0)
            throw std::invalid_argument("not a chanstat fit report CSV");
        std::vector<FitReportGroup> out;
        std::size_t line_no = 1;
        while (std::getline(in, line))
        {
            ++line_no;
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            if (line.empty())
                continue;
            const auto f = split_csv(line);
            if (f.size() != 15)
                throw ParseError(line_no, "expected 15 columns in fit report");
            const Scenario scenario = parse_scenario(f[1]);
            const Quantity quantity = parse_quantity(f[2]);
            if (out.empty() || out.back().group.location != f[0] || out.back().group.scenario != scenario ||
                out.back().group.quantity != quantity)
            {
                FitReportGroup entry;
                entry.group = {f[0], scenario, quantity, static_cast<std::size_t>(parse_double(f[4])), {}};
                entry.frequency_hz = parse_double(f[5]);
                out.push_back(std::move(entry));
            }
            FitGroup &g = out.back().group;
            FitRow row;
            row.family = parse_family(f[3]);
            row.n = g.n;
            row.p_value = parse_double(f[6]);
            row.qq_r = parse_double(f[7]);
            if (!f[8].empty() && !f[9].empty())
            {
                std::vector<double> shapes;
                for (std::size_t i = 0; i < shape_arity(row.family); ++i)
                    shapes.push_back(parse_double(f[10 + i]));
                row.spec = DistributionSpec(row.family, parse_double(f[8]), parse_double(f[9]), shapes);
            }
            row.ks_d = parse_double(f[12]);
            if (f[13] != "ok")
                row.error = f[14].empty() ? "fit failed" : f[14];
            g.rows.push_back(std::move(row));
        }
        return out;
    }

    std::vector<FitReportGroup> load_fit_report(const std::filesystem::path &path)
    {
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("cannot open fit report " + path.string());
        if (path.extension() == ".csv")
            return read_fit_report_csv(in);
        return fit_report_from_json(nlohmann::json::parse(in));
    }

    nlohmann::json counts_to_json(const CountTable &table)
    {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto &r : table.rows)
            rows.push_back({{"location", r.location}, {"LOS", r.los}, {"NLOS", r.nlos}});
        return {{"rows", rows}, {"total", {{"LOS", table.los_total}, {"NLOS", table.nlos_total}}}};
    }

    void write_counts_csv(const CountTable &table, std::ostream &out)
    {
        out << "location,LOS,NLOS\n";
        for (const auto &r : table.rows)
            out << r.location << ',' << r.los << ',' << r.nlos << '\n';
        out << "Total," << table.los_total << ',' << table.nlos_total << '\n';
    }

    nlohmann::json gof_to_json(const GofReport &report)
    {
        return {{"p_value", number_or_null(report.p_value)},
                {"R", number_or_null(report.qq_r)},
                {"ks_d", number_or_null(report.ks_d)},
                {"n", report.n},
                {"spec", spec_to_json(report.spec)}};
    }

    nlohmann::json bins_to_json(std::span<const NopBin> bins)
    {
        nlohmann::json out = nlohmann::json::array();
        for (const auto &b : bins)
            out.push_back({{"lower_m", b.lower}, {"upper_m", b.upper}, {"links", b.link_count}, {"min", b.min},
                           {"q1", b.q1}, {"median", b.median}, {"q3", b.q3}, {"max", b.max}});
        return out;
    }

    nlohmann::json realization_to_json(const PdpRealization &pdp)
    {
        nlohmann::json taps = nlohmann::json::array();
        for (const auto &t : pdp.taps)
            taps.push_back({{"delay_ns", t.delay_ns}, {"gain_db", t.gain_db}, {"phase_rad", t.phase_rad}});
        return {{"distance_m", pdp.distance_m}, {"seed", pdp.seed}, {"taps", taps}};
    }

    PdpRealization realization_from_json(const nlohmann::json &j)
    {
        PdpRealization pdp;
        pdp.distance_m = j.at("distance_m").get<double>();
        pdp.seed = j.at("seed").get<std::uint64_t>();
        for (const auto &t : j.at("taps"))
            pdp.taps.push_back({t.at("delay_ns").get<double>(), t.at("gain_db").get<double>(), t.at("phase_rad").get<double>()});
        return pdp;
    }

    nlohmann::json ensemble_summary_to_json(const EnsembleSummary &s)
    {
        return {{"realizations", s.realizations},
                {"taps", s.taps},
                {"mean_taps", number_or_null(s.mean_taps, 9)},
                {"mean_excess_delay_ns", number_or_null(s.mean_excess_delay_ns, 9)},
                {"delay_ks_p", number_or_null(s.delay_ks_p)},
                {"power_ks_p", number_or_null(s.power_ks_p)}};
    }

    void write_cir_csv(const ChannelImpulseResponse &cir, std::ostream &out)
    {
        out << "bin_index,delay_ns,re,im\n";
        char buf[128];
        for (std::size_t k = 0; k < cir.taps.size(); ++k)
        {
            std::snprintf(buf, sizeof buf, "%zu,%.9g,%.9g,%.9g\n", k, cir.origin_ns + static_cast<double>(k) * cir.spacing_ns,
                          cir.taps[k].real(), cir.taps[k].imag());
            out << buf;
        }
    }

} // namespace chanstat
