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

#include "chanstat/commands.hpp"
#include "chanstat/gof.hpp"
#include "chanstat/normalization.hpp"
#include "chanstat/pathcount.hpp"
#include "chanstat/presets.hpp"
#include "chanstat/report.hpp"
#include "chanstat/rng.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

namespace chanstat
{
    namespace
    {
        namespace fs = std::filesystem;

        struct Selection
        {
            std::string location;
            Scenario scenario;
            MeasurementSet data;
        };

        // (location, scenario) pairs in order of first appearance
        std::vector<Selection> split_groups(const MeasurementSet &set)
        {
            std::vector<Selection> out;
            std::vector<std::vector<PathRecord>> records;
            for (const auto &r : set.records())
            {
                std::size_t k = 0;
                while (k < out.size() && !(out[k].location == r.location && out[k].scenario == r.scenario))
                    ++k;
                if (k == out.size())
                {
                    out.push_back({r.location, r.scenario, {}});
                    records.emplace_back();
                }
                records[k].push_back(r);
            }
            for (std::size_t k = 0; k < out.size(); ++k)
                out[k].data = MeasurementSet(std::move(records[k]), set.provenance());
            return out;
        }

        unsigned worker_count(const RunConfig &config, std::size_t tasks)
        {
            unsigned n = config.workers ? config.workers : std::max(1u, std::thread::hardware_concurrency());
            return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(tasks, 1)));
        }

        // Runs body(i) for i in [0, n). Results must be written by index so order never depends on scheduling.
        void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)> &body)
        {
            if (workers <= 1)
            {
                for (std::size_t i = 0; i < n; ++i)
                    body(i);
                return;
            }
            std::atomic<std::size_t> next{0};
            std::exception_ptr failure;
            std::mutex failure_mutex;
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < workers; ++w)
                pool.emplace_back([&]
                                  {
                    for (std::size_t i = next++; i < n; i = next++)
                    {
                        try
                        {
                            body(i);
                        }
                        catch (...)
                        {
                            std::lock_guard lock(failure_mutex);
                            if (!failure)
                                failure = std::current_exception();
                        }
                    } });
            for (auto &t : pool)
                t.join();
            if (failure)
                std::rethrow_exception(failure);
        }

        void emit(const RunConfig &config, const std::string &name, const std::string &content)
        {
            write_file_atomic(config.out_dir / name, content);
        }

        std::string dump(const nlohmann::json &j)
        {
            return j.dump(2) + "\n";
        }

        std::string real(double v, int digits = 9)
        {
            char buf[48];
            std::snprintf(buf, sizeof buf, "%.*g", digits, v);
            return buf;
        }

        std::string group_label(const std::string &location, Scenario scenario)
        {
            return location + " " + std::string(scenario_name(scenario));
        }

        std::vector<Family> families_for(const RunConfig &config, std::span<const Family> applicable)
        {
            if (config.families.empty())
                return {applicable.begin(), applicable.end()};
            std::vector<Family> out;
            for (Family f : config.families)
                if (std::find(applicable.begin(), applicable.end(), f) != applicable.end() &&
                    std::find(out.begin(), out.end(), f) == out.end())
                    out.push_back(f);
            return out;
        }

        // Plot data: fitted densities on a grid over the data range and a density histogram
        void append_curves(std::ostringstream &out, const FitGroup &g, std::span<const double> data)
        {
            if (data.empty())
                return;
            const auto [lo_it, hi_it] = std::minmax_element(data.begin(), data.end());
            const double lo = *lo_it, hi = *hi_it;
            constexpr int kPoints = 200;
            for (const auto &row : g.rows)
            {
                if (!row.ok())
                    continue;
                for (int i = 0; i < kPoints; ++i)
                {
                    const double x = lo + (hi - lo) * i / (kPoints - 1);
                    out << quantity_name(g.quantity) << ',' << g.location << ',' << scenario_name(g.scenario) << ','
                        << family_name(row.family) << ',' << real(x) << ',' << real(pdf(*row.spec, x)) << '\n';
                }
            }
        }

        void append_histogram(std::ostringstream &out, const FitGroup &g, std::span<const double> data)
        {
            if (data.empty())
                return;
            const auto [lo_it, hi_it] = std::minmax_element(data.begin(), data.end());
            const double lo = *lo_it, hi = *hi_it;
            const std::size_t bins = std::clamp<std::size_t>(static_cast<std::size_t>(std::ceil(std::sqrt(data.size()))), 1, 100);
            const double width = hi > lo ? (hi - lo) / static_cast<double>(bins) : 1.0;
            std::vector<std::size_t> counts(bins, 0);
            for (double x : data)
                ++counts[std::min(bins - 1, static_cast<std::size_t>((x - lo) / width))];
            for (std::size_t k = 0; k < bins; ++k)
                out << quantity_name(g.quantity) << ',' << g.location << ',' << scenario_name(g.scenario) << ','
                    << real(lo + width * k) << ',' << real(lo + width * (k + 1)) << ','
                    << real(counts[k] / (static_cast<double>(data.size()) * width)) << '\n';
        }

        void append_qq(std::ostringstream &out, const FitGroup &g, std::span<const double> data)
        {
            for (const auto &row : g.rows)
            {
                if (!row.ok())
                    continue;
                for (const auto &p : qq_points(data, *row.spec))
                    out << quantity_name(g.quantity) << ',' << g.location << ',' << scenario_name(g.scenario) << ','
                        << family_name(row.family) << ',' << real(p.theoretical) << ',' << real(p.empirical) << '\n';
            }
        }

        template <class F>
        int guarded(std::ostream &diag, F &&body)
        {
            try
            {
                return body();
            }
            catch (const std::exception &e)
            {
                diag << "error: " << e.what() << '\n';
                return 1;
            }
        }

        std::string lower(std::string_view s)
        {
            std::string out;
            for (char c : s)
                out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
            return out;
        }
    } // namespace

    OutputFormat parse_format(std::string_view text)
    {
        const std::string t = lower(text);
        if (t == "json")
            return OutputFormat::Json;
        if (t == "csv")
            return OutputFormat::Csv;
        throw std::invalid_argument("unknown format '" + std::string(text) + "' (expected json or csv)");
    }

    void RunConfig::validate() const
    {
        if (!(bin_width_m > 0.0) || !std::isfinite(bin_width_m))
            throw std::invalid_argument("bin width must be finite and > 0");
        if (out_dir.empty())
            throw std::invalid_argument("output directory must not be empty");
        std::error_code ec;
        fs::create_directories(out_dir, ec);
        if (!fs::is_directory(out_dir))
            throw std::invalid_argument("output directory '" + out_dir.string() + "' cannot be created");
    }

    std::uint64_t resolve_seed(std::optional<std::uint64_t> flag, const char *env_value, std::uint64_t fallback)
    {
        if (flag)
            return *flag;
        if (env_value && *env_value)
        {
            const std::string_view text(env_value);
            std::uint64_t value = 0;
            const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc() || ptr != text.data() + text.size())
                throw std::invalid_argument("CHANSTAT_SEED: cannot parse '" + std::string(text) + "' as an unsigned integer");
            return value;
        }
        return fallback;
    }

    MeasurementSet load_inputs(const RunConfig &config)
    {
        if (config.inputs.empty())
            throw std::invalid_argument("no input file given");
        std::vector<PathRecord> records;
        std::string provenance;
        for (const auto &path : config.inputs)
        {
            std::ifstream in(path, std::ios::binary);
            if (!in)
                throw std::runtime_error(path.string() + ": cannot open");
            provenance += (provenance.empty() ? "" : ";") + path.string();
            if (in.peek() == std::ifstream::traits_type::eof())
                continue; // a zero-byte file is an empty dataset
            try
            {
                const MeasurementSet part = parse_records(in, path.string());
                records.insert(records.end(), part.records().begin(), part.records().end());
            }
            catch (const ParseError &e)
            {
                throw std::runtime_error(path.string() + ": " + e.what());
            }
        }
        return filter(MeasurementSet(std::move(records), provenance), config.location, config.scenario);
    }

    int cmd_ingest(const RunConfig &config, std::ostream &diag)
    {
        return guarded(diag, [&]
                       {
            config.validate();
            const MeasurementSet set = load_inputs(config);
            group_links(set); // link consistency

            std::ostringstream dataset;
            serialize_records(set, dataset);
            emit(config, "dataset.csv", dataset.str());

            const CountTable counts = summary_counts(set);
            if (config.format == OutputFormat::Json)
                emit(config, "counts.json", dump(counts_to_json(counts)));
            else
            {
                std::ostringstream csv;
                write_counts_csv(counts, csv);
                emit(config, "counts.csv", csv.str());
            }

            std::ostringstream pdp;
            write_pdp_csv(pdp_points(set), pdp);
            emit(config, "pdp.csv", pdp.str());

            diag << "location,LOS,NLOS\n";
            for (const auto &r : counts.rows)
                diag << r.location << ',' << r.los << ',' << r.nlos << '\n';
            diag << "Total," << counts.los_total << ',' << counts.nlos_total << '\n';
            return 0; });
    }

    int cmd_fit(const RunConfig &config, std::ostream &diag)
    {
        return guarded(diag, [&]
                       {
            config.validate();
            const MeasurementSet set = load_inputs(config);
            if (set.empty())
                throw std::runtime_error("selection contains no records");

            const auto power_families = families_for(config, kPowerFamilies);
            const auto delay_families = families_for(config, kDelayFamilies);
            if (power_families.empty() && delay_families.empty())
                throw std::invalid_argument("family list selects no power or delay family");

            struct Task
            {
                const Selection *selection;
                Quantity quantity;
                std::vector<double> data;
                FitReportGroup result;
            };
            const auto selections = split_groups(set);
            std::vector<Task> tasks;
            for (const auto &s : selections)
            {
                if (!power_families.empty())
                    tasks.push_back({&s, Quantity::Power, normalized_powers(s.data), {}});
                if (!delay_families.empty())
                    tasks.push_back({&s, Quantity::Delay, excess_delays(s.data), {}});
            }

            parallel_for(tasks.size(), worker_count(config, tasks.size()), [&](std::size_t i)
                         {
                Task &t = tasks[i];
                FitOptions options;
                options.seed = derive_seed(config.seed, i);
                if (t.quantity == Quantity::Delay && config.fix_loc)
                    options.fixed_loc = 0.0;
                const auto &families = t.quantity == Quantity::Power ? power_families : delay_families;
                t.result.group = fit_group(t.selection->location, t.selection->scenario, t.quantity, t.data, families, options);
                t.result.frequency_hz = t.selection->data.records().front().frequency_hz; });

            std::vector<FitReportGroup> report;
            std::ostringstream curves, histogram, qq;
            curves << "quantity,location,scenario,family,x,pdf\n";
            histogram << "quantity,location,scenario,lower,upper,density\n";
            qq << "quantity,location,scenario,family,theoretical,empirical\n";
            std::size_t failures = 0;
            for (const auto &t : tasks)
            {
                const FitGroup &g = t.result.group;
                diag << group_label(g.location, g.scenario) << ' ' << quantity_name(g.quantity) << " (n=" << g.n << ")\n";
                for (const auto &row : g.rows)
                {
                    if (row.ok())
                        diag << "  " << family_name(row.family) << ": p=" << real(row.p_value, 4) << " R=" << real(row.qq_r, 4) << '\n';
                    else
                    {
                        ++failures;
                        diag << "  " << family_name(row.family) << ": error: " << row.error << '\n';
                    }
                }
                append_curves(curves, g, t.data);
                append_histogram(histogram, g, t.data);
                append_qq(qq, g, t.data);
                report.push_back(t.result);
            }

            if (config.format == OutputFormat::Json)
                emit(config, "fit_report.json", dump(fit_report_to_json(report)));
            else
            {
                std::ostringstream csv;
                write_fit_report_csv(report, csv);
                emit(config, "fit_report.csv", csv.str());
            }
            emit(config, "fit_curves.csv", curves.str());
            emit(config, "fit_histogram.csv", histogram.str());
            emit(config, "fit_qq.csv", qq.str());
            if (failures)
                diag << "error: " << failures << " fit row(s) failed\n";
            return failures ? 1 : 0; });
    }

    int cmd_gof(const RunConfig &config, const GofConfig &gof, std::ostream &diag)
    {
        return guarded(diag, [&]
                       {
            config.validate();
            if (!gof.spec)
                throw std::invalid_argument("gof needs a distribution (family, loc, scale, shapes)");
            const MeasurementSet set = load_inputs(config);
            const std::vector<double> data = gof.quantity == Quantity::Power ? normalized_powers(set) : excess_delays(set);
            if (data.empty())
                throw std::runtime_error("selection contains no records");
            const GofReport report = evaluate(data, *gof.spec);

            if (config.format == OutputFormat::Json)
            {
                nlohmann::json j = gof_to_json(report);
                j["quantity"] = quantity_name(gof.quantity);
                j["passes"] = report.passes();
                emit(config, "gof.json", dump(j));
            }
            else
            {
                std::ostringstream csv;
                const auto &s = report.spec.shapes();
                csv << "quantity,family,n,p_value,R,loc,scale,shape1,shape2,ks_d,passes\n"
                    << quantity_name(gof.quantity) << ',' << family_name(report.spec.family()) << ',' << report.n << ','
                    << format_significant(report.p_value, 6) << ',' << format_significant(report.qq_r, 6) << ','
                    << format_significant(report.spec.loc(), 6) << ',' << format_significant(report.spec.scale(), 6) << ','
                    << (s.size() > 0 ? format_significant(s[0], 6) : "") << ','
                    << (s.size() > 1 ? format_significant(s[1], 6) : "") << ','
                    << format_significant(report.ks_d, 6) << ',' << (report.passes() ? 1 : 0) << '\n';
                emit(config, "gof.csv", csv.str());
            }
            std::ostringstream qq;
            qq << "theoretical,empirical\n";
            for (const auto &p : qq_points(data, report.spec))
                qq << real(p.theoretical) << ',' << real(p.empirical) << '\n';
            emit(config, "gof_qq.csv", qq.str());

            diag << family_name(report.spec.family()) << " on " << data.size() << ' ' << quantity_name(gof.quantity)
                 << " values: D=" << real(report.ks_d, 4) << " p=" << real(report.p_value, 4) << " R=" << real(report.qq_r, 4)
                 << (report.passes() ? "" : " (rejected at 5%)") << '\n';
            return 0; });
    }

    int cmd_nop(const RunConfig &config, std::ostream &diag)
    {
        return guarded(diag, [&]
                       {
            config.validate();
            const MeasurementSet set = load_inputs(config);
            if (set.empty())
                throw std::runtime_error("selection contains no records");

            nlohmann::json groups = nlohmann::json::array();
            std::ostringstream bins_csv, points;
            bins_csv << "location,scenario,lower_m,upper_m,links,min,q1,median,q3,max,peak\n";
            points << "location,scenario,link_id,distance_m,nop\n";
            for (const auto &s : split_groups(set))
            {
                const auto links = group_links(s.data);
                const auto samples = count_paths(links);
                const auto bins = bin_by_distance(samples, config.bin_width_m);
                const NopBin &peak = peak_bin(bins);

                for (std::size_t i = 0; i < links.size(); ++i)
                    points << s.location << ',' << scenario_name(s.scenario) << ',' << links[i].link_id << ','
                           << real(samples[i].distance_m) << ',' << samples[i].nop << '\n';
                for (const auto &b : bins)
                    bins_csv << s.location << ',' << scenario_name(s.scenario) << ',' << real(b.lower) << ',' << real(b.upper)
                             << ',' << b.link_count << ',' << b.min << ',' << b.q1 << ',' << b.median << ',' << b.q3 << ','
                             << b.max << ',' << (&b == &peak ? 1 : 0) << '\n';
                groups.push_back({{"location", s.location},
                                  {"scenario", scenario_name(s.scenario)},
                                  {"links", links.size()},
                                  {"bins", bins_to_json(bins)},
                                  {"peak", {{"lower_m", peak.lower}, {"upper_m", peak.upper}, {"median", peak.median}}}});
                diag << group_label(s.location, s.scenario) << ": " << links.size() << " links, " << bins.size()
                     << " bins, peak median " << peak.median << " in [" << real(peak.lower) << ", " << real(peak.upper) << ") m\n";
            }

            if (config.format == OutputFormat::Json)
                emit(config, "nop.json", dump({{"bin_width_m", config.bin_width_m}, {"groups", groups}}));
            else
                emit(config, "nop.csv", bins_csv.str());
            emit(config, "nop_points.csv", points.str());
            return 0; });
    }

    int cmd_synth(const RunConfig &config, const SynthConfig &synth, std::ostream &diag)
    {
        return guarded(diag, [&]
                       {
            config.validate();
            if (synth.fits && synth.preset)
                throw std::invalid_argument("pass either a fit report or a preset, not both");
            if (!(synth.distance_m > 0.0) || !std::isfinite(synth.distance_m))
                throw std::invalid_argument("distance must be finite and > 0");

            ChannelStatistics stats;
            if (synth.preset)
                stats = preset_statistics(*synth.preset, synth.policy);
            else if (synth.fits)
            {
                const auto report = load_fit_report(*synth.fits);
                const FitReportGroup *power = nullptr;
                const FitReportGroup *delay = nullptr;
                std::vector<std::string> seen;
                for (const auto &entry : report)
                {
                    const FitGroup &g = entry.group;
                    if ((config.location && g.location != *config.location) || (config.scenario && g.scenario != *config.scenario))
                        continue;
                    const std::string label = group_label(g.location, g.scenario);
                    if (std::find(seen.begin(), seen.end(), label) == seen.end())
                        seen.push_back(label);
                    (g.quantity == Quantity::Power ? power : delay) = &entry;
                }
                if (seen.size() > 1)
                    throw std::invalid_argument("fit report holds several groups; select one with --location and --scenario");
                if (!power || !delay)
                    throw std::runtime_error("missing fits: the report needs both power and delay rows for the selected group");
                const double f = std::isfinite(power->frequency_hz) && power->frequency_hz > 0.0 ? power->frequency_hz : kPresetFrequencyHz;
                stats = build_statistics(power->group.location, power->group.scenario, power->group.rows, delay->group.rows,
                                         NopTable{}, f, synth.policy);
            }
            else
                throw std::invalid_argument("missing fits: pass a fit report or a preset");

            if (!config.inputs.empty())
            {
                RunConfig scoped = config;
                scoped.location = config.location.value_or(stats.location);
                scoped.scenario = config.scenario.value_or(stats.scenario);
                const MeasurementSet set = load_inputs(scoped);
                const auto links = group_links(set);
                stats.nop_table = NopTable::from_samples(count_paths(links), config.bin_width_m);
            }
            if (!synth.n_paths && stats.nop_table.bins.empty())
                throw std::invalid_argument("no path-count source: pass a fixed path count or measured data as input");
            stats.validate();

            std::vector<PdpRealization> ensemble(synth.count);
            parallel_for(synth.count, worker_count(config, synth.count / 256 + 1), [&](std::size_t i)
                         { ensemble[i] = sample_pdp(stats, synth.distance_m, derive_seed(config.seed, i), synth.n_paths); });

            nlohmann::json header = {{"location", stats.location},
                                     {"scenario", scenario_name(stats.scenario)},
                                     {"distance_m", synth.distance_m},
                                     {"base_seed", config.seed},
                                     {"frequency_hz", stats.frequency_hz},
                                     {"power_spec", spec_to_json(stats.power_spec)},
                                     {"delay_spec", spec_to_json(stats.delay_spec)}};
            const EnsembleSummary summary = summarize_ensemble(stats, ensemble);

            if (config.format == OutputFormat::Json)
            {
                nlohmann::json list = nlohmann::json::array();
                for (const auto &pdp : ensemble)
                    list.push_back(realization_to_json(pdp));
                nlohmann::json all = header;
                all["realizations"] = std::move(list);
                emit(config, "realizations.json", all.dump() + "\n");
                nlohmann::json ens = header;
                ens["summary"] = ensemble_summary_to_json(summary);
                emit(config, "ensemble.json", dump(ens));
            }
            else
            {
                std::ostringstream csv;
                csv << "realization,seed,distance_m,tap,delay_ns,gain_db,phase_rad\n";
                for (std::size_t i = 0; i < ensemble.size(); ++i)
                    for (std::size_t k = 0; k < ensemble[i].taps.size(); ++k)
                    {
                        const Tap &t = ensemble[i].taps[k];
                        csv << i << ',' << ensemble[i].seed << ',' << real(ensemble[i].distance_m, 17) << ',' << k << ','
                            << real(t.delay_ns, 17) << ',' << real(t.gain_db, 17) << ',' << real(t.phase_rad, 17) << '\n';
                    }
                emit(config, "realizations.csv", csv.str());
                std::ostringstream ens;
                ens << "realizations,taps,mean_taps,mean_excess_delay_ns,delay_ks_p,power_ks_p\n"
                    << summary.realizations << ',' << summary.taps << ',' << format_significant(summary.mean_taps, 9) << ','
                    << format_significant(summary.mean_excess_delay_ns, 9) << ',' << format_significant(summary.delay_ks_p, 6)
                    << ',' << format_significant(summary.power_ks_p, 6) << '\n';
                emit(config, "ensemble.csv", ens.str());
            }

            if (synth.bandwidth_hz)
            {
                const fs::path dir = config.out_dir / "cir";
                fs::create_directories(dir);
                for (std::size_t i = 0; i < ensemble.size(); ++i)
                {
                    std::ostringstream csv;
                    write_cir_csv(pdp_to_cir(ensemble[i], *synth.bandwidth_hz), csv);
                    char name[32];
                    std::snprintf(name, sizeof name, "cir_%06zu.csv", i);
                    write_file_atomic(dir / name, csv.str());
                }
            }

            diag << group_label(stats.location, stats.scenario)
                 << ": " << summary.realizations << " realizations at " << real(synth.distance_m) << " m, "
                 << summary.taps << " taps, mean excess delay " << real(summary.mean_excess_delay_ns, 6) << " ns\n";
            return 0; });
    }

} // namespace chanstat
