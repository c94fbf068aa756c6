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

// Acceptance checks. Prints one PASS / FAIL / SKIP line per criterion, followed by
// indented detail lines, and exits nonzero if any criterion fails.

#include "chanstat/commands.hpp"
#include "chanstat/distribution.hpp"
#include "chanstat/fit.hpp"
#include "chanstat/gof.hpp"
#include "chanstat/normalization.hpp"
#include "chanstat/pathcount.hpp"
#include "chanstat/presets.hpp"
#include "chanstat/report.hpp"
#include "support.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace chanstat;
namespace fs = std::filesystem;

namespace
{
    enum class Outcome
    {
        Pass,
        Fail,
        Skip
    };

    struct Check
    {
        Outcome outcome = Outcome::Pass;
        std::vector<std::string> details;

        void expect(bool ok, const std::string &what)
        {
            if (!ok)
                outcome = Outcome::Fail;
            details.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
        }
        void note(const std::string &what) { details.push_back("     " + what); }
    };

    std::string fmt(double v, int digits = 6)
    {
        std::ostringstream s;
        s << std::setprecision(digits) << v;
        return s.str();
    }

    std::string read_text(const fs::path &p)
    {
        std::ifstream in(p, std::ios::binary);
        return {std::istreambuf_iterator<char>(in), {}};
    }

    fs::path scratch(const std::string &name)
    {
        const auto dir = fs::temp_directory_path() / ("chanstat_acceptance_" + name);
        fs::remove_all(dir);
        fs::create_directories(dir);
        return dir;
    }

    // Generating laws used for recovery checks
    std::vector<DistributionSpec> recovery_truths()
    {
        return {
            {Family::Normal, -17.0, 7.0},
            {Family::Exponential, -29.0, 12.1},
            {Family::LogNormal, -35.5, 17.4, {0.37}},
            {Family::Rayleigh, -29.6, 10.3},
            {Family::Rician, -38.54, 6.6, {1.8}},
            {Family::Nakagami, -29.3, 14.2, {0.876}},
            {Family::Gamma, -30.7, 3.73, {3.66}},
            {Family::Beta, -40.0, 30.0, {2.5, 1.8}},
            {Family::LogLogistic, -33.79, 15.5, {4.04}},
            {Family::Weibull, -30.0, 20.0, {2.0}},
        };
    }

    std::string describe(const DistributionSpec &s)
    {
        std::string out = std::string(family_name(s.family())) + "(" + fmt(s.loc()) + ", " + fmt(s.scale());
        for (double v : s.shapes())
            out += ", " + fmt(v);
        return out + ")";
    }

    // Relative-error test: 5% on loc and scale, 10% on shapes
    bool within_tolerance(const DistributionSpec &fit, const DistributionSpec &truth, std::string &why)
    {
        bool ok = true;
        auto one = [&](const char *name, double est, double tru, double tol)
        {
            const double err = tru == 0.0 ? std::abs(est) : test::relative_error(est, tru);
            if (err > tol)
            {
                ok = false;
                why += std::string(" ") + name + " off by " + fmt(100.0 * err, 3) + "%";
            }
        };
        one("loc", fit.loc(), truth.loc(), 0.05);
        one("scale", fit.scale(), truth.scale(), 0.05);
        for (std::size_t i = 0; i < truth.shapes().size(); ++i)
            one("shape", fit.shape(i), truth.shape(i), 0.10);
        return ok;
    }

    // ---------------------------------------------------------------------------------------

    Check criterion_identities()
    {
        Check c;
        auto same = [&](const DistributionSpec &a, const DistributionSpec &b, double x0, double x1)
        {
            double worst = 0.0;
            for (int i = 0; i < 100; ++i)
            {
                const double x = x0 + (x1 - x0) * i / 99.0;
                worst = std::max(worst, std::abs(pdf(a, x) - pdf(b, x)) / std::max(1.0, pdf(b, x)));
                worst = std::max(worst, std::abs(cdf(a, x) - cdf(b, x)));
            }
            c.expect(worst <= 1e-12, describe(a) + " == " + describe(b) + ": max deviation " + fmt(worst, 3));
        };
        same({Family::Rician, -29.6, 10.3, {0.0}}, {Family::Rayleigh, -29.6, 10.3}, -35.0, 20.0);
        same({Family::Gamma, 0.0, 50.52, {1.0}}, {Family::Exponential, 0.0, 50.52}, -5.0, 400.0);
        same({Family::Weibull, 0.0, 50.52, {1.0}}, {Family::Exponential, 0.0, 50.52}, -5.0, 400.0);
        same({Family::Nakagami, -29.3, 14.2, {1.0}}, {Family::Rayleigh, -29.3, 14.2 / std::sqrt(2.0)}, -30.0, 10.0);
        return c;
    }

    Check criterion_quadrature()
    {
        Check c;
        double worst_mass = 0.0, worst_round = 0.0;
        for (const auto &spec : test::parameter_points())
        {
            const double mass = test::total_mass(spec);
            worst_mass = std::max(worst_mass, std::abs(mass - 1.0));
            if (std::abs(mass - 1.0) >= 1e-6)
                c.expect(false, describe(spec) + ": integral " + fmt(mass, 12));
            for (int k = 1; k < 200; ++k)
            {
                const double q = k / 200.0;
                const double err = std::abs(cdf(spec, quantile(spec, q)) - q);
                worst_round = std::max(worst_round, err);
                if (err >= 1e-9)
                    c.expect(false, describe(spec) + ": round trip at q=" + fmt(q) + " off by " + fmt(err, 3));
            }
        }
        c.expect(worst_mass < 1e-6, "50 parameter points, max |integral - 1| = " + fmt(worst_mass, 3));
        c.expect(worst_round < 1e-9, "max |cdf(quantile(q)) - q| = " + fmt(worst_round, 3));
        return c;
    }

    Check criterion_recovery()
    {
        Check c;
        std::uint64_t seed = 3000;
        for (const auto &truth : recovery_truths())
        {
            const auto xs = sample(truth, 5000, seed++);
            try
            {
                const auto fit = fit_mle(truth.family(), xs);
                std::string why;
                const bool ok = within_tolerance(fit, truth, why);
                c.expect(ok, describe(truth) + " -> " + describe(fit) + why);
            }
            catch (const std::exception &e)
            {
                c.expect(false, describe(truth) + ": " + e.what());
            }
        }
        return c;
    }

    double kolmogorov_series(double lambda)
    {
        long double sum = 0.0L;
        for (int k = 1; k < 1000; ++k)
        {
            const long double term = std::exp(-2.0L * k * k * lambda * lambda);
            sum += (k % 2 ? 1.0L : -1.0L) * term;
            if (term < 1e-18L)
                break;
        }
        return static_cast<double>(2.0L * sum);
    }

    Check criterion_ks()
    {
        Check c;
        const double p = ks_pvalue(0.05, 100);
        c.expect(std::abs(p - 0.9639) <= 1e-3, "ks_pvalue(lambda = 0.5) = " + fmt(p, 8) + " (published 0.9639)");
        c.expect(std::abs(p - kolmogorov_series(0.5)) <= 1e-12, "alternating-series oracle " + fmt(kolmogorov_series(0.5), 12));

        const DistributionSpec spec(Family::LogNormal, -35.5, 17.4, {0.37});
        int rejected = 0;
        const int trials = 10000;
        for (int t = 0; t < trials; ++t)
        {
            const auto xs = sample(spec, 100, derive_seed(4, t));
            if (ks_pvalue(ks_statistic(xs, spec), 100) < 0.05)
                ++rejected;
        }
        const double rate = static_cast<double>(rejected) / trials;
        c.expect(std::abs(rate - 0.05) <= 0.02, "null rejection rate at 5%, n = 100, 10^4 trials: " + fmt(100.0 * rate, 4) + "%");
        return c;
    }

    Check criterion_fspl()
    {
        Check c;
        const long double pi = 3.141592653589793238462643383279502884L;
        const long double oracle = 20.0L * std::log10(4.0L * pi * 143.1e9L * 10.0L / 299792458.0L);
        const double v = fspl_db(10.0, 143.1e9);
        c.expect(std::abs(v - 95.56) <= 0.01, "fspl_db(10 m, 143.1 GHz) = " + fmt(v, 10) + " dB");
        c.expect(std::abs(v - static_cast<double>(oracle)) <= 1e-12, "extended-precision oracle " + fmt(static_cast<double>(oracle), 15));
        const double law = 20.0 * std::log10(2.0);
        double worst = 0.0;
        for (double d : {0.5, 10.0, 33.0, 250.0})
            for (double f : {28e9, 143.1e9, 300e9})
            {
                worst = std::max(worst, std::abs(fspl_db(2 * d, f) - fspl_db(d, f) - law));
                worst = std::max(worst, std::abs(fspl_db(d, 2 * f) - fspl_db(d, f) - law));
            }
        c.expect(worst <= 1e-12, "distance and frequency doubling add 20 log10 2, max deviation " + fmt(worst, 3));
        return c;
    }

    Check criterion_pipeline()
    {
        Check c;
        const auto dir = scratch("pipeline");
        std::uint64_t seed = 600;
        for (const auto &name : preset_names())
        {
            const ChannelStatistics stats = preset_statistics(name);
            const auto records = test::synthetic_records(stats.location, stats.scenario, stats.power_spec, stats.delay_spec,
                                                         5000, 20, seed++, stats.frequency_hz);
            const fs::path input = dir / (name + ".csv");
            {
                std::ofstream out(input);
                serialize_records(MeasurementSet(records), out);
            }
            RunConfig config;
            config.inputs = {input};
            config.out_dir = dir / name;
            config.seed = 1;
            std::ostringstream diag;
            const int code = cmd_fit(config, diag);
            if (code != 0)
            {
                c.expect(false, name + ": fit exited with " + std::to_string(code));
                c.note(diag.str());
                continue;
            }
            const auto report = load_fit_report(dir / name / "fit_report.json");
            for (const auto &entry : report)
            {
                const FitGroup &g = entry.group;
                const DistributionSpec &truth = g.quantity == Quantity::Power ? stats.power_spec : stats.delay_spec;
                const FitRow *best = nullptr;
                const FitRow *generating = nullptr;
                for (const auto &row : g.rows)
                {
                    if (!row.ok())
                        continue;
                    if (!best || row.p_value > best->p_value)
                        best = &row;
                    if (row.family == truth.family())
                        generating = &row;
                }
                const std::string label = name + " " + std::string(quantity_name(g.quantity));
                if (!generating)
                {
                    c.expect(false, label + ": no successful " + std::string(family_name(truth.family())) + " row");
                    continue;
                }
                std::string why;
                const bool params = within_tolerance(*generating->spec, truth, why);
                const bool top = best == generating;
                c.expect(top && params, label + ": generating " + describe(truth) + " -> " + describe(*generating->spec) +
                                            " p=" + fmt(generating->p_value, 4) +
                                            (top ? " (top p)" : ", top p is " + std::string(family_name(best->family)) + " p=" + fmt(best->p_value, 4)) + why);
            }
        }
        fs::remove_all(dir);
        return c;
    }

    Check criterion_synthesis()
    {
        Check c;
        const auto dir = scratch("synthesis");
        RunConfig config;
        config.seed = 2026;
        SynthConfig synth;
        synth.preset = "sello-los";
        synth.distance_m = 20.0;
        synth.count = 10000;
        synth.n_paths = 10;
        std::ostringstream diag;
        config.out_dir = dir / "first";
        const int a = cmd_synth(config, synth, diag);
        config.out_dir = dir / "second";
        const int b = cmd_synth(config, synth, diag);
        if (a != 0 || b != 0)
        {
            c.expect(false, "synth exited with " + std::to_string(a) + "/" + std::to_string(b));
            c.note(diag.str());
            return c;
        }

        const ChannelStatistics stats = preset_statistics("sello-los");
        const auto all = nlohmann::json::parse(read_text(dir / "first" / "realizations.json"));
        std::vector<PdpRealization> ensemble;
        for (const auto &j : all.at("realizations"))
            ensemble.push_back(realization_from_json(j));
        const auto delays = pooled_excess_delays(ensemble);
        const auto powers = pooled_normalized_powers(ensemble, stats.frequency_hz);
        double sum = 0.0;
        for (double d : delays)
            sum += d;
        const double mean_delay = sum / static_cast<double>(delays.size());
        const double p_power = evaluate(powers, stats.power_spec).p_value;
        c.expect(ensemble.size() == 10000, std::to_string(ensemble.size()) + " realizations, " + std::to_string(powers.size()) + " taps");
        c.expect(std::abs(mean_delay - 50.52) / 50.52 <= 0.02, "pooled excess-delay mean " + fmt(mean_delay, 6) + " ns (target 50.52)");
        c.expect(p_power > 0.01, "pooled normalized powers vs " + describe(stats.power_spec) + ": KS p = " + fmt(p_power, 4));
        bool identical = true;
        for (const char *f : {"realizations.json", "ensemble.json"})
            identical = identical && read_text(dir / "first" / f) == read_text(dir / "second" / f);
        c.expect(identical, "identical seeds give byte-identical realization and ensemble files");
        fs::remove_all(dir);
        return c;
    }

    fs::path dataset_path()
    {
        if (const char *env = std::getenv("CHANSTAT_DATASET"); env && *env)
            return env;
        return fs::path(CHANSTAT_SOURCE_DIR) / "data" / "dataset.csv";
    }

    Check criterion_dataset()
    {
        Check c;
        const fs::path path = dataset_path();
        if (!fs::exists(path))
        {
            c.outcome = Outcome::Skip;
            c.note("no dataset at " + path.string() + " (set CHANSTAT_DATASET to enable)");
            return c;
        }
        const auto t0 = std::chrono::steady_clock::now();
        const auto dir = scratch("dataset");
        RunConfig config;
        config.inputs = {path};
        config.out_dir = dir;
        std::ostringstream diag;
        const int code = cmd_fit(config, diag);
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        c.expect(seconds < 60.0, "full fit grid in " + fmt(seconds, 3) + " s (exit " + std::to_string(code) + ")");

        const MeasurementSet set = load_inputs(config);
        const auto counts = summary_counts(set);
        const std::vector<std::tuple<std::string, std::size_t, std::size_t>> table = {
            {"Sello", 304, 29}, {"Airport", 375, 41}, {"TUAS", 29, 387}, {"TUAS2", 268, 1812}};
        for (const auto &[loc, los, nlos] : table)
        {
            std::size_t got_los = 0, got_nlos = 0;
            for (const auto &r : counts.rows)
                if (r.location == loc)
                    got_los = r.los, got_nlos = r.nlos;
            c.expect(got_los == los && got_nlos == nlos, loc + " counts " + std::to_string(got_los) + "/" + std::to_string(got_nlos));
        }
        c.expect(counts.los_total == 986 && counts.nlos_total == 2269,
                 "totals " + std::to_string(counts.los_total) + "/" + std::to_string(counts.nlos_total));

        if (fs::exists(dir / "fit_report.json"))
        {
            const auto report = load_fit_report(dir / "fit_report.json");
            for (const auto &published : preset_fit_groups())
            {
                if (published.quantity != Quantity::Delay)
                    continue;
                const FitRow *ref = nullptr;
                for (const auto &r : published.rows)
                    if (r.family == Family::Exponential && r.spec)
                        ref = &r;
                if (!ref)
                    continue;
                for (const auto &entry : report)
                {
                    const FitGroup &g = entry.group;
                    if (g.quantity != Quantity::Delay || g.location != published.location || g.scenario != published.scenario)
                        continue;
                    for (const auto &r : g.rows)
                        if (r.family == Family::Exponential && r.ok())
                            c.expect(test::relative_error(r.spec->scale(), ref->spec->scale()) <= 0.10,
                                     published.location + " " + std::string(scenario_name(published.scenario)) + " delay scale " +
                                         fmt(r.spec->scale(), 5) + " ns (published " + fmt(ref->spec->scale(), 5) + ")");
                }
            }
        }

        const auto tuas2 = filter(set, std::string("TUAS2"), Scenario::Nlos);
        if (tuas2.empty())
            c.expect(false, "no TUAS2 NLOS records");
        else
        {
            const auto links = group_links(tuas2);
            const auto bins = bin_by_distance(count_paths(links));
            const NopBin &peak = peak_bin(bins);
            c.expect(peak.lower >= 10.0 && peak.upper <= 30.0,
                     "TUAS2 NLOS peak median bin [" + fmt(peak.lower) + ", " + fmt(peak.upper) + ") m");
        }
        fs::remove_all(dir);
        return c;
    }
} // namespace

int main()
{
    struct Criterion
    {
        int id;
        const char *title;
        double budget_s;
        std::function<Check()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "distribution identities", 1.0, criterion_identities},
        {2, "normalization and quadrature", 10.0, criterion_quadrature},
        {3, "MLE recovery", 60.0, criterion_recovery},
        {4, "KS calibration", 60.0, criterion_ks},
        {5, "free-space path loss", 1.0, criterion_fspl},
        {6, "pipeline round trip", 120.0, criterion_pipeline},
        {7, "synthesis ensemble", 60.0, criterion_synthesis},
        {8, "measured dataset (optional)", 600.0, criterion_dataset},
    };

    int failures = 0;
    for (const auto &cr : criteria)
    {
        const auto t0 = std::chrono::steady_clock::now();
        Check check;
        try
        {
            check = cr.run();
        }
        catch (const std::exception &e)
        {
            check.expect(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (check.outcome != Outcome::Skip)
            check.expect(seconds < cr.budget_s, "runtime " + fmt(seconds, 3) + " s (budget " + fmt(cr.budget_s) + " s)");
        const char *tag = check.outcome == Outcome::Pass ? "PASS" : check.outcome == Outcome::Fail ? "FAIL" : "SKIP";
        std::cout << "criterion " << cr.id << ": " << tag << "  " << cr.title << "  [" << fmt(seconds, 3) << " s]\n";
        for (const auto &d : check.details)
            std::cout << "    " << d << '\n';
        std::cout.flush();
        if (check.outcome == Outcome::Fail)
            ++failures;
    }
    std::cout << (failures ? std::to_string(failures) + " criterion(s) failed\n" : std::string("all criteria passed or skipped\n"));
    return failures ? 1 : 0;
}
