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

// chanstat command-line front end: ingest, fit, gof, nop, synth

#include "chanstat/commands.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace
{
    struct CommonFlags
    {
        std::vector<std::string> inputs;
        std::string out = ".";
        std::string location;
        std::string scenario;
        std::vector<std::string> families;
        bool fix_loc = true;
        double bin_width = 10.0;
        std::optional<std::uint64_t> seed;
        std::string format = "json";
        unsigned workers = 0;
    };

    void add_common(CLI::App *sub, CommonFlags &f, bool input_required)
    {
        auto *input = sub->add_option("--input,-i", f.inputs, "Measurement CSV file(s)");
        if (input_required)
            input->required();
        sub->add_option("--out,-o", f.out, "Output directory")->capture_default_str();
        sub->add_option("--location", f.location, "Only records of this location");
        sub->add_option("--scenario", f.scenario, "Only LOS or NLOS records");
        sub->add_option("--families", f.families, "Distribution families (comma separated)")->delimiter(',');
        sub->add_flag("--fix-loc,!--free-loc", f.fix_loc, "Pin delay fits at loc = 0")->capture_default_str();
        sub->add_option("--bin-width", f.bin_width, "Distance bin width in m")->capture_default_str();
        sub->add_option("--seed", f.seed, "Base seed (overrides CHANSTAT_SEED)");
        sub->add_option("--format", f.format, "Report format: json or csv")->capture_default_str();
        sub->add_option("--workers", f.workers, "Worker threads (0 = all cores)");
    }

    chanstat::RunConfig to_config(const CommonFlags &f)
    {
        chanstat::RunConfig c;
        for (const auto &p : f.inputs)
            c.inputs.emplace_back(p);
        c.out_dir = f.out;
        if (!f.location.empty())
            c.location = f.location;
        if (!f.scenario.empty())
            c.scenario = chanstat::parse_scenario(f.scenario);
        for (const auto &name : f.families)
            c.families.push_back(chanstat::parse_family(name));
        c.fix_loc = f.fix_loc;
        c.bin_width_m = f.bin_width;
        c.seed = chanstat::resolve_seed(f.seed, std::getenv("CHANSTAT_SEED"));
        c.format = chanstat::parse_format(f.format);
        c.workers = f.workers;
        return c;
    }
} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"chanstat: statistics and synthesis of multipath channel measurements"};
    app.require_subcommand(1);

    CommonFlags ingest_flags, fit_flags, gof_flags, nop_flags, synth_flags;
    auto *ingest = app.add_subcommand("ingest", "Validate records; write dataset.csv, counts and pdp.csv");
    add_common(ingest, ingest_flags, true);

    auto *fit = app.add_subcommand("fit", "Fit power and delay distributions per location and scenario");
    add_common(fit, fit_flags, true);

    auto *gof = app.add_subcommand("gof", "Score one distribution against the selected data");
    add_common(gof, gof_flags, true);
    std::string gof_quantity = "power", gof_family;
    double gof_loc = 0.0, gof_scale = 1.0;
    std::vector<double> gof_shapes;
    gof->add_option("--quantity", gof_quantity, "power or delay")->capture_default_str();
    gof->add_option("--family", gof_family, "Distribution family")->required();
    gof->add_option("--loc", gof_loc, "Location")->capture_default_str();
    gof->add_option("--scale", gof_scale, "Scale")->capture_default_str();
    gof->add_option("--shapes", gof_shapes, "Shape parameter(s), comma separated")->delimiter(',');

    auto *nop = app.add_subcommand("nop", "Number-of-paths statistics per distance bin");
    add_common(nop, nop_flags, true);

    auto *synth = app.add_subcommand("synth", "Draw power-delay profiles from fitted statistics");
    add_common(synth, synth_flags, false);
    std::string fits_path, preset;
    double distance = 0.0, min_r = 0.95;
    std::size_t count = 1;
    std::optional<std::size_t> paths;
    std::optional<double> bandwidth;
    synth->add_option("--fits", fits_path, "Fit report (json or csv)");
    synth->add_option("--preset", preset, "Built-in statistics, e.g. sello-los");
    synth->add_option("--distance", distance, "Tx-Rx distance in m")->required();
    synth->add_option("--count", count, "Number of realizations")->capture_default_str();
    synth->add_option("--paths", paths, "Fixed number of paths per realization");
    synth->add_option("--bandwidth", bandwidth, "Also export CIRs sampled at this bandwidth in Hz");
    synth->add_option("--min-r", min_r, "Minimum Q-Q correlation of a selectable fit")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (ingest->parsed())
            return chanstat::cmd_ingest(to_config(ingest_flags), std::cout);
        if (fit->parsed())
            return chanstat::cmd_fit(to_config(fit_flags), std::cout);
        if (nop->parsed())
            return chanstat::cmd_nop(to_config(nop_flags), std::cout);
        if (gof->parsed())
        {
            chanstat::GofConfig g;
            g.quantity = chanstat::parse_quantity(gof_quantity);
            g.spec = chanstat::DistributionSpec(chanstat::parse_family(gof_family), gof_loc, gof_scale, gof_shapes);
            return chanstat::cmd_gof(to_config(gof_flags), g, std::cout);
        }
        chanstat::SynthConfig s;
        if (!fits_path.empty())
            s.fits = fits_path;
        if (!preset.empty())
            s.preset = preset;
        s.distance_m = distance;
        s.count = count;
        s.n_paths = paths;
        s.bandwidth_hz = bandwidth;
        s.policy.min_qq_r = min_r;
        return chanstat::cmd_synth(to_config(synth_flags), s, std::cout);
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
