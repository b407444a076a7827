// SPDX-License-Identifier: Apache-2.0
//
// xlmimo-ee: energy-efficiency modeling for mid-band XL-MIMO systems
// Copyright (C) 2026 The xlmimo-ee authors
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

// Command-line front end: parameter sweeps, closed-form limits and the
// cross-technology comparison, written as CSV plus a JSON run manifest.

#include "xlmimo/efficiency.hpp"
#include "xlmimo/errors.hpp"
#include "xlmimo/scenario.hpp"
#include "xlmimo/sweep.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

namespace
{
    constexpr int exit_config = 2;
    constexpr int exit_numeric = 3;
    constexpr int exit_io = 4;

    xlmimo::Scenario scenario_from(const std::string &path)
    {
        return path.empty() ? xlmimo::Scenario{} : xlmimo::load_scenario(path);
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Energy-efficiency sweeps for mid-band XL-MIMO systems"};
    app.require_subcommand(1);
    app.set_version_flag("--version", xlmimo::tool_version);

    // sweep
    std::string sweep_scenario, axis, values, mode = "closed_form", sweep_out;
    int trials = 2000, sweep_workers = 1;
    std::uint64_t seed = 1;
    auto *sweep = app.add_subcommand("sweep", "Sweep one parameter and write a CSV");
    sweep->add_option("--scenario", sweep_scenario, "Scenario file (key = value); defaults when omitted");
    sweep->add_option("--axis", axis, "bandwidth | antennas | users | tx_power")->required();
    sweep->add_option("--values", values, "v1,v2,... | lin:a:b:n | log:a:b:n (unit suffixes allowed)")->required();
    sweep->add_option("--mode", mode, "closed_form | monte_carlo | both")->capture_default_str();
    sweep->add_option("--trials", trials, "Monte Carlo trials per point")->capture_default_str();
    sweep->add_option("--seed", seed, "Master seed")->capture_default_str();
    sweep->add_option("--workers", sweep_workers, "Worker threads")->capture_default_str();
    sweep->add_option("--out", sweep_out, "Output CSV path")->required();

    // limits
    std::string limits_scenario;
    double eta = -1.0;
    auto *limits = app.add_subcommand("limits", "Print the bandwidth limit, knee point and array-gain scaling");
    limits->add_option("--scenario", limits_scenario, "Scenario file (key = value); defaults when omitted");
    limits->add_option("--eta", eta, "Knee fraction of the plateau (default: scenario knee_fraction)");

    // compare
    std::string setups_path, pgrid, compare_out;
    int compare_workers = 1;
    auto *compare = app.add_subcommand("compare", "Evaluate EE of several setups over a transmit-power grid");
    compare->add_option("--setups", setups_path, "Setups file ([name] sections); reference setups when omitted");
    compare->add_option("--pgrid", pgrid, "Transmit-power grid, e.g. lin:-170dBm/Hz:-130dBm/Hz:9")->required();
    compare->add_option("--out", compare_out, "Output CSV path")->required();
    compare->add_option("--workers", compare_workers, "Worker threads")->capture_default_str();

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::Success &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return exit_config;
    }

    try
    {
        if (*sweep)
        {
            const auto sc = scenario_from(sweep_scenario);
            xlmimo::SweepSpec spec;
            spec.axis = xlmimo::parse_axis(axis);
            spec.values = xlmimo::parse_values(values, xlmimo::axis_kind(spec.axis));
            spec.mode = xlmimo::parse_mode(mode);
            spec.trials = trials;
            spec.seed = seed;
            spec.workers = sweep_workers;
            const auto m = xlmimo::run_sweep(sc, spec, sweep_out);
            std::cout << "wrote " << m.rows << " rows to " << sweep_out << " (config " << m.config_hash
                      << ", rejected draws " << m.rejected_draws << ")\n";
        }
        else if (*limits)
        {
            const auto sc = scenario_from(limits_scenario);
            const double fraction = eta > 0.0 ? eta : sc.knee_fraction;
            const auto knee = xlmimo::knee_point(sc, fraction, {});
            const auto scaling = xlmimo::chi_scaling(sc.spacing(), sc.cell);
            std::printf("config_hash = %s\n", xlmimo::config_hash(sc).c_str());
            std::printf("ee_bandwidth_limit_bits_per_joule = %.12g\n", xlmimo::ee_bandwidth_limit(sc));
            std::printf("knee_point_antennas = %.12g\n", knee.knee);
            std::printf("knee_fraction = %.12g\n", fraction);
            std::printf("knee_low_power_regime = %s\n", knee.low_power ? "true" : "false");
            std::printf("chi_linear_coefficient_per_m2 = %.12g\n", scaling.linear_coefficient);
            std::printf("chi_saturation_limit_per_m2 = %.12g\n", scaling.saturation_limit);
            std::printf("aperture_pole_antennas = %.12g\n", 2.0 * sc.cell.r_min / sc.spacing());
        }
        else if (*compare)
        {
            const auto setups = setups_path.empty() ? xlmimo::reference_setups() : xlmimo::load_setups(setups_path);
            const auto grid = xlmimo::parse_values(pgrid, xlmimo::QuantityKind::power_density);
            if (compare_workers < 1)
                throw xlmimo::ConfigError("workers must be at least 1");
            const auto m = xlmimo::run_compare(setups, grid, compare_out, compare_workers);
            std::cout << "wrote " << m.rows << " rows to " << compare_out << "\n";
        }
    }
    catch (const xlmimo::ConfigError &e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config;
    }
    catch (const xlmimo::IoError &e)
    {
        std::cerr << "I/O error: " << e.what() << "\n";
        return exit_io;
    }
    catch (const xlmimo::DomainError &e)
    {
        std::cerr << "numeric domain error: " << e.what() << "\n";
        return exit_numeric;
    }
    return 0;
}
