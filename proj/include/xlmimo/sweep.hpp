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

#ifndef XLMIMO_SWEEP_HPP
#define XLMIMO_SWEEP_HPP

#include "xlmimo/efficiency.hpp"
#include "xlmimo/scenario.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace xlmimo
{
    inline constexpr const char *tool_version = "0.1.0";

    enum class SweepAxis
    {
        bandwidth,
        antennas,
        users,
        tx_power
    };

    enum class SweepMode
    {
        closed_form,
        monte_carlo,
        both
    };

    struct SweepSpec
    {
        SweepAxis axis = SweepAxis::bandwidth;
        std::vector<double> values;
        SweepMode mode = SweepMode::closed_form;
        int trials = 2000;
        std::uint64_t seed = 1;
        int workers = 1;

        // Nonempty, strictly increasing, trials >= 1 when Monte Carlo runs.
        void validate() const;
    };

    SweepAxis parse_axis(const std::string &name);
    SweepMode parse_mode(const std::string &name);
    const char *axis_name(SweepAxis axis) noexcept;
    const char *mode_name(SweepMode mode) noexcept;
    QuantityKind axis_kind(SweepAxis axis) noexcept;

    // "v1,v2,...", "lin:start:stop:count" or "log:start:stop:count"; every
    // number may carry a unit suffix of the given kind.
    std::vector<double> parse_values(const std::string &text, QuantityKind kind);

    /// One CSV row; absent values are written as empty cells.
    struct SweepRow
    {
        double axis_value = 0.0;
        int num_antennas = 0;
        int num_users = 0;
        double bandwidth = 0.0;
        double tx_power_density = 0.0;
        std::optional<double> se_ub, se_app, se_mc_mean, se_mc_ci95;
        std::optional<double> throughput, p_total, p_pa, p_converters, p_baseband, p_fixed, ee;
        std::vector<std::string> notes;
        long long rejected = 0;
    };

    struct RunManifest
    {
        std::string config_hash;
        std::string canonical_config;
        std::uint64_t seed = 0;
        std::string tool_version;
        std::string command;
        std::string start_time;
        std::string end_time;
        long long rejected_draws = 0;
        std::size_t rows = 0;
    };

    extern const char *const csv_header;

    // Row for one scenario (all axis fields already applied).
    SweepRow evaluate_point(const Scenario &sc, SweepMode mode, const MonteCarloOptions &mc);

    std::vector<SweepRow> evaluate_sweep(const Scenario &base, const SweepSpec &spec);
    std::vector<SweepRow> evaluate_compare(const std::vector<NamedScenario> &setups,
                                           const std::vector<double> &p_grid, int workers);

    std::string format_csv(const std::vector<SweepRow> &rows);

    // Writes <output_path> and <output_path>.manifest.json.
    RunManifest run_sweep(const Scenario &base, const SweepSpec &spec, const std::string &output_path);
    RunManifest run_compare(const std::vector<NamedScenario> &setups, const std::vector<double> &p_grid,
                            const std::string &output_path, int workers);
}

#endif
