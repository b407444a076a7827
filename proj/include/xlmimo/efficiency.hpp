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

#ifndef XLMIMO_EFFICIENCY_HPP
#define XLMIMO_EFFICIENCY_HPP

#include "xlmimo/monte_carlo.hpp"
#include "xlmimo/power.hpp"
#include "xlmimo/scenario.hpp"

#include <string>
#include <vector>

namespace xlmimo
{
    enum class RateMode
    {
        closed_form,
        monte_carlo
    };

    struct EePoint
    {
        double ee = 0.0;         // bits / J
        double throughput = 0.0; // bits / s, B K (1 - tau K / S) R
        double power = 0.0;      // W
        double se = 0.0;         // per-user SE R that produced the throughput
        int num_antennas = 0;
        int num_users = 0;
        double bandwidth = 0.0;
        double tx_power_density = 0.0;
        PowerBreakdown breakdown;
        ErgodicEstimate mc; // populated in monte_carlo mode
    };

    // Closed-form per-user SE of the scenario's family: integral
    // approximation (XL-MIMO), Rayleigh lower bound (sub-6), or Rician hybrid
    // approximation (mmWave).
    double closed_form_se(const Scenario &sc);

    // Throughput over total power; the decoding term is evaluated at the
    // same rate as the numerator.
    EePoint energy_efficiency(const Scenario &sc, RateMode mode,
                              const MonteCarloOptions &mc = MonteCarloOptions{});

    // EE evaluated for a given per-user SE (no rate computation).
    EePoint energy_efficiency_at(const Scenario &sc, double se);

    // Limit of the closed-form EE as B -> infinity (B-independent).
    double ee_bandwidth_limit(const Scenario &sc);

    struct KneeReport
    {
        double knee = 0.0;          // closed-form N^kp (real-valued)
        double snr_at_knee = 0.0;   // P lambda^2 chi_bar(N^kp) / sigma^2
        bool low_power = true;      // snr_at_knee < 0.1
        std::vector<int> grid;      // evaluated grid (valid points only)
        std::vector<double> grid_ee;
        int grid_argmax = 0;        // N with the largest EE on the grid
        double grid_max_ee = 0.0;
        std::vector<int> skipped;   // grid points outside the model domain
    };

    // N^kp = eta/(1-eta) (I_P K P + I_k1 K + I_k3 K^3 + I_fix) /
    // (I_n0 + I_n1 K + I_n2 K^2), with a grid-search diagnostic.
    KneeReport knee_point(const Scenario &sc, double eta, const std::vector<int> &grid);
    std::vector<int> default_antenna_grid(); // 16, 32, ..., 8192

    struct CompareRow
    {
        std::string setup;
        double tx_power_density = 0.0;
        EePoint point;
        bool valid = true;
        std::string note;
    };

    // Closed-form EE of every setup at every transmit power, setup-major.
    std::vector<CompareRow> compare_setups(const std::vector<NamedScenario> &setups,
                                           const std::vector<double> &p_grid);

    struct AntennaLimitReport
    {
        std::vector<int> grid;     // valid points
        std::vector<double> ee;
        std::vector<int> skipped;  // outside the model domain
        std::size_t argmax = 0;
        bool decreasing_beyond_argmax = false;
        bool strictly_decreasing = false;
        double ratio_last_to_max = 0.0;
        double ratio_last_to_first = 0.0;
    };

    AntennaLimitReport ee_antenna_limit_check(const Scenario &sc, const std::vector<int> &grid);
}

#endif
