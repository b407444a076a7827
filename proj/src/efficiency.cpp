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

#include "xlmimo/efficiency.hpp"
#include "xlmimo/errors.hpp"

#include <cmath>

namespace xlmimo
{
    double closed_form_se(const Scenario &sc)
    {
        const double lambda = sc.wavelength();
        const LinkBudget budget = sc.budget();
        switch (sc.family)
        {
        case SystemFamily::xl_mimo:
            return se_approx(sc.num_antennas, sc.spacing(), sc.cell, sc.num_users, budget, lambda);
        case SystemFamily::sub6:
            return sub6_se_lower_bound(sc.num_antennas, sc.num_users, budget, sc.cell, lambda);
        case SystemFamily::mmwave:
            return mmwave_se_approx(sc.num_antennas, budget, sc.cell, lambda);
        }
        throw DomainError("unknown system family");
    }

    EePoint energy_efficiency_at(const Scenario &sc, double se)
    {
        EePoint out;
        out.se = se;
        out.num_antennas = sc.num_antennas;
        out.num_users = sc.num_users;
        out.bandwidth = sc.protocol.bandwidth;
        out.tx_power_density = sc.tx_power_density;
        out.throughput = wrap_throughput(se, sc.protocol, sc.num_users, ThroughputDirection::sum);
        const auto total = total_power(sc.family, sc.power_inputs(), sc.hardware, out.throughput);
        out.power = total.watts;
        out.breakdown = total.breakdown;
        out.ee = out.throughput / out.power;
        return out;
    }

    EePoint energy_efficiency(const Scenario &sc, RateMode mode, const MonteCarloOptions &mc)
    {
        if (mode == RateMode::closed_form)
            return energy_efficiency_at(sc, closed_form_se(sc));
        const auto est = mc_ergodic_se(sc, sc.num_users, mc);
        EePoint out = energy_efficiency_at(sc, est.mean);
        out.mc = est;
        return out;
    }

    double ee_bandwidth_limit(const Scenario &sc)
    {
        const double se = closed_form_se(sc);
        const double per_hz = sc.num_users * sc.protocol.pilot_efficiency(sc.num_users) * se;
        const auto in = sc.power_inputs();

        if (sc.family == SystemFamily::mmwave)
        {
            // Slope of the affine power-versus-bandwidth law of the hybrid model.
            PowerInputs lo = in, hi = in;
            lo.protocol.bandwidth = 1.0;
            hi.protocol.bandwidth = 2.0;
            const double slope = component_powers_hybrid(hi, sc.hardware, 2.0 * per_hz).total -
                                 component_powers_hybrid(lo, sc.hardware, per_hz).total;
            return per_hz / slope;
        }

        const auto c = coefficients(CoefficientScheme::bandwidth_normalized, in, sc.hardware);
        return per_hz / c.evaluate(sc.num_antennas, sc.num_users, sc.tx_power_density, per_hz);
    }

    std::vector<int> default_antenna_grid()
    {
        std::vector<int> grid;
        for (int n = 16; n <= 8192; n *= 2)
            grid.push_back(n);
        return grid;
    }

    KneeReport knee_point(const Scenario &sc, double eta, const std::vector<int> &grid)
    {
        if (!(eta > 0.0 && eta < 1.0))
            throw DomainError("knee_point: eta must lie in (0, 1)");
        const auto c = coefficients(CoefficientScheme::xl_mimo, sc.power_inputs(), sc.hardware);
        const double k = sc.num_users;
        const double numerator = c.i_p * k * sc.tx_power_density + c.i_k1 * k + c.i_k3 * k * k * k + c.i_fix;
        const double per_antenna = c.i_n0 + c.i_n1 * k + c.i_n2 * k * k;

        KneeReport out;
        out.knee = eta / (1.0 - eta) * numerator / per_antenna;

        const double lambda = sc.wavelength();
        const double snr_scale = sc.tx_power_density * lambda * lambda / sc.noise_density;
        try
        {
            out.snr_at_knee = snr_scale * chi_bar(out.knee, sc.spacing(), sc.cell);
        }
        catch (const DomainError &)
        {
            out.snr_at_knee = INFINITY;
        }
        out.low_power = out.snr_at_knee < 0.1;

        for (int n : grid)
        {
            Scenario local = sc;
            local.num_antennas = n;
            try
            {
                const double ee = energy_efficiency(local, RateMode::closed_form).ee;
                out.grid.push_back(n);
                out.grid_ee.push_back(ee);
                if (ee > out.grid_max_ee)
                {
                    out.grid_max_ee = ee;
                    out.grid_argmax = n;
                }
            }
            catch (const DomainError &)
            {
                out.skipped.push_back(n);
            }
        }
        return out;
    }

    std::vector<CompareRow> compare_setups(const std::vector<NamedScenario> &setups,
                                           const std::vector<double> &p_grid)
    {
        std::vector<CompareRow> rows;
        for (const auto &s : setups)
            for (double p : p_grid)
            {
                CompareRow row;
                row.setup = s.name;
                row.tx_power_density = p;
                Scenario local = s.scenario;
                local.tx_power_density = p;
                try
                {
                    row.point = energy_efficiency(local, RateMode::closed_form);
                }
                catch (const DomainError &e)
                {
                    row.valid = false;
                    row.note = e.what();
                }
                rows.push_back(std::move(row));
            }
        return rows;
    }

    AntennaLimitReport ee_antenna_limit_check(const Scenario &sc, const std::vector<int> &grid)
    {
        AntennaLimitReport out;
        for (int n : grid)
        {
            Scenario local = sc;
            local.num_antennas = n;
            try
            {
                out.ee.push_back(energy_efficiency(local, RateMode::closed_form).ee);
                out.grid.push_back(n);
            }
            catch (const DomainError &)
            {
                out.skipped.push_back(n);
            }
        }
        if (out.ee.empty())
            return out;

        for (std::size_t i = 1; i < out.ee.size(); ++i)
            if (out.ee[i] > out.ee[out.argmax])
                out.argmax = i;

        out.decreasing_beyond_argmax = true;
        out.strictly_decreasing = true;
        for (std::size_t i = 1; i < out.ee.size(); ++i)
        {
            const bool falls = out.ee[i] < out.ee[i - 1];
            out.strictly_decreasing = out.strictly_decreasing && falls;
            if (i > out.argmax)
                out.decreasing_beyond_argmax = out.decreasing_beyond_argmax && falls;
        }
        out.ratio_last_to_max = out.ee.back() / out.ee[out.argmax];
        out.ratio_last_to_first = out.ee.back() / out.ee.front();
        return out;
    }
}
