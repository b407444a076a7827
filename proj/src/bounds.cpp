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

#include "xlmimo/bounds.hpp"
#include "xlmimo/errors.hpp"
#include "xlmimo/expint.hpp"

#include <algorithm>
#include <cmath>

namespace xlmimo
{
    void ProtocolConfig::validate() const
    {
        if (!(bandwidth > 0.0) || !std::isfinite(bandwidth))
            throw DomainError("protocol: bandwidth must be positive");
        if (!(coherence_block_size >= 1.0))
            throw DomainError("protocol: coherence block size must be at least 1");
        if (!(pilot_factor >= 0.0))
            throw DomainError("protocol: pilot factor must be non-negative");
        if (!(uplink_fraction >= 0.0 && uplink_fraction <= 1.0) ||
            !(downlink_fraction >= 0.0 && downlink_fraction <= 1.0))
            throw DomainError("protocol: xi_ul and xi_dl must lie in [0, 1]");
        if (std::abs(uplink_fraction + downlink_fraction - 1.0) > 1e-9)
            throw DomainError("xi_ul + xi_dl must equal 1");
    }

    void ProtocolConfig::check_overhead(int num_users) const
    {
        if (num_users < 0)
            throw DomainError("protocol: negative user count");
        if (pilot_factor * num_users > coherence_block_size * uplink_fraction * (1.0 + 1e-12))
            throw DomainError("protocol: pilot overhead tau K exceeds the uplink share S xi_ul");
    }

    ArraySums chi_and_interference_sums(int num_antennas, double spacing, const CellGeometry &cell)
    {
        cell.validate();
        if (num_antennas < 1 || !(spacing > 0.0))
            throw DomainError("chi: need N >= 1 and positive spacing");

        const double delta = cell.area_factor();
        const double rmax2 = cell.r_max * cell.r_max;
        const double rmin2 = cell.r_min * cell.r_min;
        const double centre = 0.5 * (num_antennas - 1);

        ArraySums out{0.0, 0.0};
        for (int i = 0; i < num_antennas; ++i)
        {
            const double offset = (i - centre) * spacing;
            const double o2 = offset * offset;
            if (!(rmin2 - o2 > 0.0))
                throw DomainError("chi: r_min must exceed the array half-aperture");
            const double term = std::log((rmax2 - o2) / (rmin2 - o2)) / delta;
            out.chi += term;
            out.interference += term * term;
        }
        return out;
    }

    double chi_bar(double num_antennas, double spacing, const CellGeometry &cell)
    {
        cell.validate();
        if (!(spacing > 0.0))
            throw DomainError("chi_bar: spacing must be positive");
        const double n = num_antennas;
        const double a = 2.0 * cell.r_max / spacing;
        const double b = 2.0 * cell.r_min / spacing;
        if (!(n >= 0.0) || !(n < b))
            throw DomainError("chi_bar: N must satisfy 0 <= N < 2 r_min / d_A");
        if (n == 0.0)
            return 0.0;

        const double value = n * std::log((a * a - n * n) / (b * b - n * n)) +
                             a * std::log1p(2.0 * n / (a - n)) - b * std::log1p(2.0 * n / (b - n));
        return value / cell.area_factor();
    }

    double i_bar(double num_antennas, double spacing, const CellGeometry &cell)
    {
        cell.validate();
        if (!(num_antennas >= 0.0) || !(spacing > 0.0))
            throw DomainError("i_bar: need N >= 0 and positive spacing");
        const double h = 0.5 * num_antennas * spacing;
        const double value = std::log((cell.r_max + h) / (cell.r_min + h)) + h / (cell.r_max + h) -
                             h / (cell.r_min + h);
        return 2.0 * value / cell.area_factor();
    }

    namespace
    {
        double log2_gain(double effective_gain, const LinkBudget &budget, double wavelength)
        {
            if (!(wavelength > 0.0))
                throw DomainError("wavelength must be positive");
            if (!(effective_gain > 0.0))
                throw VacuousBoundError("bound vacuous at this K: effective array gain is not positive");
            const double snr = budget.tx_power_density * wavelength * wavelength / budget.noise_density;
            return std::log1p(snr * effective_gain) / std::log(2.0);
        }

        void check_users(int num_users)
        {
            if (num_users < 1)
                throw DomainError("at least one user is required");
        }
    }

    double se_upper_bound(int num_antennas, double spacing, const CellGeometry &cell, int num_users,
                          const LinkBudget &budget, double wavelength)
    {
        check_users(num_users);
        budget.validate();
        const auto s = chi_and_interference_sums(num_antennas, spacing, cell);
        return log2_gain(s.chi - (num_users - 1) * s.interference / s.chi, budget, wavelength);
    }

    double se_approx(double num_antennas, double spacing, const CellGeometry &cell, int num_users,
                     const LinkBudget &budget, double wavelength)
    {
        check_users(num_users);
        budget.validate();
        const double gain = chi_bar(num_antennas, spacing, cell) -
                            (num_users - 1) * i_bar(num_antennas, spacing, cell);
        return log2_gain(gain, budget, wavelength);
    }

    double wrap_throughput(double se, const ProtocolConfig &proto, int num_users,
                           ThroughputDirection direction)
    {
        proto.validate();
        proto.check_overhead(num_users);
        const double b = proto.bandwidth;
        switch (direction)
        {
        case ThroughputDirection::uplink:
        {
            if (proto.uplink_fraction == 0.0)
                return 0.0;
            const double share = 1.0 - proto.pilot_factor * num_users /
                                           (proto.coherence_block_size * proto.uplink_fraction);
            return proto.uplink_fraction * std::max(share, 0.0) * b * se;
        }
        case ThroughputDirection::downlink:
            return proto.downlink_fraction * b * se;
        case ThroughputDirection::sum:
            return b * num_users * proto.pilot_efficiency(num_users) * se;
        }
        return 0.0;
    }

    ChiScaling chi_scaling(double spacing, const CellGeometry &cell)
    {
        cell.validate();
        if (!(spacing > 0.0))
            throw DomainError("chi_scaling: spacing must be positive");
        const double delta = cell.area_factor();
        const double a = 2.0 * cell.r_max / spacing;
        const double b = 2.0 * cell.r_min / spacing;
        ChiScaling out;
        out.linear_coefficient = 2.0 * std::log(cell.r_max / cell.r_min) / delta;
        out.saturation_limit = (a * std::log((cell.r_max + cell.r_min) / (cell.r_max - cell.r_min)) +
                                b * std::log(delta / (4.0 * cell.r_min * cell.r_min))) /
                               delta;
        return out;
    }

    double throughput_asymptote(PowerRegime regime, double num_antennas, int num_users,
                                const LinkBudget &budget, const ProtocolConfig &proto,
                                const CellGeometry &cell, double wavelength)
    {
        budget.validate();
        proto.validate();
        cell.validate();
        const double prefix = proto.bandwidth * num_users * proto.pilot_efficiency(num_users);
        const double x = 2.0 * budget.tx_power_density * wavelength * wavelength *
                         std::log(cell.r_max / cell.r_min) * num_antennas /
                         (budget.noise_density * cell.area_factor());
        if (regime == PowerRegime::low_power)
            return prefix * x / std::log(2.0);
        return prefix * std::log2(1.0 + x);
    }

    double sub6_se_lower_bound(int num_antennas, int num_users, const LinkBudget &budget,
                               const CellGeometry &cell, double wavelength)
    {
        if (!(num_antennas > num_users))
            throw DomainError("sub6 bound: requires N > K");
        check_users(num_users);
        budget.validate();
        cell.validate();
        const double c = budget.tx_power_density * wavelength * wavelength * (num_antennas - num_users) /
                         budget.noise_density;
        const double rmax2 = cell.r_max * cell.r_max;
        const double rmin2 = cell.r_min * cell.r_min;
        const double value = c * std::log((rmax2 + c) / (rmin2 + c)) + rmax2 * std::log1p(c / rmax2) -
                             rmin2 * std::log1p(c / rmin2);
        return value / (cell.area_factor() * std::log(2.0));
    }

    double mmwave_se_approx(int num_antennas, const LinkBudget &budget, const CellGeometry &cell,
                            double wavelength)
    {
        if (num_antennas < 1)
            throw DomainError("mmwave approximation: requires N >= 1");
        budget.validate();
        cell.validate();
        const double c = budget.tx_power_density * wavelength * wavelength * num_antennas /
                         budget.noise_density;
        if (!(c > 0.0))
            throw DomainError("mmwave approximation: C must be positive");
        const double rmax2 = cell.r_max * cell.r_max;
        const double rmin2 = cell.r_min * cell.r_min;
        const double value = scaled_exp_integral_e1(rmax2 / c) - scaled_exp_integral_e1(rmin2 / c) +
                             std::log(rmax2 / rmin2);
        return c * value / (cell.area_factor() * std::log(2.0));
    }
}
