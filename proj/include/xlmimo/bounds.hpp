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

#ifndef XLMIMO_BOUNDS_HPP
#define XLMIMO_BOUNDS_HPP

#include "xlmimo/geometry.hpp"
#include "xlmimo/zf.hpp"

namespace xlmimo
{
    /// TDD frame parameters.
    struct ProtocolConfig
    {
        double bandwidth = 4e8;             // B, Hz
        double coherence_block_size = 1000; // S, resource elements
        double pilot_factor = 1.0;          // tau
        double uplink_fraction = 0.4;       // xi_ul
        double downlink_fraction = 0.6;     // xi_dl

        void validate() const;
        // Throws DomainError when tau K exceeds the uplink share S xi_ul.
        void check_overhead(int num_users) const;
        // 1 - tau K / S
        double pilot_efficiency(int num_users) const noexcept
        {
            return 1.0 - pilot_factor * num_users / coherence_block_size;
        }
    };

    enum class ThroughputDirection
    {
        uplink,
        downlink,
        sum
    };

    enum class PowerRegime
    {
        low_power,
        high_power
    };

    struct ArraySums
    {
        double chi;          // sum_n ln((r_max^2 - n^2 d^2)/(r_min^2 - n^2 d^2)) / (r_max^2 - r_min^2)
        double interference; // sum of the squared summands
    };

    struct ChiScaling
    {
        double linear_coefficient; // d chi_bar / dN at N -> 0
        double saturation_limit;   // chi_bar as N -> 2 r_min / d_A
    };

    // Exact finite sums over the symmetric element index set.
    ArraySums chi_and_interference_sums(int num_antennas, double spacing, const CellGeometry &cell);

    // Integral (continuous-aperture) approximation of chi. N may be real;
    // requires 0 <= N < 2 r_min / d_A.
    double chi_bar(double num_antennas, double spacing, const CellGeometry &cell);

    // E{(r + N d_A / 2)^-2} under the annular user density.
    double i_bar(double num_antennas, double spacing, const CellGeometry &cell);

    // log2(1 + P lambda^2 / sigma^2 (chi - (K-1) I / chi)). Throws
    // VacuousBoundError when the effective gain is not positive.
    double se_upper_bound(int num_antennas, double spacing, const CellGeometry &cell, int num_users,
                          const LinkBudget &budget, double wavelength);

    // log2(1 + P lambda^2 / sigma^2 (chi_bar - (K-1) i_bar)); same error rule.
    double se_approx(double num_antennas, double spacing, const CellGeometry &cell, int num_users,
                     const LinkBudget &budget, double wavelength);

    // Spectral efficiency to bits/s: uplink xi_ul (1 - tau K/(S xi_ul)) B se,
    // downlink xi_dl B se, sum B K (1 - tau K / S) se.
    double wrap_throughput(double se, const ProtocolConfig &proto, int num_users,
                           ThroughputDirection direction);

    ChiScaling chi_scaling(double spacing, const CellGeometry &cell);

    // Interference-free small-N throughput forms (bits/s).
    double throughput_asymptote(PowerRegime regime, double num_antennas, int num_users,
                                const LinkBudget &budget, const ProtocolConfig &proto,
                                const CellGeometry &cell, double wavelength);

    // i.i.d. Rayleigh ZF lower bound, E_r{log2(1 + C / r^2)} with
    // C = P lambda^2 (N - K) / sigma^2, in closed form. Requires N > K.
    double sub6_se_lower_bound(int num_antennas, int num_users, const LinkBudget &budget,
                               const CellGeometry &cell, double wavelength);

    // Hybrid-beamforming Rician approximation with C = P lambda^2 N / sigma^2.
    double mmwave_se_approx(int num_antennas, const LinkBudget &budget, const CellGeometry &cell,
                            double wavelength);
}

#endif
