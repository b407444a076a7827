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

#ifndef XLMIMO_POWER_HPP
#define XLMIMO_POWER_HPP

#include "xlmimo/bounds.hpp"

namespace xlmimo
{
    enum class SystemFamily
    {
        xl_mimo, // fully digital near-field array
        sub6,    // fully digital i.i.d. Rayleigh
        mmwave   // fully connected hybrid beamforming
    };

    /// Circuit and compute coefficients of the power model (defaults: mid-band
    /// reference hardware).
    struct HardwareProfile
    {
        double pa_efficiency_bs = 0.30;
        double pa_efficiency_ue = 0.15;
        double pa_static = 0.3;       // W
        double lna_coeff = 1.67e-11;  // W / (Hz * linear gain)
        double lna_gain = 100.0;      // linear
        double syn_power = 0.05;      // W
        double rf_circ = 0.5;         // W
        double if_circ = 0.3;         // W
        double adc_coeff = 1.97e-19;  // J / conversion step
        double dac_coeff = 1.66e-19;  // J / conversion step
        int adc_bits = 14;
        int dac_bits = 14;
        double oversampling = 1.0;
        double compute_efficiency = 3e10; // flops / W
        double decode_flops = 100.0;      // flops / bit
        double fixed_bs = 15.0;           // W
        double fixed_ue = 2.0;            // W
        double phase_shifter = 0.01;      // W, hybrid arrays only
        int num_rf_chains = 0;            // hybrid arrays only; 0 means one per user
        bool ofdm = true;
        int num_subcarriers = 4096;

        void validate() const;

        double lna_power(double bandwidth) const noexcept { return lna_coeff * lna_gain * bandwidth; }
        double adc_power(double bandwidth) const noexcept;
        double dac_power(double bandwidth) const noexcept;
        int rf_chains(int num_users) const noexcept { return num_rf_chains > 0 ? num_rf_chains : num_users; }
    };

    /// Operating point the power model is evaluated at.
    struct PowerInputs
    {
        int num_antennas = 512;
        int num_users = 16;
        double tx_power_density = 1e-18; // W/Hz per user
        ProtocolConfig protocol;
    };

    /// Base-station components, the K user terminals, and the fixed BS load.
    /// Parts sum to total; the ue_* fields itemise ue_total and are not
    /// added separately.
    struct PowerBreakdown
    {
        double pa_radiated = 0.0;
        double pa_static = 0.0;
        double lna = 0.0;
        double syn = 0.0;
        double rf_circ = 0.0;
        double adc = 0.0;
        double dac = 0.0;
        double if_circ = 0.0;
        double phase_shifter = 0.0;
        double ce = 0.0;
        double pd = 0.0;
        double cd = 0.0;
        double ofdm = 0.0;
        double fixed_bs = 0.0;
        double ue_total = 0.0;
        double total = 0.0;

        double ue_pa = 0.0;
        double ue_converters = 0.0;
        double ue_fixed = 0.0;

        double parts_sum() const noexcept;
        double pa() const noexcept { return pa_radiated + pa_static + ue_pa; }
        double converters() const noexcept { return adc + dac + ue_converters; }
        double baseband() const noexcept { return ce + pd + cd + ofdm; }
        double fixed() const noexcept { return fixed_bs + ue_fixed; }
    };

    enum class CoefficientScheme
    {
        xl_mimo,             // watts-valued polynomial coefficients
        bandwidth_normalized // B-proportional parts divided by B
    };

    struct PowerCoefficients
    {
        double i_p = 0.0;
        double i_n0 = 0.0;
        double i_n1 = 0.0;
        double i_n2 = 0.0;
        double i_k1 = 0.0;
        double i_k3 = 0.0;
        double i_r = 0.0;
        double i_fix = 0.0;

        // I_P K P + N (I_n0 + I_n1 K + I_n2 K^2) + I_k1 K + I_k3 K^3 + I_R T + I_fix,
        // with T the sum throughput (bits/s, or bits/s/Hz for the normalized scheme).
        double evaluate(int num_antennas, int num_users, double tx_power_density,
                        double sum_throughput) const noexcept;
    };

    struct TotalPower
    {
        double watts = 0.0;            // component sum (ground truth)
        double polynomial_watts = 0.0; // coefficient polynomial (fully digital families)
        double reconciliation_gap = 0.0; // |poly - sum| / sum
        PowerBreakdown breakdown;
    };

    // Per-component evaluation for a fully digital array; sum_throughput is
    // B K (1 - tau K / S) R and feeds the decoding term.
    PowerBreakdown component_powers(const PowerInputs &in, const HardwareProfile &hw,
                                    double sum_throughput);

    // Hybrid-beamforming array with N_RF RF chains behind an N-element
    // phase-shifter network.
    PowerBreakdown component_powers_hybrid(const PowerInputs &in, const HardwareProfile &hw,
                                           double sum_throughput);

    PowerCoefficients coefficients(CoefficientScheme scheme, const PowerInputs &in,
                                   const HardwareProfile &hw);

    TotalPower total_power(SystemFamily family, const PowerInputs &in, const HardwareProfile &hw,
                           double sum_throughput);

    inline constexpr double reconciliation_tolerance = 0.02;
}

#endif
