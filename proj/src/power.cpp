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

#include "xlmimo/power.hpp"
#include "xlmimo/errors.hpp"

#include <cmath>
#include <string>

namespace xlmimo
{
    namespace
    {
        void require_positive(double v, const char *what)
        {
            if (!(v > 0.0) || !std::isfinite(v))
                throw DomainError(std::string("hardware: ") + what + " must be positive");
        }

        void check_inputs(const PowerInputs &in)
        {
            if (in.num_antennas < 0 || in.num_users < 0)
                throw DomainError("power model: N and K must be non-negative");
            if (!(in.tx_power_density >= 0.0))
                throw DomainError("power model: transmit power must be non-negative");
            in.protocol.validate();
        }

        // Shares of the OFDM modulation load: 5 B log2(N_sc) / Q_B flops-per-watt
        // per processed stream, weighted by the time in each direction.
        double ofdm_per_stream(const PowerInputs &in, const HardwareProfile &hw)
        {
            if (!hw.ofdm)
                return 0.0;
            const auto &p = in.protocol;
            return (p.uplink_fraction + p.downlink_fraction) * 5.0 * p.bandwidth *
                   std::log2(static_cast<double>(hw.num_subcarriers)) / hw.compute_efficiency;
        }

        // One user terminal, including its fixed load.
        void add_user_terminals(PowerBreakdown &out, const PowerInputs &in, const HardwareProfile &hw)
        {
            const auto &p = in.protocol;
            const double b = p.bandwidth;
            const double k = in.num_users;
            const double pa = p.uplink_fraction * (b * in.tx_power_density / hw.pa_efficiency_ue + hw.pa_static);
            const double rf = pa + p.downlink_fraction * hw.lna_power(b) + hw.syn_power + hw.rf_circ;
            const double conv = p.downlink_fraction * hw.adc_power(b) + p.uplink_fraction * hw.dac_power(b);
            const double dc = conv + hw.if_circ;
            out.ue_pa = k * pa;
            out.ue_converters = k * conv;
            out.ue_fixed = k * hw.fixed_ue;
            out.ue_total = k * (rf + dc + hw.fixed_ue);
        }
    }

    void HardwareProfile::validate() const
    {
        if (!(pa_efficiency_bs > 0.0 && pa_efficiency_bs <= 1.0) ||
            !(pa_efficiency_ue > 0.0 && pa_efficiency_ue <= 1.0))
            throw DomainError("hardware: PA efficiencies must lie in (0, 1]");
        require_positive(pa_static, "pa_static");
        require_positive(lna_coeff, "lna_coeff");
        require_positive(lna_gain, "lna_gain");
        require_positive(syn_power, "syn_power");
        require_positive(rf_circ, "rf_circ");
        require_positive(if_circ, "if_circ");
        require_positive(adc_coeff, "adc_coeff");
        require_positive(dac_coeff, "dac_coeff");
        require_positive(compute_efficiency, "compute_efficiency");
        require_positive(decode_flops, "decode_flops");
        require_positive(fixed_bs, "fixed_bs");
        require_positive(fixed_ue, "fixed_ue");
        require_positive(phase_shifter, "phase_shifter");
        if (adc_bits < 1 || adc_bits > 24 || dac_bits < 1 || dac_bits > 24)
            throw DomainError("hardware: converter resolution must lie in [1, 24] bits");
        if (!(oversampling >= 1.0))
            throw DomainError("hardware: oversampling must be at least 1");
        if (num_rf_chains < 0)
            throw DomainError("hardware: num_rf_chains must be non-negative");
        if (num_subcarriers < 2)
            throw DomainError("hardware: num_subcarriers must be at least 2");
    }

    double HardwareProfile::adc_power(double bandwidth) const noexcept
    {
        return 2.0 * oversampling * adc_coeff * std::ldexp(1.0, 2 * adc_bits) * bandwidth;
    }

    double HardwareProfile::dac_power(double bandwidth) const noexcept
    {
        return 2.0 * oversampling * dac_coeff * std::ldexp(1.0, 2 * dac_bits) * bandwidth;
    }

    double PowerBreakdown::parts_sum() const noexcept
    {
        return pa_radiated + pa_static + lna + syn + rf_circ + adc + dac + if_circ + phase_shifter + ce +
               pd + cd + ofdm + fixed_bs + ue_total;
    }

    double PowerCoefficients::evaluate(int num_antennas, int num_users, double tx_power_density,
                                       double sum_throughput) const noexcept
    {
        const double n = num_antennas;
        const double k = num_users;
        return i_p * k * tx_power_density + n * (i_n0 + i_n1 * k + i_n2 * k * k) + i_k1 * k +
               i_k3 * k * k * k + i_r * sum_throughput + i_fix;
    }

    PowerBreakdown component_powers(const PowerInputs &in, const HardwareProfile &hw,
                                    double sum_throughput)
    {
        hw.validate();
        check_inputs(in);
        const auto &p = in.protocol;
        const double b = p.bandwidth;
        const double n = in.num_antennas;
        const double k = in.num_users;
        const double xi = p.uplink_fraction + p.downlink_fraction;
        const double qb = hw.compute_efficiency;
        const double s = p.coherence_block_size;

        PowerBreakdown out;
        out.pa_radiated = p.downlink_fraction * b * k * in.tx_power_density / hw.pa_efficiency_bs;
        out.pa_static = p.downlink_fraction * n * hw.pa_static;
        out.lna = n * p.uplink_fraction * hw.lna_power(b);
        out.syn = n * hw.syn_power;
        out.rf_circ = n * hw.rf_circ;
        out.adc = n * p.uplink_fraction * hw.adc_power(b);
        out.dac = n * p.downlink_fraction * hw.dac_power(b);
        out.if_circ = n * hw.if_circ;
        out.ce = b / s * 8.0 * n * k * k * p.pilot_factor / qb;
        out.pd = b * p.pilot_efficiency(in.num_users) * xi * 8.0 * n * k / qb +
                 b * xi / s * (8.0 * k * k * k / 3.0 + 16.0 * n * k * k + 2.0 * n * k) / qb;
        out.cd = sum_throughput * hw.decode_flops / qb;
        out.ofdm = (n + k) * ofdm_per_stream(in, hw);
        out.fixed_bs = hw.fixed_bs;
        add_user_terminals(out, in, hw);
        out.total = out.parts_sum();
        return out;
    }

    PowerBreakdown component_powers_hybrid(const PowerInputs &in, const HardwareProfile &hw,
                                           double sum_throughput)
    {
        hw.validate();
        check_inputs(in);
        const auto &p = in.protocol;
        const double b = p.bandwidth;
        const double n = in.num_antennas;
        const double k = in.num_users;
        const double n_rf = hw.rf_chains(in.num_users);
        const double qb = hw.compute_efficiency;
        const double s = p.coherence_block_size;

        PowerBreakdown out;
        out.pa_radiated = p.downlink_fraction * b * k * in.tx_power_density / hw.pa_efficiency_bs;
        out.pa_static = p.downlink_fraction * n * hw.pa_static;
        out.lna = n * p.uplink_fraction * hw.lna_power(b);
        out.syn = n * hw.syn_power;
        out.rf_circ = n * hw.rf_circ;
        out.ce = n * 8.0 * b * k * k * p.pilot_factor / (s * qb);
        out.phase_shifter = n_rf * n * hw.phase_shifter;
        out.if_circ = n_rf * hw.if_circ;
        out.adc = n_rf * p.uplink_fraction * hw.adc_power(b);
        out.dac = n_rf * p.downlink_fraction * hw.dac_power(b);
        out.pd = n_rf * (b * p.pilot_efficiency(in.num_users) * 8.0 * k / qb +
                         b / (s * qb) * (16.0 * k * k + 2.0 * k)) +
                 8.0 * b * k * k * k / (3.0 * s * qb);
        out.cd = sum_throughput * hw.decode_flops / qb;
        out.ofdm = (n_rf + k) * ofdm_per_stream(in, hw);
        out.fixed_bs = hw.fixed_bs;
        add_user_terminals(out, in, hw);
        out.total = out.parts_sum();
        return out;
    }

    PowerCoefficients coefficients(CoefficientScheme scheme, const PowerInputs &in,
                                   const HardwareProfile &hw)
    {
        hw.validate();
        check_inputs(in);
        const auto &p = in.protocol;
        const bool normalized = scheme == CoefficientScheme::bandwidth_normalized;
        // B-proportional terms are evaluated at unit bandwidth in the
        // normalized scheme; B-independent terms vanish there.
        const double b = normalized ? 1.0 : p.bandwidth;
        const double flat = normalized ? 0.0 : 1.0;
        const double xu = p.uplink_fraction;
        const double xd = p.downlink_fraction;
        const double xi = xu + xd;
        const double qb = hw.compute_efficiency;
        const double s = p.coherence_block_size;
        const double tau = p.pilot_factor;

        PowerInputs unit = in;
        unit.protocol.bandwidth = b;
        const double ofdm = ofdm_per_stream(unit, hw);

        PowerCoefficients c;
        c.i_p = b * (xu / hw.pa_efficiency_ue + xd / hw.pa_efficiency_bs);
        c.i_n0 = xu * hw.lna_power(b) + xu * hw.adc_power(b) + xd * hw.dac_power(b) + ofdm +
                 flat * (hw.syn_power + hw.rf_circ + hw.if_circ + xd * hw.pa_static);
        c.i_n1 = b * 8.0 * xi / qb;
        c.i_n2 = b / (s * qb) * (16.0 * xi + 8.0 * tau - 8.0 * tau * xi);
        c.i_k1 = xd * hw.lna_power(b) + xd * hw.adc_power(b) + xu * hw.dac_power(b) + ofdm +
                 flat * (hw.syn_power + hw.rf_circ + hw.if_circ + hw.fixed_ue + xu * hw.pa_static);
        c.i_k3 = 8.0 * b * xi / (3.0 * s * qb);
        c.i_r = hw.decode_flops / qb;
        c.i_fix = flat * hw.fixed_bs;
        return c;
    }

    TotalPower total_power(SystemFamily family, const PowerInputs &in, const HardwareProfile &hw,
                           double sum_throughput)
    {
        TotalPower out;
        if (family == SystemFamily::mmwave)
        {
            out.breakdown = component_powers_hybrid(in, hw, sum_throughput);
            out.watts = out.breakdown.total;
            out.polynomial_watts = out.watts;
            out.reconciliation_gap = 0.0;
            return out;
        }
        out.breakdown = component_powers(in, hw, sum_throughput);
        out.watts = out.breakdown.total;
        out.polynomial_watts = coefficients(CoefficientScheme::xl_mimo, in, hw)
                                   .evaluate(in.num_antennas, in.num_users, in.tx_power_density,
                                             sum_throughput);
        out.reconciliation_gap = std::abs(out.polynomial_watts - out.watts) / out.watts;
        return out;
    }
}
