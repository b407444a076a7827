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

#ifndef XLMIMO_SCENARIO_HPP
#define XLMIMO_SCENARIO_HPP

#include "xlmimo/bounds.hpp"
#include "xlmimo/geometry.hpp"
#include "xlmimo/power.hpp"
#include "xlmimo/random.hpp"
#include "xlmimo/zf.hpp"

#include <cstdint>
#include <istream>
#include <string>
#include <utility>
#include <vector>

namespace xlmimo
{
    // -174 dBm/Hz thermal noise density in W/Hz.
    inline const double thermal_noise_density = 3.9810717055349565e-21;

    double dbm_per_hz_to_watts(double dbm);
    double watts_to_dbm_per_hz(double watts);

    /// One complete system configuration. Defaults are the mid-band
    /// reference deployment (7.5 GHz, 512 antennas, 400 MHz).
    struct Scenario
    {
        SystemFamily family = SystemFamily::xl_mimo;
        int num_antennas = 512;
        int num_users = 16;
        double carrier_frequency = 7.5e9; // Hz
        double antenna_spacing = 0.0;     // m; 0 selects half a wavelength
        CellGeometry cell;
        ProtocolConfig protocol;
        double tx_power_density = 1e-18; // W/Hz per user (-150 dBm/Hz)
        double noise_density = thermal_noise_density;
        double pathloss_constant = 1.0;
        double angular_spread = 0.0; // rad
        double rician_factor = 10.0;
        int quadrature_points = 64;
        double knee_fraction = 0.95;
        int interfering_cells = 0; // ring-of-interferers extension
        HardwareProfile hardware;

        double wavelength() const noexcept { return speed_of_light / carrier_frequency; }
        double spacing() const noexcept { return antenna_spacing > 0.0 ? antenna_spacing : 0.5 * wavelength(); }
        ArrayGeometry array() const { return ArrayGeometry(num_antennas, spacing()); }
        PropagationProfile propagation() const;
        LinkBudget budget() const { return LinkBudget::dual(tx_power_density, noise_density, num_users); }
        PowerInputs power_inputs() const { return {num_antennas, num_users, tx_power_density, protocol}; }

        // Throws ConfigError naming the violated invariant.
        void validate() const;
    };

    struct NamedScenario
    {
        std::string name;
        Scenario scenario;
    };

    const char *family_name(SystemFamily family) noexcept;

    // Quantity kinds accepted by configuration values and sweep grids.
    enum class QuantityKind
    {
        dimensionless,
        integer,
        frequency,     // Hz, kHz, MHz, GHz
        length,        // m, mm, km
        power,         // W, mW
        power_density, // dBm/Hz or W/Hz, unit required
        gain,          // linear, or dB
        angle,         // rad, deg
        boolean,
        family
    };

    // Parses one numeric value with an optional (or, for power densities,
    // mandatory) unit suffix. Returns the value in SI units.
    double parse_quantity(const std::string &text, QuantityKind kind);

    // Kind of a configuration key; throws ConfigError for unknown keys.
    QuantityKind key_kind(const std::string &key);

    // Applies one key = value assignment.
    void apply_setting(Scenario &sc, const std::string &key, const std::string &value, int line = 0);

    // Flat "key = value" text, '#' comments, blank lines ignored. Unset keys
    // keep their defaults; unknown keys are errors. Validates the result.
    Scenario parse_scenario(std::istream &in, Scenario base = Scenario{});
    Scenario load_scenario(const std::string &path);

    // Canonical "key = value" listing (fixed key order, round-trip precision)
    // and its 64-bit FNV-1a hash as 16 hex digits.
    std::string canonical_dump(const Scenario &sc);
    std::string config_hash(const Scenario &sc);

    // "[name]" sections of overrides on top of the defaults.
    std::vector<NamedScenario> parse_setups(std::istream &in);
    std::vector<NamedScenario> load_setups(const std::string &path);

    // Three reference deployments: sub-6 GHz, mid-band XL-MIMO, mmWave hybrid.
    std::vector<NamedScenario> reference_setups();

    // Inter-cell amplitude gains lambda/d for K users in each of num_cells
    // neighbouring cells centred 2 r_max away on a hexagonal ring.
    std::vector<double> ring_interferer_gains(const Scenario &sc, int num_cells, RandomStream &rng);
}

#endif
