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

#include "xlmimo/scenario.hpp"
#include "xlmimo/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

namespace xlmimo
{
    double dbm_per_hz_to_watts(double dbm) { return std::pow(10.0, dbm / 10.0) * 1e-3; }
    double watts_to_dbm_per_hz(double watts) { return 10.0 * std::log10(watts * 1e3); }

    const char *family_name(SystemFamily family) noexcept
    {
        switch (family)
        {
        case SystemFamily::xl_mimo:
            return "xl_mimo";
        case SystemFamily::sub6:
            return "sub6";
        case SystemFamily::mmwave:
            return "mmwave";
        }
        return "?";
    }

    PropagationProfile Scenario::propagation() const
    {
        PropagationProfile p;
        p.wavelength = wavelength();
        p.pathloss_constant = pathloss_constant;
        p.angular_spread = angular_spread;
        p.rician_factor = rician_factor;
        p.quadrature_points = quadrature_points;
        return p;
    }

    void Scenario::validate() const
    {
        auto wrap = [](const auto &fn)
        {
            try
            {
                fn();
            }
            catch (const DomainError &e)
            {
                throw ConfigError(e.what());
            }
        };
        if (num_antennas < 1)
            throw ConfigError("num_antennas must be at least 1");
        if (num_users < 1)
            throw ConfigError("num_users must be at least 1");
        if (num_users > num_antennas)
            throw ConfigError("num_users must not exceed num_antennas");
        if (!(carrier_frequency > 0.0))
            throw ConfigError("carrier_frequency must be positive");
        if (!(antenna_spacing >= 0.0))
            throw ConfigError("antenna_spacing must be non-negative (0 selects half a wavelength)");
        if (!(tx_power_density > 0.0) || !(noise_density > 0.0))
            throw ConfigError("tx_power and noise_density must be positive");
        if (!(knee_fraction > 0.0 && knee_fraction < 1.0))
            throw ConfigError("knee_fraction must lie in (0, 1)");
        if (interfering_cells < 0 || interfering_cells > 6)
            throw ConfigError("interfering_cells must lie in [0, 6]");
        if (!(pathloss_constant > 0.0))
            throw ConfigError("pathloss_constant must be positive");
        if (std::abs(protocol.uplink_fraction + protocol.downlink_fraction - 1.0) > 1e-9)
            throw ConfigError("xi_ul + xi_dl must equal 1");
        wrap([&] { cell.validate(); });
        wrap([&] { protocol.validate(); });
        wrap([&] { protocol.check_overhead(num_users); });
        wrap([&] { propagation().validate(); });
        wrap([&] { hardware.validate(); });
    }

    // ------------------------------------------------------------------
    // Quantities

    namespace
    {
        std::string trim(const std::string &s)
        {
            const auto b = s.find_first_not_of(" \t\r\n");
            if (b == std::string::npos)
                return {};
            const auto e = s.find_last_not_of(" \t\r\n");
            return s.substr(b, e - b + 1);
        }

        std::string lower(std::string s)
        {
            std::transform(s.begin(), s.end(), s.begin(),
                           [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
            return s;
        }

        // Splits "12.5 GHz" into the number and the (possibly empty) unit.
        std::pair<double, std::string> split_number(const std::string &text)
        {
            const std::string t = trim(text);
            if (t.empty())
                throw ConfigError("empty value");
            std::size_t used = 0;
            double v;
            try
            {
                v = std::stod(t, &used);
            }
            catch (const std::exception &)
            {
                throw ConfigError("not a number: '" + t + "'");
            }
            if (!std::isfinite(v))
                throw ConfigError("value must be finite: '" + t + "'");
            return {v, trim(t.substr(used))};
        }

        double scale_unit(double v, const std::string &unit, const std::string &text,
                          std::initializer_list<std::pair<const char *, double>> table)
        {
            const std::string u = lower(unit);
            for (const auto &[name, factor] : table)
                if (u == name)
                    return v * factor;
            throw ConfigError("unknown unit in '" + text + "'");
        }
    }

    double parse_quantity(const std::string &text, QuantityKind kind)
    {
        if (kind == QuantityKind::boolean)
        {
            const std::string t = lower(trim(text));
            if (t == "true" || t == "on" || t == "yes" || t == "1")
                return 1.0;
            if (t == "false" || t == "off" || t == "no" || t == "0")
                return 0.0;
            throw ConfigError("expected a boolean: '" + trim(text) + "'");
        }
        if (kind == QuantityKind::family)
        {
            const std::string t = lower(trim(text));
            if (t == "xl_mimo")
                return static_cast<double>(SystemFamily::xl_mimo);
            if (t == "sub6")
                return static_cast<double>(SystemFamily::sub6);
            if (t == "mmwave")
                return static_cast<double>(SystemFamily::mmwave);
            throw ConfigError("family must be one of xl_mimo, sub6, mmwave: '" + trim(text) + "'");
        }

        const auto [v, unit] = split_number(text);
        switch (kind)
        {
        case QuantityKind::dimensionless:
            if (!unit.empty())
                throw ConfigError("unexpected unit in '" + trim(text) + "'");
            return v;
        case QuantityKind::integer:
            if (!unit.empty() || v != std::floor(v) || std::abs(v) > 2e9)
                throw ConfigError("expected an integer: '" + trim(text) + "'");
            return v;
        case QuantityKind::frequency:
            return scale_unit(v, unit, text, {{"", 1.0}, {"hz", 1.0}, {"khz", 1e3}, {"mhz", 1e6}, {"ghz", 1e9}});
        case QuantityKind::length:
            return scale_unit(v, unit, text, {{"", 1.0}, {"m", 1.0}, {"mm", 1e-3}, {"km", 1e3}});
        case QuantityKind::power:
            return scale_unit(v, unit, text, {{"", 1.0}, {"w", 1.0}, {"mw", 1e-3}});
        case QuantityKind::angle:
            return scale_unit(v, unit, text, {{"", 1.0}, {"rad", 1.0}, {"deg", pi / 180.0}});
        case QuantityKind::gain:
            if (lower(unit) == "db")
                return std::pow(10.0, v / 10.0);
            return scale_unit(v, unit, text, {{"", 1.0}});
        case QuantityKind::power_density:
        {
            const std::string u = lower(unit);
            if (u == "dbm/hz")
                return dbm_per_hz_to_watts(v);
            if (u == "w/hz")
                return v;
            throw ConfigError("power density needs a 'dBm/Hz' or 'W/Hz' unit: '" + trim(text) + "'");
        }
        default:
            break;
        }
        throw ConfigError("unsupported quantity");
    }

    // ------------------------------------------------------------------
    // Key table

    namespace
    {
        struct KeySpec
        {
            const char *name;
            QuantityKind kind;
            std::function<void(Scenario &, double)> set;
            std::function<double(const Scenario &)> get;
        };

#define XLMIMO_KEY(NAME, KIND, FIELD)                                           \
    KeySpec                                                                     \
    {                                                                           \
        NAME, QuantityKind::KIND, [](Scenario &s, double v) { s.FIELD = v; },   \
            [](const Scenario &s) { return static_cast<double>(s.FIELD); }      \
    }
#define XLMIMO_INT_KEY(NAME, FIELD)                                                        \
    KeySpec                                                                                \
    {                                                                                      \
        NAME, QuantityKind::integer, [](Scenario &s, double v) { s.FIELD = static_cast<int>(v); }, \
            [](const Scenario &s) { return static_cast<double>(s.FIELD); }                 \
    }

        const std::vector<KeySpec> &key_table()
        {
            static const std::vector<KeySpec> table = {
                KeySpec{"family", QuantityKind::family,
                        [](Scenario &s, double v) { s.family = static_cast<SystemFamily>(static_cast<int>(v)); },
                        [](const Scenario &s) { return static_cast<double>(s.family); }},
                XLMIMO_INT_KEY("num_antennas", num_antennas),
                XLMIMO_INT_KEY("num_users", num_users),
                XLMIMO_KEY("carrier_frequency", frequency, carrier_frequency),
                XLMIMO_KEY("antenna_spacing", length, antenna_spacing),
                XLMIMO_KEY("r_min", length, cell.r_min),
                XLMIMO_KEY("r_max", length, cell.r_max),
                XLMIMO_KEY("bandwidth", frequency, protocol.bandwidth),
                XLMIMO_KEY("coherence_block_size", dimensionless, protocol.coherence_block_size),
                XLMIMO_KEY("pilot_factor", dimensionless, protocol.pilot_factor),
                XLMIMO_KEY("xi_ul", dimensionless, protocol.uplink_fraction),
                XLMIMO_KEY("xi_dl", dimensionless, protocol.downlink_fraction),
                XLMIMO_KEY("tx_power", power_density, tx_power_density),
                XLMIMO_KEY("noise_density", power_density, noise_density),
                XLMIMO_KEY("pathloss_constant", dimensionless, pathloss_constant),
                XLMIMO_KEY("angular_spread", angle, angular_spread),
                XLMIMO_KEY("rician_factor", dimensionless, rician_factor),
                XLMIMO_INT_KEY("quadrature_points", quadrature_points),
                XLMIMO_KEY("knee_fraction", dimensionless, knee_fraction),
                XLMIMO_INT_KEY("interfering_cells", interfering_cells),
                XLMIMO_KEY("pa_efficiency_bs", dimensionless, hardware.pa_efficiency_bs),
                XLMIMO_KEY("pa_efficiency_ue", dimensionless, hardware.pa_efficiency_ue),
                XLMIMO_KEY("pa_static", power, hardware.pa_static),
                XLMIMO_KEY("lna_coeff", dimensionless, hardware.lna_coeff),
                XLMIMO_KEY("lna_gain", gain, hardware.lna_gain),
                XLMIMO_KEY("syn_power", power, hardware.syn_power),
                XLMIMO_KEY("rf_circ", power, hardware.rf_circ),
                XLMIMO_KEY("if_circ", power, hardware.if_circ),
                XLMIMO_KEY("adc_coeff", dimensionless, hardware.adc_coeff),
                XLMIMO_KEY("dac_coeff", dimensionless, hardware.dac_coeff),
                XLMIMO_INT_KEY("adc_bits", hardware.adc_bits),
                XLMIMO_INT_KEY("dac_bits", hardware.dac_bits),
                XLMIMO_KEY("oversampling", dimensionless, hardware.oversampling),
                XLMIMO_KEY("compute_efficiency", dimensionless, hardware.compute_efficiency),
                XLMIMO_KEY("decode_flops", dimensionless, hardware.decode_flops),
                XLMIMO_KEY("fixed_bs", power, hardware.fixed_bs),
                XLMIMO_KEY("fixed_ue", power, hardware.fixed_ue),
                XLMIMO_KEY("phase_shifter", power, hardware.phase_shifter),
                XLMIMO_INT_KEY("num_rf_chains", hardware.num_rf_chains),
                KeySpec{"ofdm", QuantityKind::boolean, [](Scenario &s, double v) { s.hardware.ofdm = v != 0.0; },
                        [](const Scenario &s) { return s.hardware.ofdm ? 1.0 : 0.0; }},
                XLMIMO_INT_KEY("num_subcarriers", hardware.num_subcarriers),
            };
            return table;
        }

#undef XLMIMO_KEY
#undef XLMIMO_INT_KEY

        const KeySpec &find_key(const std::string &key, int line)
        {
            for (const auto &k : key_table())
                if (key == k.name)
                    return k;
            throw ConfigError("unknown key '" + key + "'", line);
        }

        std::string format_g17(double v)
        {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            return buf;
        }

        std::ifstream open_input(const std::string &path)
        {
            std::ifstream in(path);
            if (!in)
                throw IoError("cannot open '" + path + "'");
            return in;
        }

        // Splits "key = value" after stripping comments; returns false for
        // blank lines.
        bool split_assignment(std::string line, int number, std::string &key, std::string &value)
        {
            const auto hash = line.find('#');
            if (hash != std::string::npos)
                line.erase(hash);
            line = trim(line);
            if (line.empty())
                return false;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw ConfigError("expected 'key = value'", number);
            key = trim(line.substr(0, eq));
            value = trim(line.substr(eq + 1));
            if (key.empty())
                throw ConfigError("missing key", number);
            return true;
        }
    }

    QuantityKind key_kind(const std::string &key) { return find_key(key, 0).kind; }

    void apply_setting(Scenario &sc, const std::string &key, const std::string &value, int line)
    {
        const auto &spec = find_key(key, line);
        try
        {
            spec.set(sc, parse_quantity(value, spec.kind));
        }
        catch (const ConfigError &e)
        {
            if (line > 0)
                throw ConfigError(key + ": " + e.what(), line);
            throw ConfigError(key + ": " + e.what());
        }
    }

    Scenario parse_scenario(std::istream &in, Scenario base)
    {
        std::string line, key, value;
        int number = 0;
        while (std::getline(in, line))
        {
            ++number;
            if (split_assignment(line, number, key, value))
                apply_setting(base, key, value, number);
        }
        base.validate();
        return base;
    }

    Scenario load_scenario(const std::string &path)
    {
        auto in = open_input(path);
        return parse_scenario(in);
    }

    std::string canonical_dump(const Scenario &sc)
    {
        std::string out;
        for (const auto &k : key_table())
        {
            out += k.name;
            out += " = ";
            if (k.kind == QuantityKind::family)
                out += family_name(sc.family);
            else if (k.kind == QuantityKind::boolean)
                out += k.get(sc) != 0.0 ? "true" : "false";
            else if (k.kind == QuantityKind::power_density)
                out += format_g17(k.get(sc)) + " W/Hz";
            else
                out += format_g17(k.get(sc));
            out += '\n';
        }
        return out;
    }

    std::string config_hash(const Scenario &sc)
    {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (unsigned char c : canonical_dump(sc))
        {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
        return buf;
    }

    std::vector<NamedScenario> parse_setups(std::istream &in)
    {
        struct Pending
        {
            std::string name;
            Scenario sc;
            int line;
        };
        std::vector<Pending> sections;
        std::string line, key, value;
        int number = 0;
        while (std::getline(in, line))
        {
            ++number;
            std::string t = trim(line.substr(0, line.find('#')));
            if (!t.empty() && t.front() == '[')
            {
                if (t.back() != ']' || t.size() < 3)
                    throw ConfigError("malformed section header", number);
                const std::string name = trim(t.substr(1, t.size() - 2));
                for (const auto &s : sections)
                    if (s.name == name)
                        throw ConfigError("duplicate section '" + name + "'", number);
                sections.push_back({name, Scenario{}, number});
                continue;
            }
            if (!split_assignment(line, number, key, value))
                continue;
            if (sections.empty())
                throw ConfigError("setting outside of a [section]", number);
            apply_setting(sections.back().sc, key, value, number);
        }

        std::vector<NamedScenario> out;
        for (auto &s : sections)
        {
            try
            {
                s.sc.validate();
            }
            catch (const ConfigError &e)
            {
                throw ConfigError("[" + s.name + "] " + e.what(), s.line);
            }
            out.push_back({s.name, s.sc});
        }
        return out;
    }

    std::vector<NamedScenario> load_setups(const std::string &path)
    {
        auto in = open_input(path);
        return parse_setups(in);
    }

    std::vector<NamedScenario> reference_setups()
    {
        Scenario s1;
        s1.family = SystemFamily::sub6;
        s1.carrier_frequency = 3.5e9;
        s1.num_antennas = 64;
        s1.protocol.bandwidth = 20e6;
        s1.num_users = 8;
        s1.cell = {70.0, 500.0};

        Scenario s2;
        s2.family = SystemFamily::xl_mimo;
        s2.carrier_frequency = 7.5e9;
        s2.num_antennas = 512;
        s2.protocol.bandwidth = 400e6;
        s2.num_users = 16;
        s2.cell = {70.0, 200.0};

        Scenario s3;
        s3.family = SystemFamily::mmwave;
        s3.carrier_frequency = 28e9;
        s3.num_antennas = 256;
        s3.protocol.bandwidth = 800e6;
        s3.num_users = 16;
        s3.cell = {70.0, 150.0};

        return {{"setup1", s1}, {"setup2", s2}, {"setup3", s3}};
    }

    std::vector<double> ring_interferer_gains(const Scenario &sc, int num_cells, RandomStream &rng)
    {
        if (num_cells < 0 || num_cells > 6)
            throw DomainError("ring interferers: between 0 and 6 neighbouring cells");
        const double lambda = sc.wavelength();
        const double r_min = sc.cell.r_min;
        const double r_max = sc.cell.r_max;
        std::vector<double> gains;
        gains.reserve(static_cast<std::size_t>(num_cells) * sc.num_users);
        for (int l = 0; l < num_cells; ++l)
        {
            const double ang = 2.0 * pi * l / 6.0;
            const double cx = 2.0 * r_max * std::cos(ang);
            const double cy = 2.0 * r_max * std::sin(ang);
            for (int u = 0; u < sc.num_users; ++u)
            {
                const double r = std::sqrt(r_min * r_min + rng.uniform() * (r_max * r_max - r_min * r_min));
                const double phi = 2.0 * pi * rng.uniform();
                const double d = std::hypot(cx + r * std::cos(phi), cy + r * std::sin(phi));
                gains.push_back(lambda / d);
            }
        }
        return gains;
    }
}
