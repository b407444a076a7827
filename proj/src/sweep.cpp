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

#include "xlmimo/sweep.hpp"
#include "xlmimo/errors.hpp"
#include "xlmimo/parallel.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <map>
#include <sstream>

namespace xlmimo
{
    const char *const csv_header =
        "axis_value,N,K,B_hz,P_w_per_hz,se_ub,se_app,se_mc_mean,se_mc_ci95,throughput_bps,p_total_w,"
        "p_pa_w,p_converters_w,p_baseband_w,p_fixed_w,ee_bits_per_joule,notes";

    namespace
    {
        std::string trim(const std::string &s)
        {
            const auto b = s.find_first_not_of(" \t");
            if (b == std::string::npos)
                return {};
            return s.substr(b, s.find_last_not_of(" \t") - b + 1);
        }

        std::vector<std::string> split(const std::string &s, char sep)
        {
            std::vector<std::string> out;
            std::stringstream ss(s);
            std::string item;
            while (std::getline(ss, item, sep))
                out.push_back(trim(item));
            return out;
        }

        std::string fmt(double v)
        {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.12g", v);
            return buf;
        }

        std::string utc_now()
        {
            const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
            std::tm tm{};
            gmtime_r(&t, &tm);
            char buf[32];
            std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
            return buf;
        }

        void apply_axis(Scenario &sc, SweepAxis axis, double v)
        {
            switch (axis)
            {
            case SweepAxis::bandwidth:
                sc.protocol.bandwidth = v;
                break;
            case SweepAxis::antennas:
                sc.num_antennas = static_cast<int>(v);
                break;
            case SweepAxis::users:
                sc.num_users = static_cast<int>(v);
                break;
            case SweepAxis::tx_power:
                sc.tx_power_density = v;
                break;
            }
        }

        void write_text(const std::string &path, const std::string &text)
        {
            std::ofstream out(path, std::ios::binary | std::ios::trunc);
            if (!out)
                throw IoError("cannot open '" + path + "' for writing");
            out << text;
            out.flush();
            if (!out)
                throw IoError("write to '" + path + "' failed");
        }

        long long total_rejected(const std::vector<SweepRow> &rows)
        {
            long long n = 0;
            for (const auto &r : rows)
                n += r.rejected;
            return n;
        }

        void write_manifest(const std::string &output_path, const RunManifest &m,
                            const std::map<std::string, std::string> &configs, nlohmann::json extra)
        {
            nlohmann::json j;
            j["tool"] = "xlmimo";
            j["tool_version"] = m.tool_version;
            j["command"] = m.command;
            j["config_hash"] = m.config_hash;
            j["seed"] = m.seed;
            j["start_time"] = m.start_time;
            j["end_time"] = m.end_time;
            j["rejected_draws"] = m.rejected_draws;
            j["rows"] = m.rows;
            j["output"] = output_path;
            j["config"] = m.canonical_config;
            nlohmann::json cfg = nlohmann::json::object();
            for (const auto &[hash, text] : configs)
                cfg[hash] = text;
            j["point_configs"] = cfg;
            for (auto it = extra.begin(); it != extra.end(); ++it)
                j[it.key()] = it.value();
            write_text(output_path + ".manifest.json", j.dump(2) + "\n");
        }
    }

    // ------------------------------------------------------------------
    // Sweep definition

    void SweepSpec::validate() const
    {
        if (values.empty())
            throw ConfigError("sweep: values must not be empty");
        for (std::size_t i = 1; i < values.size(); ++i)
            if (!(values[i] > values[i - 1]))
                throw ConfigError("sweep: values must be strictly increasing");
        for (double v : values)
            if (!(v > 0.0) || !std::isfinite(v))
                throw ConfigError("sweep: values must be positive and finite");
        if ((axis == SweepAxis::antennas || axis == SweepAxis::users))
            for (double v : values)
                if (v != std::floor(v))
                    throw ConfigError("sweep: antenna and user counts must be integers");
        if (mode != SweepMode::closed_form && trials < 1)
            throw ConfigError("sweep: trials must be at least 1 in monte_carlo mode");
        if (workers < 1)
            throw ConfigError("sweep: workers must be at least 1");
    }

    SweepAxis parse_axis(const std::string &name)
    {
        if (name == "bandwidth")
            return SweepAxis::bandwidth;
        if (name == "antennas")
            return SweepAxis::antennas;
        if (name == "users")
            return SweepAxis::users;
        if (name == "tx_power")
            return SweepAxis::tx_power;
        throw ConfigError("axis must be one of bandwidth, antennas, users, tx_power (got '" + name + "')");
    }

    SweepMode parse_mode(const std::string &name)
    {
        if (name == "closed_form")
            return SweepMode::closed_form;
        if (name == "monte_carlo")
            return SweepMode::monte_carlo;
        if (name == "both")
            return SweepMode::both;
        throw ConfigError("mode must be one of closed_form, monte_carlo, both (got '" + name + "')");
    }

    const char *axis_name(SweepAxis axis) noexcept
    {
        switch (axis)
        {
        case SweepAxis::bandwidth:
            return "bandwidth";
        case SweepAxis::antennas:
            return "antennas";
        case SweepAxis::users:
            return "users";
        case SweepAxis::tx_power:
            return "tx_power";
        }
        return "?";
    }

    const char *mode_name(SweepMode mode) noexcept
    {
        switch (mode)
        {
        case SweepMode::closed_form:
            return "closed_form";
        case SweepMode::monte_carlo:
            return "monte_carlo";
        case SweepMode::both:
            return "both";
        }
        return "?";
    }

    QuantityKind axis_kind(SweepAxis axis) noexcept
    {
        switch (axis)
        {
        case SweepAxis::bandwidth:
            return QuantityKind::frequency;
        case SweepAxis::antennas:
        case SweepAxis::users:
            return QuantityKind::dimensionless;
        case SweepAxis::tx_power:
            return QuantityKind::power_density;
        }
        return QuantityKind::dimensionless;
    }

    std::vector<double> parse_values(const std::string &text, QuantityKind kind)
    {
        const std::string t = trim(text);
        if (t.rfind("lin:", 0) == 0 || t.rfind("log:", 0) == 0)
        {
            const auto parts = split(t, ':');
            if (parts.size() != 4)
                throw ConfigError("grid must be lin:start:stop:count or log:start:stop:count");
            const double a = parse_quantity(parts[1], kind);
            const double b = parse_quantity(parts[2], kind);
            const double n = parse_quantity(parts[3], QuantityKind::integer);
            if (n < 1)
                throw ConfigError("grid count must be at least 1");
            const int count = static_cast<int>(n);
            const bool log = parts[0] == "log";
            if (log && !(a > 0.0 && b > 0.0))
                throw ConfigError("log grid needs positive end points");
            std::vector<double> out;
            for (int i = 0; i < count; ++i)
            {
                const double f = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
                double v = log ? std::exp(std::log(a) + f * (std::log(b) - std::log(a))) : a + f * (b - a);
                if (i == count - 1)
                    v = b;
                out.push_back(v);
            }
            return out;
        }
        std::vector<double> out;
        for (const auto &item : split(t, ','))
            out.push_back(parse_quantity(item, kind));
        if (out.empty())
            throw ConfigError("empty value list");
        return out;
    }

    // ------------------------------------------------------------------
    // Evaluation

    SweepRow evaluate_point(const Scenario &sc, SweepMode mode, const MonteCarloOptions &mc)
    {
        SweepRow row;
        row.num_antennas = sc.num_antennas;
        row.num_users = sc.num_users;
        row.bandwidth = sc.protocol.bandwidth;
        row.tx_power_density = sc.tx_power_density;

        try
        {
            sc.validate();
        }
        catch (const ConfigError &e)
        {
            row.notes.push_back("invalid");
            return row;
        }
        row.notes.push_back("cfg=" + config_hash(sc));

        if (sc.family == SystemFamily::xl_mimo)
        {
            try
            {
                row.se_ub = se_upper_bound(sc.num_antennas, sc.spacing(), sc.cell, sc.num_users, sc.budget(),
                                           sc.wavelength());
            }
            catch (const VacuousBoundError &)
            {
                row.notes.push_back("ub_vacuous");
            }
            catch (const DomainError &)
            {
                row.notes.push_back("ub_out_of_domain");
            }
        }

        try
        {
            row.se_app = closed_form_se(sc);
        }
        catch (const VacuousBoundError &)
        {
            row.notes.push_back("app_vacuous");
        }
        catch (const DomainError &)
        {
            row.notes.push_back("app_out_of_domain");
        }

        if (mode != SweepMode::closed_form)
        {
            try
            {
                const auto est = mc_ergodic_se(sc, sc.num_users, mc);
                row.se_mc_mean = est.mean;
                row.se_mc_ci95 = est.half_ci95;
                row.rejected = est.rejected;
            }
            catch (const DomainError &)
            {
                row.notes.push_back("mc_out_of_domain");
            }
        }

        const std::optional<double> rate = mode == SweepMode::monte_carlo ? row.se_mc_mean : row.se_app;
        if (rate)
        {
            row.notes.push_back(mode == SweepMode::monte_carlo ? "rate=mc" : "rate=app");
            const EePoint p = energy_efficiency_at(sc, *rate);
            row.throughput = p.throughput;
            row.p_total = p.power;
            row.p_pa = p.breakdown.pa();
            row.p_converters = p.breakdown.converters();
            row.p_baseband = p.breakdown.baseband();
            row.p_fixed = p.breakdown.fixed();
            row.ee = p.ee;
        }
        return row;
    }

    namespace
    {
        std::vector<Scenario> sweep_points(const Scenario &base, const SweepSpec &spec)
        {
            std::vector<Scenario> points;
            for (double v : spec.values)
            {
                Scenario sc = base;
                apply_axis(sc, spec.axis, v);
                points.push_back(sc);
            }
            return points;
        }
    }

    std::vector<SweepRow> evaluate_sweep(const Scenario &base, const SweepSpec &spec)
    {
        spec.validate();
        base.validate();
        const auto points = sweep_points(base, spec);
        std::vector<SweepRow> rows(points.size());

        auto point = [&](std::size_t i, int mc_workers)
        {
            MonteCarloOptions mc;
            mc.trials = spec.trials;
            mc.seed = derive_seed(spec.seed, {static_cast<std::uint64_t>(i)});
            mc.workers = mc_workers;
            rows[i] = evaluate_point(points[i], spec.mode, mc);
            rows[i].axis_value = spec.values[i];
        };

        if (spec.mode == SweepMode::closed_form)
            parallel_for(points.size(), spec.workers, [&](std::size_t i) { point(i, 1); });
        else
            for (std::size_t i = 0; i < points.size(); ++i)
                point(i, spec.workers);

        if (spec.axis == SweepAxis::antennas && base.family == SystemFamily::xl_mimo)
        {
            const double knee = knee_point(base, base.knee_fraction, {}).knee;
            for (auto &r : rows)
                r.notes.push_back("knee=" + fmt(knee));
        }
        return rows;
    }

    std::vector<SweepRow> evaluate_compare(const std::vector<NamedScenario> &setups,
                                           const std::vector<double> &p_grid, int workers)
    {
        std::vector<std::pair<std::string, Scenario>> points;
        for (const auto &s : setups)
            for (double p : p_grid)
            {
                Scenario sc = s.scenario;
                sc.tx_power_density = p;
                points.emplace_back(s.name, sc);
            }

        std::vector<SweepRow> rows(points.size());
        parallel_for(points.size(), workers, [&](std::size_t i)
        {
            rows[i] = evaluate_point(points[i].second, SweepMode::closed_form, MonteCarloOptions{});
            rows[i].axis_value = points[i].second.tx_power_density;
            rows[i].notes.insert(rows[i].notes.begin(),
                                 {"setup=" + points[i].first,
                                  std::string("family=") + family_name(points[i].second.family)});
        });
        return rows;
    }

    std::string format_csv(const std::vector<SweepRow> &rows)
    {
        std::string out = csv_header;
        out += '\n';
        auto cell = [&](const std::optional<double> &v)
        {
            out += ',';
            if (v && std::isfinite(*v))
                out += fmt(*v);
        };
        for (const auto &r : rows)
        {
            out += fmt(r.axis_value);
            out += ',' + std::to_string(r.num_antennas);
            out += ',' + std::to_string(r.num_users);
            out += ',' + fmt(r.bandwidth);
            out += ',' + fmt(r.tx_power_density);
            cell(r.se_ub);
            cell(r.se_app);
            cell(r.se_mc_mean);
            cell(r.se_mc_ci95);
            cell(r.throughput);
            cell(r.p_total);
            cell(r.p_pa);
            cell(r.p_converters);
            cell(r.p_baseband);
            cell(r.p_fixed);
            cell(r.ee);
            out += ',';
            for (std::size_t i = 0; i < r.notes.size(); ++i)
                out += (i ? ";" : "") + r.notes[i];
            out += '\n';
        }
        return out;
    }

    RunManifest run_sweep(const Scenario &base, const SweepSpec &spec, const std::string &output_path)
    {
        RunManifest m;
        m.start_time = utc_now();
        const auto rows = evaluate_sweep(base, spec);
        write_text(output_path, format_csv(rows));
        m.end_time = utc_now();

        m.config_hash = config_hash(base);
        m.canonical_config = canonical_dump(base);
        m.seed = spec.seed;
        m.tool_version = tool_version;
        m.command = "sweep";
        m.rejected_draws = total_rejected(rows);
        m.rows = rows.size();

        std::map<std::string, std::string> configs;
        for (const auto &sc : sweep_points(base, spec))
            configs[config_hash(sc)] = canonical_dump(sc);

        nlohmann::json extra;
        extra["axis"] = axis_name(spec.axis);
        extra["values"] = spec.values;
        extra["mode"] = mode_name(spec.mode);
        extra["trials"] = spec.trials;
        extra["workers"] = spec.workers;
        write_manifest(output_path, m, configs, extra);
        return m;
    }

    RunManifest run_compare(const std::vector<NamedScenario> &setups, const std::vector<double> &p_grid,
                            const std::string &output_path, int workers)
    {
        RunManifest m;
        m.start_time = utc_now();
        const auto rows = evaluate_compare(setups, p_grid, workers);
        write_text(output_path, format_csv(rows));
        m.end_time = utc_now();

        std::string combined;
        std::map<std::string, std::string> configs;
        nlohmann::json names = nlohmann::json::array();
        for (const auto &s : setups)
        {
            combined += "[" + s.name + "]\n" + canonical_dump(s.scenario);
            names.push_back(s.name);
            for (double p : p_grid)
            {
                Scenario sc = s.scenario;
                sc.tx_power_density = p;
                configs[config_hash(sc)] = canonical_dump(sc);
            }
        }
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (unsigned char c : combined)
        {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));

        m.config_hash = buf;
        m.canonical_config = combined;
        m.tool_version = tool_version;
        m.command = "compare";
        m.rows = rows.size();

        nlohmann::json extra;
        extra["setups"] = names;
        extra["p_grid_w_per_hz"] = p_grid;
        extra["workers"] = workers;
        write_manifest(output_path, m, configs, extra);
        return m;
    }
}
