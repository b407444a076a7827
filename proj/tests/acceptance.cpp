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

// Acceptance suite: one PASS/FAIL line per criterion; exit status is the
// number of failed criteria.

#include "oracles.hpp"
#include "xlmimo/bounds.hpp"
#include "xlmimo/efficiency.hpp"
#include "xlmimo/errors.hpp"
#include "xlmimo/expint.hpp"
#include "xlmimo/monte_carlo.hpp"
#include "xlmimo/power.hpp"
#include "xlmimo/random.hpp"
#include "xlmimo/scenario.hpp"
#include "xlmimo/zf.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdarg>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

using namespace xlmimo;

namespace
{
    struct Outcome
    {
        bool pass = true;
        std::string detail;
    };

    std::string format(const char *fmt, ...) __attribute__((format(printf, 1, 2)));
    std::string format(const char *fmt, ...)
    {
        char buf[512];
        va_list ap;
        va_start(ap, fmt);
        std::vsnprintf(buf, sizeof buf, fmt, ap);
        va_end(ap);
        return buf;
    }

    double fit_residual(const std::vector<double> &x, const std::vector<double> &y, int degree)
    {
        // Least-squares polynomial fit; worst residual relative to max |y|.
        arma::mat v(x.size(), degree + 1);
        for (std::size_t i = 0; i < x.size(); ++i)
            for (int j = 0; j <= degree; ++j)
                v(i, j) = std::pow(x[i], j);
        const arma::vec yy(y);
        const arma::vec c = arma::solve(v, yy);
        return arma::abs(v * c - yy).max() / arma::abs(yy).max();
    }

    // ------------------------------------------------------------------

    Outcome bound_tightness()
    {
        Outcome out;
        Scenario sc;
        sc.num_antennas = 128;
        sc.angular_spread = 0.0;
        const double lambda = sc.wavelength();
        double worst_gap = 0.0, worst_ub = INFINITY;
        int points = 0;
        for (int k : {4, 8})
        {
            sc.num_users = k;
            const double gain = chi_bar(sc.num_antennas, sc.spacing(), sc.cell) -
                                (k - 1) * i_bar(sc.num_antennas, sc.spacing(), sc.cell);
            for (int snr_db = 0; snr_db <= 30; snr_db += 5)
            {
                sc.tx_power_density = std::pow(10.0, snr_db / 10.0) * sc.noise_density / (lambda * lambda * gain);
                MonteCarloOptions opt;
                opt.trials = 2000;
                opt.seed = 1000 + 100 * k + snr_db;
                const auto mc = mc_ergodic_se(sc, k, opt);
                const double ub = se_upper_bound(sc.num_antennas, sc.spacing(), sc.cell, k, sc.budget(), lambda);
                const double app = se_approx(sc.num_antennas, sc.spacing(), sc.cell, k, sc.budget(), lambda);
                worst_ub = std::min(worst_ub, ub - (mc.mean - mc.half_ci95));
                if (ub < mc.mean - mc.half_ci95)
                    out.pass = false;
                if (mc.mean >= 1.0)
                {
                    const double gap = std::abs(app - mc.mean) / mc.mean;
                    worst_gap = std::max(worst_gap, gap);
                    if (gap > 0.15)
                        out.pass = false;
                }
                ++points;
            }
        }
        out.detail = format("%d points; min(R_ub - (mc - ci)) = %.3g; max |R_app - mc|/mc = %.3f (limit 0.15)",
                            points, worst_ub, worst_gap);
        return out;
    }

    Outcome quadrature_oracles()
    {
        Outcome out;
        RandomStream rng(20260101);
        double worst[4] = {0, 0, 0, 0};
        for (int draw = 0; draw < 50; ++draw)
        {
            const double r_min = 20.0 + 80.0 * rng.uniform();
            const double r_max = r_min + 10.0 + 400.0 * rng.uniform();
            const CellGeometry cell{r_min, r_max};
            const double d = 0.005 + 0.05 * rng.uniform();
            const double pole = 2.0 * r_min / d;
            const double n = 1.0 + (0.95 * pole - 1.0) * rng.uniform();

            worst[0] = std::max(worst[0], oracle::rel(chi_bar(n, d, cell), oracle::chi_bar_quad(n, d, r_min, r_max)));
            worst[1] = std::max(worst[1], oracle::rel(i_bar(n, d, cell), oracle::i_bar_quad(n, d, r_min, r_max)));

            // Unit wavelength and noise: C equals the transmit-power argument.
            const double c = r_max * r_max * std::pow(10.0, -3.0 + 7.0 * rng.uniform());
            const LinkBudget sub6_budget = LinkBudget::dual(c, 1.0, 1);
            worst[2] = std::max(worst[2], oracle::rel(sub6_se_lower_bound(2, 1, sub6_budget, cell, 1.0),
                                                      oracle::sub6_quad(c, r_min, r_max)));
            const int n_mm = 1 + static_cast<int>(255 * rng.uniform());
            const LinkBudget mm_budget = LinkBudget::dual(c / n_mm, 1.0, 1);
            worst[3] = std::max(worst[3], oracle::rel(mmwave_se_approx(n_mm, mm_budget, cell, 1.0),
                                                      oracle::mmwave_quad(c, r_min, r_max)));
        }
        double worst_e1 = 0.0;
        for (int i = 0; i < 200; ++i)
        {
            const double x = std::exp(std::log(1e-6) + (std::log(50.0) - std::log(1e-6)) * i / 199.0);
            worst_e1 = std::max(worst_e1, oracle::rel(exp_integral_e1(x), oracle::e1_quad(x)));
        }
        out.pass = worst[0] <= 1e-6 && worst[1] <= 1e-6 && worst[2] <= 1e-6 && worst[3] <= 1e-6 && worst_e1 <= 1e-10;
        out.detail = format("chi_bar %.2g, i_bar %.2g, sub6 %.2g, mmwave %.2g (limit 1e-6); E1 %.2g (limit 1e-10)",
                            worst[0], worst[1], worst[2], worst[3], worst_e1);
        return out;
    }

    Outcome sum_vs_integral()
    {
        Outcome out;
        const Scenario sc;
        double worst = 0.0;
        for (int n : {8, 64, 512, 1024})
        {
            const double exact = chi_and_interference_sums(n, sc.spacing(), sc.cell).chi;
            worst = std::max(worst, std::abs(chi_bar(n, sc.spacing(), sc.cell) - exact) / exact);
        }
        out.pass = worst <= 0.01;
        out.detail = format("max |chi_bar - chi|/chi = %.3g over N in {8,64,512,1024} (limit 0.01)", worst);
        return out;
    }

    Outcome saturation_limit()
    {
        Outcome out;
        const Scenario sc;
        const auto scaling = chi_scaling(sc.spacing(), sc.cell);
        const double pole = 2.0 * sc.cell.r_min / sc.spacing();
        const double sat = oracle::rel(chi_bar((1.0 - 1e-6) * pole, sc.spacing(), sc.cell), scaling.saturation_limit);
        const double lin = oracle::rel(chi_bar(8.0, sc.spacing(), sc.cell) / 8.0, scaling.linear_coefficient);
        out.pass = sat <= 1e-3 && lin <= 1e-3;
        out.detail = format("saturation rel err %.3g (limit 1e-3); linear coefficient rel err at N=8 %.3g (limit 1e-3)",
                            sat, lin);
        return out;
    }

    Outcome bandwidth_law()
    {
        Outcome out;
        std::string detail;
        for (int k : {16, 32, 64})
        {
            Scenario sc;
            sc.num_users = k;
            bool monotone = true;
            double last = 0.0, prev = 0.0;
            for (int i = 0; i < 20; ++i)
            {
                sc.protocol.bandwidth = std::pow(10.0, 7.0 + 5.0 * i / 19.0);
                last = energy_efficiency(sc, RateMode::closed_form).ee;
                monotone = monotone && last >= prev;
                prev = last;
            }
            const double ratio = last / ee_bandwidth_limit(sc);
            out.pass = out.pass && monotone && ratio >= 0.98 && ratio <= 1.0;
            detail += format("K=%d %s ratio %.5f; ", k, monotone ? "nondecreasing" : "NOT monotone", ratio);
        }
        out.detail = detail + "(ratio must lie in [0.98, 1])";
        return out;
    }

    Outcome antenna_law()
    {
        Outcome out;
        std::vector<int> grid;
        for (int n = 16; n <= 8192; n *= 2)
            grid.push_back(n);

        // Low power: rise, then plateau or fall; knee within 10% of the best grid EE.
        Scenario low;
        low.tx_power_density = 1e-18;
        const auto rep = ee_antenna_limit_check(low, grid);
        bool unimodal = rep.ee.size() >= 2 && rep.ee[1] > rep.ee[0];
        for (std::size_t i = 1; i < rep.ee.size(); ++i)
            unimodal = unimodal && (i <= rep.argmax ? rep.ee[i] >= rep.ee[i - 1] : rep.ee[i] <= rep.ee[i - 1]);
        const auto knee = knee_point(low, 0.95, {});
        Scenario at_knee = low;
        at_knee.num_antennas = static_cast<int>(std::lround(knee.knee));
        const double knee_ratio = energy_efficiency(at_knee, RateMode::closed_form).ee / rep.ee[rep.argmax];

        // High power, K = 4: SINR above 20 dB at N = 16.
        Scenario high;
        high.num_users = 4;
        const double lambda = high.wavelength();
        const double gain16 = chi_bar(16, high.spacing(), high.cell) - 3.0 * i_bar(16, high.spacing(), high.cell);
        high.tx_power_density = 2.0 * 100.0 * high.noise_density / (lambda * lambda * gain16);
        const double sinr16 = high.tx_power_density * lambda * lambda * gain16 / high.noise_density;
        const auto hi = ee_antenna_limit_check(high, grid);
        const double drop = hi.ratio_last_to_first;

        out.pass = unimodal && knee_ratio >= 0.90 && sinr16 > 100.0 && hi.strictly_decreasing && drop < 0.5;
        std::string skipped;
        for (int n : rep.skipped)
            skipped += std::to_string(n) + " ";
        out.detail = format("low P: %s, argmax N=%d, EE(N_kp=%.0f)/max = %.3f (limit 0.90); high P (%.1f dB, K=4): %s, "
                            "EE(N=%d)/EE(16) = %.3f (limit 0.5); out-of-domain N: %s",
                            unimodal ? "rise-then-plateau/fall" : "NOT unimodal", rep.grid[rep.argmax], knee.knee,
                            knee_ratio, 10.0 * std::log10(sinr16),
                            hi.strictly_decreasing ? "strictly decreasing" : "NOT strictly decreasing",
                            hi.grid.back(), drop, skipped.empty() ? "none" : skipped.c_str());
        return out;
    }

    Outcome zf_correctness()
    {
        Outcome out;
        RandomStream rng(77);
        double worst_null = 0.0, worst_sinr = 0.0;
        int draws = 0, retries = 0;
        while (draws < 1000)
        {
            const int k = 1 + static_cast<int>(16 * rng.uniform());
            const int n = 2 * k + static_cast<int>((256 - 2 * k) * rng.uniform());
            Scenario sc;
            sc.num_antennas = n;
            sc.num_users = k;
            std::vector<UserLocation> users;
            for (int i = 0; i < k; ++i)
                users.push_back(sample_user_location(rng, sc.cell));
            const arma::cx_mat h = draw_channel_matrix(sc, users, rng);
            const LinkBudget budget = sc.budget();
            try
            {
                const arma::cx_mat w = zf_uplink_combiner(h, budget.tx_power_density);
                const arma::cx_mat prod = w.t() * h * std::sqrt(budget.tx_power_density);
                worst_null = std::max(worst_null, arma::norm(prod - arma::eye<arma::cx_mat>(k, k), "fro") /
                                                      std::sqrt(static_cast<double>(k)));

                const auto pre = zf_downlink_precoder(h);
                const arma::cx_mat dl = h.t() * pre.w;
                const arma::cx_mat off = dl - arma::diagmat(dl);
                worst_null = std::max(worst_null, arma::abs(off).max() / arma::abs(dl.diag()).min());

                const auto ul_c = uplink_sinr(h, budget).per_user;
                const auto ul_r = uplink_sinr_ratio_form(h, w, budget).per_user;
                const auto dl_c = downlink_sinr(h, budget).per_user;
                const auto dl_r = downlink_sinr_ratio_form(h, pre.w, budget).per_user;
                for (int i = 0; i < k; ++i)
                {
                    worst_sinr = std::max(worst_sinr, oracle::rel(ul_c[i], ul_r[i]));
                    worst_sinr = std::max(worst_sinr, oracle::rel(dl_c[i], dl_r[i]));
                }
                ++draws;
            }
            catch (const RankDeficientError &)
            {
                ++retries;
            }
        }
        out.pass = worst_null <= 1e-9 && worst_sinr <= 1e-9;
        out.detail = format("1000 draws (%d ill-conditioned redrawn); nulling residual %.2g, SINR mismatch %.2g "
                            "(limit 1e-9)", retries, worst_null, worst_sinr);
        return out;
    }

    Outcome power_scaling()
    {
        Outcome out;
        HardwareProfile hw;
        const double sum_rate_per_hz = 16 * 0.984 * 5.0; // fixed delivered SE, bits/s/Hz
        auto total = [&](int n, int k, double b)
        {
            PowerInputs in;
            in.num_antennas = n;
            in.num_users = k;
            in.protocol.bandwidth = b;
            return component_powers(in, hw, sum_rate_per_hz * b).total;
        };

        std::vector<double> x, y;
        for (double b = 1e7; b <= 1.01e9; b += 1e8)
        {
            x.push_back(b);
            y.push_back(total(512, 16, b));
        }
        const double res_b = fit_residual(x, y, 1);

        x.clear();
        y.clear();
        for (int n = 16; n <= 4096; n += 160)
        {
            x.push_back(n);
            y.push_back(total(n, 16, 4e8));
        }
        const double res_n = fit_residual(x, y, 1);

        x.clear();
        y.clear();
        for (int k = 1; k <= 32; ++k)
        {
            x.push_back(k);
            y.push_back(total(1025, k, 4e8) - total(1024, k, 4e8));
        }
        const double res_k = fit_residual(x, y, 2);

        double worst_gap = 0.0;
        for (int n : {64, 128, 256, 512, 1024, 2048, 4096})
            for (int k : {4, 8, 16, 32})
            {
                Scenario sc;
                sc.num_antennas = n;
                sc.num_users = k;
                double se = 0.0;
                try
                {
                    se = closed_form_se(sc);
                }
                catch (const DomainError &)
                {
                }
                const double t = wrap_throughput(se, sc.protocol, k, ThroughputDirection::sum);
                worst_gap = std::max(worst_gap, total_power(sc.family, sc.power_inputs(), sc.hardware, t).reconciliation_gap);
            }
        out.pass = res_b <= 1e-9 && res_n <= 1e-9 && res_k <= 1e-9 && worst_gap <= 0.02;
        out.detail = format("fit residuals: B-affine %.2g, N-affine %.2g, per-antenna K-quadratic %.2g (limit 1e-9); "
                            "max polynomial reconciliation gap %.3g (limit 0.02)",
                            res_b, res_n, res_k, worst_gap);
        return out;
    }

    Outcome setup_comparison()
    {
        Outcome out;
        std::vector<double> grid;
        for (int i = 0; i <= 8; ++i)
            grid.push_back(dbm_per_hz_to_watts(-170.0 + 5.0 * i));
        const auto setups = reference_setups();
        const auto rows = compare_setups(setups, grid);
        double worst_margin = INFINITY;
        for (std::size_t i = 1; i + 1 < grid.size(); ++i)
        {
            const auto &s1 = rows[i], &s2 = rows[grid.size() + i], &s3 = rows[2 * grid.size() + i];
            if (!(s1.valid && s2.valid && s3.valid))
            {
                out.pass = false;
                continue;
            }
            const double margin = s2.point.ee / std::max(s1.point.ee, s3.point.ee);
            worst_margin = std::min(worst_margin, margin);
            if (margin <= 1.0)
                out.pass = false;
        }
        out.detail = format("P grid -170..-130 dBm/Hz (9 points, 7 interior); min EE(setup2)/max(EE(setup1), "
                            "EE(setup3)) = %.3f (must exceed 1)", worst_margin);
        return out;
    }

    Outcome multicell_approximation()
    {
        Outcome out;
        RandomStream config_rng(4242);
        double worst = 0.0;
        for (int cfg = 0; cfg < 20; ++cfg)
        {
            Scenario sc;
            sc.num_antennas = 32;
            sc.num_users = 8;
            sc.tx_power_density = dbm_per_hz_to_watts(-130.0 + 30.0 * config_rng.uniform());
            // Full first tier of neighbouring cells; positions and power are random.
            const int cells = 6;
            std::vector<UserLocation> users;
            for (int i = 0; i < sc.num_users; ++i)
                users.push_back(sample_user_location(config_rng, sc.cell));
            arma::cx_mat h;
            try
            {
                h = draw_channel_matrix(sc, users, config_rng);
                gram_inverse(h);
            }
            catch (const RankDeficientError &)
            {
                --cfg;
                continue;
            }
            const auto gains = ring_interferer_gains(sc, cells, config_rng);
            const LinkBudget budget = sc.budget();
            const auto approx = multicell_uplink_sinr(h, gains, budget);

            // Unapproximated: interfering channels drawn i.i.d. with the ring gains.
            const double p = budget.tx_power_density;
            const arma::cx_mat ginv = gram_inverse(h);
            const arma::cx_mat w = h * ginv;
            RandomStream rng(derive_seed(99, {static_cast<std::uint64_t>(cfg)}));
            std::vector<double> rate(sc.num_users, 0.0);
            const int draws = 10000;
            for (int t = 0; t < draws; ++t)
            {
                arma::vec interference(sc.num_users, arma::fill::zeros);
                for (double g : gains)
                {
                    arma::cx_vec hi(sc.num_antennas);
                    for (auto &v : hi)
                        v = g * rng.complex_normal();
                    const arma::cx_vec proj = w.t() * hi;
                    interference += p * arma::square(arma::abs(proj));
                }
                for (int k = 0; k < sc.num_users; ++k)
                    rate[k] += std::log2(1.0 + p / (budget.noise_density * std::real(ginv(k, k)) + interference(k)));
            }
            for (int k = 0; k < sc.num_users; ++k)
            {
                const double ref = rate[k] / draws;
                worst = std::max(worst, std::abs(std::log2(1.0 + approx.per_user[k]) - ref) / ref);
            }
        }
        out.pass = worst <= 0.05;
        out.detail = format("20 random first-tier configurations, 10^4 draws each; max rate-scale deviation %.4f (limit 0.05)", worst);
        return out;
    }

    std::string slurp(const std::string &path)
    {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    Outcome cli_determinism()
    {
        Outcome out;
        namespace fs = std::filesystem;
        const fs::path dir = fs::temp_directory_path() / ("xlmimo_acceptance_" + std::to_string(::getpid()));
        fs::create_directories(dir);
        {
            std::ofstream(dir / "scenario.cfg") << "num_antennas = 128\nnum_users = 8\n";
        }
        std::vector<std::string> csv;
        bool ran = true;
        for (int workers : {1, 4, 8})
        {
            const std::string path = (dir / ("w" + std::to_string(workers) + ".csv")).string();
            const std::string cmd = std::string(XLMIMO_CLI_PATH) + " sweep --scenario " + (dir / "scenario.cfg").string() +
                                    " --axis tx_power --values log:-160dBm/Hz:-120dBm/Hz:5 --mode both --trials 200"
                                    " --seed 2026 --workers " + std::to_string(workers) + " --out " + path +
                                    " >/dev/null 2>&1";
            const int status = std::system(cmd.c_str());
            ran = ran && WIFEXITED(status) && WEXITSTATUS(status) == 0;
            csv.push_back(slurp(path));
        }
        fs::remove_all(dir);
        out.pass = ran && !csv[0].empty() && csv[0] == csv[1] && csv[0] == csv[2];
        out.detail = format("workers 1/4/8: %s (%zu bytes)", out.pass ? "byte-identical" : "MISMATCH or run failure",
                            csv[0].size());
        return out;
    }
}

int main()
{
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria{
        {"C1  bound tightness vs Monte Carlo", bound_tightness},
        {"C2  closed forms vs quadrature", quadrature_oracles},
        {"C3  array-gain sum vs integral", sum_vs_integral},
        {"C4  array-gain saturation and slope", saturation_limit},
        {"C5  bandwidth law", bandwidth_law},
        {"C6  antenna law", antenna_law},
        {"C7  ZF correctness", zf_correctness},
        {"C8  power-model scaling", power_scaling},
        {"C9  setup comparison", setup_comparison},
        {"C10 multi-cell approximation", multicell_approximation},
        {"C11 CLI determinism", cli_determinism},
    };
    int failed = 0;
    for (const auto &[name, fn] : criteria)
    {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try
        {
            o = fn();
        }
        catch (const std::exception &e)
        {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %-38s %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str(), secs);
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed;
}
