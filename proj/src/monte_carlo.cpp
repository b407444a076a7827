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

#include "xlmimo/monte_carlo.hpp"
#include "xlmimo/channel.hpp"
#include "xlmimo/errors.hpp"
#include "xlmimo/parallel.hpp"

#include <cmath>
#include <optional>

namespace xlmimo
{
    namespace
    {
        // Spectral factors of the per-user correlation, reused across trials
        // when user positions are fixed.
        std::vector<arma::cx_mat> correlation_factors(const Scenario &sc,
                                                      const std::vector<UserLocation> &users)
        {
            const auto geom = sc.array();
            const auto prop = sc.propagation();
            std::vector<arma::cx_mat> out;
            out.reserve(users.size());
            for (const auto &u : users)
                out.push_back(psd_sqrt(channel_correlation(u, geom, prop)));
            return out;
        }

        arma::cx_mat draw_matrix(const Scenario &sc, const std::vector<UserLocation> &users,
                                 const std::vector<arma::cx_mat> *factors, RandomStream &rng)
        {
            const auto geom = sc.array();
            const auto prop = sc.propagation();
            const arma::uword n = static_cast<arma::uword>(sc.num_antennas);
            arma::cx_mat h(n, users.size());
            for (std::size_t k = 0; k < users.size(); ++k)
            {
                switch (sc.family)
                {
                case SystemFamily::xl_mimo:
                    if (sc.angular_spread == 0.0)
                        h.col(k) = los_channel(users[k], geom, prop);
                    else if (factors)
                        h.col(k) = sample_channel_factored((*factors)[k], rng);
                    else
                        h.col(k) = sample_channel(channel_correlation(users[k], geom, prop), rng);
                    break;
                case SystemFamily::sub6:
                    h.col(k) = sample_channel_sub6(users[k], prop, sc.num_antennas, rng);
                    break;
                case SystemFamily::mmwave:
                    h.col(k) = sample_channel_mmwave(users[k], geom, prop, rng);
                    break;
                }
            }
            return h;
        }

        struct TrialResult
        {
            double se = 0.0;
            long long rejected = 0;
        };
    }

    arma::cx_mat draw_channel_matrix(const Scenario &sc, const std::vector<UserLocation> &users,
                                     RandomStream &rng)
    {
        return draw_matrix(sc, users, nullptr, rng);
    }

    ErgodicEstimate mc_ergodic_se(const Scenario &sc, int num_users, const MonteCarloOptions &opt)
    {
        if (opt.trials < 1)
            throw DomainError("monte carlo: trials must be at least 1");
        if (num_users < 1 || num_users > sc.num_antennas)
            throw DomainError("monte carlo: need 1 <= K <= N");
        if (!opt.fixed_users.empty() && opt.fixed_users.size() != static_cast<std::size_t>(num_users))
            throw DomainError("monte carlo: fixed_users must hold exactly K positions");

        Scenario local = sc;
        local.num_users = num_users;
        const LinkBudget budget = local.budget();
        budget.validate();
        const auto geom = local.array();
        const auto prop = local.propagation();

        std::optional<std::vector<arma::cx_mat>> factors;
        if (!opt.fixed_users.empty() && local.family == SystemFamily::xl_mimo && local.angular_spread > 0.0)
            factors = correlation_factors(local, opt.fixed_users);

        std::vector<TrialResult> results(static_cast<std::size_t>(opt.trials));
        parallel_for(results.size(), opt.workers, [&](std::size_t t)
        {
            TrialResult &res = results[t];
            for (int attempt = 0;; ++attempt)
            {
                if (attempt > max_rank_retries)
                    throw RankDeficientError("monte carlo: too many ill-conditioned draws in one trial", INFINITY);
                RandomStream rng(derive_seed(opt.seed, {static_cast<std::uint64_t>(t),
                                                        static_cast<std::uint64_t>(attempt)}));
                std::vector<UserLocation> users = opt.fixed_users;
                if (users.empty())
                    for (int k = 0; k < num_users; ++k)
                        users.push_back(sample_user_location(rng, local.cell));

                try
                {
                    arma::cx_mat h = draw_matrix(local, users, factors ? &*factors : nullptr, rng);
                    if (local.family == SystemFamily::mmwave)
                        h = hybrid_chain(h, users, geom, prop).effective;

                    SinrReport sinr;
                    if (local.interfering_cells > 0)
                        sinr = multicell_uplink_sinr(h, ring_interferer_gains(local, local.interfering_cells, rng),
                                                     budget);
                    else
                        sinr = uplink_sinr(h, budget);

                    double acc = 0.0;
                    for (double s : sinr.per_user)
                        acc += std::log2(1.0 + s);
                    res.se = acc / num_users;
                    return;
                }
                catch (const RankDeficientError &)
                {
                    ++res.rejected;
                }
            }
        });

        ErgodicEstimate out;
        out.trials = opt.trials;
        double sum = 0.0;
        for (const auto &r : results)
        {
            sum += r.se;
            out.rejected += r.rejected;
        }
        out.mean = sum / opt.trials;
        if (opt.trials > 1)
        {
            double ss = 0.0;
            for (const auto &r : results)
                ss += (r.se - out.mean) * (r.se - out.mean);
            const double sd = std::sqrt(ss / (opt.trials - 1));
            out.half_ci95 = 1.96 * sd / std::sqrt(static_cast<double>(opt.trials));
        }
        return out;
    }
}
