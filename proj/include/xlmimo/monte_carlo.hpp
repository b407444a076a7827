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

#ifndef XLMIMO_MONTE_CARLO_HPP
#define XLMIMO_MONTE_CARLO_HPP

#include "xlmimo/scenario.hpp"

#include <cstdint>
#include <vector>

namespace xlmimo
{
    struct ErgodicEstimate
    {
        double mean = 0.0;      // bits/s/Hz per user, before frame overheads
        double half_ci95 = 0.0; // 1.96 s / sqrt(n)
        int trials = 0;
        long long rejected = 0; // ill-conditioned draws that were resampled
    };

    inline constexpr int max_rank_retries = 100;

    struct MonteCarloOptions
    {
        int trials = 2000;
        std::uint64_t seed = 1;
        int workers = 1;
        // When non-empty (size K), users stay at these positions and only the
        // small-scale fading is redrawn.
        std::vector<UserLocation> fixed_users;
    };

    // Ergodic per-user SE under ZF with equal power. Each trial draws K user
    // positions and a channel matrix for the scenario's system family, and
    // averages log2(1 + SINR) over users. Trial t, attempt a uses the stream
    // derive_seed(seed, {t, a}); results do not depend on the worker count.
    // With interfering_cells > 0 the inter-cell load of a ring of cells is
    // folded into the noise.
    ErgodicEstimate mc_ergodic_se(const Scenario &sc, int num_users, const MonteCarloOptions &opt);

    // Draws one N x K channel matrix for the scenario's family.
    arma::cx_mat draw_channel_matrix(const Scenario &sc, const std::vector<UserLocation> &users,
                                     RandomStream &rng);
}

#endif
