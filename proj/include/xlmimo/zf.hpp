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

#ifndef XLMIMO_ZF_HPP
#define XLMIMO_ZF_HPP

#include "xlmimo/geometry.hpp"

#include <armadillo>
#include <vector>

namespace xlmimo
{
    inline constexpr double max_gram_condition = 1e10;

    /// Per-hertz power densities. Uplink power is per user; downlink total
    /// power is K times that under the duality convention.
    struct LinkBudget
    {
        double tx_power_density;
        double noise_density;
        double downlink_total_power_density;

        static LinkBudget dual(double power_per_user, double noise, int num_users)
        {
            return {power_per_user, noise, power_per_user * num_users};
        }
        void validate() const;
    };

    enum class LinkDirection
    {
        uplink,
        downlink
    };

    struct SinrReport
    {
        std::vector<double> per_user;
        LinkDirection direction = LinkDirection::uplink;
    };

    // (H^H H)^{-1}; throws RankDeficientError when cond(H^H H) > 1e10.
    arma::cx_mat gram_inverse(const arma::cx_mat &h);

    // W = H (H^H H)^{-1} / sqrt(P).
    arma::cx_mat zf_uplink_combiner(const arma::cx_mat &h, double tx_power_density);

    // SINR_k = P / (sigma^2 [(H^H H)^{-1}]_kk).
    SinrReport uplink_sinr(const arma::cx_mat &h, const LinkBudget &budget);

    // Interference-sum evaluation with an explicit combiner W.
    SinrReport uplink_sinr_ratio_form(const arma::cx_mat &h, const arma::cx_mat &w,
                                      const LinkBudget &budget);

    struct DownlinkPrecoder
    {
        arma::cx_mat w;   // normalised precoder W = W_bar diag(rho)
        arma::vec rho;    // rho_k = 1 / (sqrt(K) ||w_bar_k||)
    };

    DownlinkPrecoder zf_downlink_precoder(const arma::cx_mat &h);

    // P_sum rho_k^2 / sigma^2.
    SinrReport downlink_sinr(const arma::cx_mat &h, const LinkBudget &budget);

    // Interference-sum evaluation with an explicit precoder W.
    SinrReport downlink_sinr_ratio_form(const arma::cx_mat &h, const arma::cx_mat &w,
                                        const LinkBudget &budget);

    // Home-cell ZF with the aggregate inter-cell power P * sum(gamma^2)
    // folded into the noise. intercell_gains are amplitudes gamma_{l,i,u}.
    SinrReport multicell_uplink_sinr(const arma::cx_mat &h_home,
                                     const std::vector<double> &intercell_gains,
                                     const LinkBudget &budget);

    struct HybridChain
    {
        arma::cx_mat analog;    // F, N x K, columns b(r_k, phi_k) / sqrt(N)
        arma::cx_mat effective; // F^H H, K x K
    };

    HybridChain hybrid_chain(const arma::cx_mat &h, const std::vector<UserLocation> &users,
                             const ArrayGeometry &geom, const PropagationProfile &prop);
}

#endif
