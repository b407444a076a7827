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

#include "xlmimo/zf.hpp"
#include "xlmimo/errors.hpp"

#include <cmath>
#include <string>

namespace xlmimo
{
    void LinkBudget::validate() const
    {
        if (!(tx_power_density > 0.0) || !(noise_density > 0.0) || !(downlink_total_power_density > 0.0))
            throw DomainError("link budget: power and noise densities must be positive");
    }

    namespace
    {
        // Thin QR of H with R^{-1}. Working from R rather than H^H H keeps the
        // rounding error proportional to cond(H) instead of cond(H)^2.
        struct ZfFactor
        {
            arma::cx_mat q;
            arma::cx_mat r_inv;
        };

        ZfFactor zf_factor(const arma::cx_mat &h)
        {
            if (h.n_cols == 0 || h.n_rows < h.n_cols)
                throw RankDeficientError("zero-forcing needs N >= K >= 1", INFINITY);

            ZfFactor f;
            arma::cx_mat r;
            if (!arma::qr_econ(f.q, r, h))
                throw RankDeficientError("QR factorisation failed", INFINITY);

            // cond(H^H H) = cond(R)^2.
            const arma::vec sv = arma::svd(r);
            const double cond = sv.min() > 0.0 ? std::pow(sv.max() / sv.min(), 2) : INFINITY;
            if (!(cond <= max_gram_condition))
                throw RankDeficientError("Gram matrix condition " + std::to_string(cond) + " exceeds 1e10", cond);

            const arma::cx_mat eye = arma::eye<arma::cx_mat>(h.n_cols, h.n_cols);
            if (!arma::solve(f.r_inv, arma::trimatu(r), eye))
                throw RankDeficientError("triangular solve failed", cond);
            return f;
        }

        // H (H^H H)^{-1} = Q R^{-H}.
        arma::cx_mat pseudo_inverse_t(const ZfFactor &f) { return f.q * f.r_inv.t(); }
    }

    arma::cx_mat gram_inverse(const arma::cx_mat &h)
    {
        const auto f = zf_factor(h);
        arma::cx_mat inv = f.r_inv * f.r_inv.t();
        return 0.5 * (inv + inv.t());
    }

    arma::cx_mat zf_uplink_combiner(const arma::cx_mat &h, double tx_power_density)
    {
        if (!(tx_power_density > 0.0))
            throw DomainError("zf_uplink_combiner: transmit power must be positive");
        return pseudo_inverse_t(zf_factor(h)) / std::sqrt(tx_power_density);
    }

    SinrReport uplink_sinr(const arma::cx_mat &h, const LinkBudget &budget)
    {
        budget.validate();
        const arma::cx_mat inv = gram_inverse(h);
        SinrReport out;
        out.direction = LinkDirection::uplink;
        out.per_user.reserve(h.n_cols);
        for (arma::uword k = 0; k < h.n_cols; ++k)
            out.per_user.push_back(budget.tx_power_density /
                                   (budget.noise_density * std::real(inv(k, k))));
        return out;
    }

    SinrReport uplink_sinr_ratio_form(const arma::cx_mat &h, const arma::cx_mat &w,
                                      const LinkBudget &budget)
    {
        const arma::cx_mat wh = w.t() * h; // row k: w_k^H h_j
        SinrReport out;
        out.direction = LinkDirection::uplink;
        for (arma::uword k = 0; k < h.n_cols; ++k)
        {
            double interference = 0.0;
            for (arma::uword j = 0; j < h.n_cols; ++j)
                if (j != k)
                    interference += std::norm(wh(k, j));
            const double noise = std::pow(arma::norm(w.col(k)), 2) * budget.noise_density /
                                 budget.tx_power_density;
            out.per_user.push_back(std::norm(wh(k, k)) / (interference + noise));
        }
        return out;
    }

    DownlinkPrecoder zf_downlink_precoder(const arma::cx_mat &h)
    {
        const arma::cx_mat w_bar = pseudo_inverse_t(zf_factor(h));
        const double k_count = static_cast<double>(h.n_cols);

        DownlinkPrecoder out;
        out.rho.set_size(h.n_cols);
        for (arma::uword k = 0; k < h.n_cols; ++k)
            out.rho(k) = 1.0 / (std::sqrt(k_count) * arma::norm(w_bar.col(k)));
        out.w = w_bar * arma::diagmat(arma::conv_to<arma::cx_vec>::from(out.rho));
        return out;
    }

    SinrReport downlink_sinr(const arma::cx_mat &h, const LinkBudget &budget)
    {
        budget.validate();
        const auto pre = zf_downlink_precoder(h);
        SinrReport out;
        out.direction = LinkDirection::downlink;
        for (arma::uword k = 0; k < h.n_cols; ++k)
            out.per_user.push_back(budget.downlink_total_power_density * pre.rho(k) * pre.rho(k) /
                                   budget.noise_density);
        return out;
    }

    SinrReport downlink_sinr_ratio_form(const arma::cx_mat &h, const arma::cx_mat &w,
                                        const LinkBudget &budget)
    {
        const arma::cx_mat hw = h.t() * w; // row k: h_k^H w_j
        const double p_sum = budget.downlink_total_power_density;
        SinrReport out;
        out.direction = LinkDirection::downlink;
        for (arma::uword k = 0; k < h.n_cols; ++k)
        {
            double interference = 0.0;
            for (arma::uword j = 0; j < h.n_cols; ++j)
                if (j != k)
                    interference += std::norm(hw(k, j));
            out.per_user.push_back(p_sum * std::norm(hw(k, k)) /
                                   (p_sum * interference + budget.noise_density));
        }
        return out;
    }

    SinrReport multicell_uplink_sinr(const arma::cx_mat &h_home,
                                     const std::vector<double> &intercell_gains,
                                     const LinkBudget &budget)
    {
        budget.validate();
        double aggregate = 0.0;
        for (double g : intercell_gains)
        {
            if (!(g >= 0.0))
                throw DomainError("multicell_uplink_sinr: inter-cell gains must be non-negative");
            aggregate += g * g;
        }

        const arma::cx_mat inv = gram_inverse(h_home);
        const double p = budget.tx_power_density;
        const double floor = budget.noise_density + p * aggregate;

        SinrReport out;
        out.direction = LinkDirection::uplink;
        for (arma::uword k = 0; k < h_home.n_cols; ++k)
            out.per_user.push_back(p / (std::real(inv(k, k)) * floor));
        return out;
    }

    HybridChain hybrid_chain(const arma::cx_mat &h, const std::vector<UserLocation> &users,
                             const ArrayGeometry &geom, const PropagationProfile &prop)
    {
        if (users.size() != h.n_cols)
            throw DomainError("hybrid_chain: one steering vector per user is required");

        HybridChain out;
        out.analog.set_size(h.n_rows, h.n_cols);
        const double scale = 1.0 / std::sqrt(static_cast<double>(geom.num_elements()));
        for (std::size_t k = 0; k < users.size(); ++k)
            out.analog.col(k) = scale * steering_vector(users[k], geom, prop);
        out.effective = out.analog.t() * h;
        return out;
    }
}
