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

#include <catch_amalgamated.hpp>

#include "xlmimo/channel.hpp"
#include "xlmimo/errors.hpp"
#include "xlmimo/scenario.hpp"
#include "xlmimo/zf.hpp"

#include <cmath>

using namespace xlmimo;
using Catch::Approx;

namespace
{
    arma::cx_mat random_channel(arma::uword n, arma::uword k, int seed)
    {
        arma::arma_rng::set_seed(seed);
        return arma::randn<arma::cx_mat>(n, k);
    }

    double max_rel_diff(const std::vector<double> &a, const std::vector<double> &b)
    {
        double m = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i)
            m = std::max(m, std::abs(a[i] - b[i]) / std::abs(b[i]));
        return m;
    }

    const LinkBudget budget{2e-18, 4e-21, 2e-18 * 8};
}

TEST_CASE("ZF uplink combiner")
{
    SECTION("Single user")
    {
        const arma::cx_mat h = random_channel(6, 1, 1);
        const double p = 3.0;
        const arma::cx_mat w = zf_uplink_combiner(h, p);
        const double nh2 = std::pow(arma::norm(h), 2);
        CHECK(arma::norm(w - h / (std::sqrt(p) * nh2)) <= 1e-12 * arma::norm(w));
    }
    SECTION("Orthonormal columns")
    {
        arma::cx_mat q, r;
        arma::qr_econ(q, r, random_channel(8, 3, 2));
        CHECK(arma::norm(zf_uplink_combiner(q, 1.0) - q, "fro") <= 1e-12);
    }
    SECTION("Nulling on a random 16 x 4 matrix")
    {
        const arma::cx_mat h = random_channel(16, 4, 3);
        const double p = 0.5;
        const arma::cx_mat prod = zf_uplink_combiner(h, p).t() * h * std::sqrt(p);
        const arma::cx_mat off = prod - arma::diagmat(prod);
        CHECK(arma::abs(off).max() <= 1e-9);
        CHECK(arma::norm(prod - arma::eye<arma::cx_mat>(4, 4), "fro") <= 1e-9);
    }
    SECTION("Rank deficiency is detected")
    {
        arma::cx_mat h = random_channel(8, 3, 4);
        h.col(2) = h.col(1);
        CHECK_THROWS_AS(zf_uplink_combiner(h, 1.0), RankDeficientError);
        CHECK_THROWS_AS(uplink_sinr(random_channel(2, 3, 5), budget), RankDeficientError);
    }
}

TEST_CASE("Uplink SINR")
{
    SECTION("Single user")
    {
        const arma::cx_mat h = random_channel(10, 1, 6);
        const auto s = uplink_sinr(h, budget);
        CHECK(s.per_user[0] == Approx(budget.tx_power_density * std::pow(arma::norm(h), 2) / budget.noise_density).epsilon(1e-12));
        CHECK(s.direction == LinkDirection::uplink);
    }
    SECTION("Orthogonal equal-norm users")
    {
        arma::cx_mat q, r;
        arma::qr_econ(q, r, random_channel(12, 4, 7));
        const double c = 3.5;
        const auto s = uplink_sinr(q * std::sqrt(c), budget);
        for (double v : s.per_user)
            CHECK(v == Approx(budget.tx_power_density * c / budget.noise_density).epsilon(1e-12));
    }
    SECTION("Closed form equals the definitional ratio on a random 32 x 8 matrix")
    {
        const arma::cx_mat h = random_channel(32, 8, 8);
        const auto closed = uplink_sinr(h, budget);
        const auto ratio = uplink_sinr_ratio_form(h, zf_uplink_combiner(h, budget.tx_power_density), budget);
        CHECK(max_rel_diff(closed.per_user, ratio.per_user) <= 1e-9);
    }
    SECTION("Invariant under a common unitary rotation")
    {
        const arma::cx_mat h = random_channel(16, 4, 9);
        arma::cx_mat u, r;
        arma::qr(u, r, random_channel(16, 16, 10));
        CHECK(max_rel_diff(uplink_sinr(u * h, budget).per_user, uplink_sinr(h, budget).per_user) <= 1e-10);
    }
}

TEST_CASE("ZF downlink precoder and SINR")
{
    SECTION("Single user")
    {
        const arma::cx_mat h = random_channel(7, 1, 11);
        const auto pre = zf_downlink_precoder(h);
        const arma::cx_mat w_bar = h / std::pow(arma::norm(h), 2);
        CHECK(pre.rho(0) == Approx(1.0 / arma::norm(w_bar)).epsilon(1e-12));
        CHECK(arma::norm(pre.w, "fro") == Approx(1.0).epsilon(1e-12));
        LinkBudget b1{1e-18, 4e-21, 1e-18};
        CHECK(downlink_sinr(h, b1).per_user[0] ==
              Approx(b1.downlink_total_power_density * std::pow(arma::norm(h), 2) / b1.noise_density).epsilon(1e-12));
    }
    SECTION("Unit total power and nulling")
    {
        for (int seed = 0; seed < 20; ++seed)
        {
            const arma::cx_mat h = random_channel(32, 8, 100 + seed);
            const auto pre = zf_downlink_precoder(h);
            CHECK(std::pow(arma::norm(pre.w, "fro"), 2) == Approx(1.0).epsilon(1e-9));
            const arma::cx_mat hw = h.t() * pre.w;
            for (arma::uword k = 0; k < 8; ++k)
                for (arma::uword j = 0; j < 8; ++j)
                    if (j != k)
                        CHECK(std::abs(hw(k, j)) <= 1e-9 * std::abs(hw(k, k)));
        }
    }
    SECTION("Scaling H by c scales SINR by c^2")
    {
        const arma::cx_mat h = random_channel(16, 4, 12);
        const auto s1 = downlink_sinr(h, budget);
        const auto s2 = downlink_sinr(2.5 * h, budget);
        for (std::size_t k = 0; k < 4; ++k)
            CHECK(s2.per_user[k] == Approx(6.25 * s1.per_user[k]).epsilon(1e-10));
    }
    SECTION("Ratio form equals the rho form on a random 32 x 8 matrix")
    {
        const arma::cx_mat h = random_channel(32, 8, 13);
        const auto rho = downlink_sinr(h, budget);
        const auto ratio = downlink_sinr_ratio_form(h, zf_downlink_precoder(h).w, budget);
        CHECK(max_rel_diff(ratio.per_user, rho.per_user) <= 1e-9);
        CHECK(rho.direction == LinkDirection::downlink);
    }
    SECTION("Duality: P_sum = K P gives the uplink SINR")
    {
        const arma::cx_mat h = random_channel(24, 6, 14);
        const auto b = LinkBudget::dual(1e-18, 4e-21, 6);
        CHECK(max_rel_diff(downlink_sinr(h, b).per_user, uplink_sinr(h, b).per_user) <= 1e-10);
    }
}

TEST_CASE("Multi-cell uplink SINR")
{
    const arma::cx_mat h = random_channel(32, 8, 15);
    SECTION("No interferers reduces to the single-cell SINR")
    {
        CHECK(multicell_uplink_sinr(h, {}, budget).per_user == uplink_sinr(h, budget).per_user);
    }
    SECTION("One interferer at the noise level halves every SINR")
    {
        const double g = std::sqrt(budget.noise_density / budget.tx_power_density);
        const auto mc = multicell_uplink_sinr(h, {g}, budget);
        const auto sc = uplink_sinr(h, budget);
        for (std::size_t k = 0; k < 8; ++k)
            CHECK(mc.per_user[k] == Approx(0.5 * sc.per_user[k]).epsilon(1e-12));
    }
    SECTION("Monotone decreasing in every gain")
    {
        std::vector<double> g{1e-2, 2e-2, 5e-3};
        const auto base = multicell_uplink_sinr(h, g, budget);
        for (std::size_t i = 0; i < g.size(); ++i)
        {
            auto more = g;
            more[i] *= 1.5;
            const auto s = multicell_uplink_sinr(h, more, budget);
            for (std::size_t k = 0; k < 8; ++k)
                CHECK(s.per_user[k] < base.per_user[k]);
        }
        CHECK_THROWS_AS(multicell_uplink_sinr(h, {-1.0}, budget), DomainError);
    }
    SECTION("Approximation against Monte Carlo of the unapproximated SINR")
    {
        // Noise-level home channel; three interfering users at a few dB
        // below the noise floor.
        const double lambda = 0.04;
        const double sigma2 = thermal_noise_density;
        const arma::cx_mat hh = random_channel(32, 8, 16) * (lambda / 100.0);
        const double p = 10.0 * sigma2 / std::pow(lambda / 100.0, 2) / 32.0;
        const LinkBudget b{p, sigma2, 8 * p};
        const std::vector<double> gains{lambda / 400.0, lambda / 450.0, lambda / 500.0};

        const auto approx = multicell_uplink_sinr(hh, gains, b);
        const arma::cx_mat w = hh * gram_inverse(hh);
        const arma::cx_mat ginv = gram_inverse(hh);

        RandomStream rng(17);
        const int draws = 10000;
        std::vector<double> rate(8, 0.0);
        for (int t = 0; t < draws; ++t)
        {
            std::vector<double> interference(8, 0.0);
            for (double g : gains)
            {
                arma::cx_vec hi(32);
                for (auto &x : hi)
                    x = g * rng.complex_normal();
                const arma::cx_vec proj = w.t() * hi;
                for (std::size_t k = 0; k < 8; ++k)
                    interference[k] += p * std::norm(proj(k));
            }
            for (std::size_t k = 0; k < 8; ++k)
                rate[k] += std::log2(1.0 + p / (sigma2 * std::real(ginv(k, k)) + interference[k]));
        }
        for (std::size_t k = 0; k < 8; ++k)
            CHECK(std::abs(rate[k] / draws - std::log2(1.0 + approx.per_user[k])) <=
                  0.05 * std::log2(1.0 + approx.per_user[k]));
    }
}

TEST_CASE("Hybrid analog stage")
{
    PropagationProfile prop;
    prop.wavelength = 0.0107;
    const ArrayGeometry geom(64, 0.5 * prop.wavelength);

    SECTION("Single pure line-of-sight user")
    {
        const UserLocation u{100.0, 1.2};
        const double gamma = prop.wavelength / u.distance;
        const arma::cx_mat h = gamma * steering_vector(u, geom, prop);
        const auto chain = hybrid_chain(h, {u}, geom, prop);
        CHECK(std::abs(chain.effective(0, 0) - std::complex<double>(gamma * 8.0, 0.0)) <= 1e-12 * gamma * 8.0);
        CHECK(arma::norm(chain.analog.col(0)) == Approx(1.0).epsilon(1e-12));
    }
    SECTION("Rician moment of the matched-filter output")
    {
        prop.rician_factor = 10.0;
        const UserLocation u{100.0, 1.2};
        const double gamma = prop.wavelength / u.distance;
        const arma::cx_vec b = steering_vector(u, geom, prop);
        RandomStream rng(23);
        double acc = 0.0;
        const int draws = 10000;
        for (int t = 0; t < draws; ++t)
            acc += std::norm(arma::cdot(b, sample_channel_mmwave(u, geom, prop, rng))) / 64.0;
        const double expected = gamma * gamma * (10.0 / 11.0 * 64.0 + 1.0 / 11.0);
        CHECK(acc / draws == Approx(expected).epsilon(0.03));
    }
    SECTION("Columns have unit norm for several users")
    {
        const std::vector<UserLocation> users{{80.0, 0.5}, {100.0, 1.3}, {140.0, 2.4}, {95.0, 1.9}};
        RandomStream rng(3);
        arma::cx_mat h(64, 4);
        for (int k = 0; k < 4; ++k)
            h.col(k) = sample_channel_mmwave(users[k], geom, prop, rng);
        const auto chain = hybrid_chain(h, users, geom, prop);
        CHECK(chain.effective.n_rows == 4);
        CHECK(chain.effective.n_cols == 4);
        for (int k = 0; k < 4; ++k)
            CHECK(arma::norm(chain.analog.col(k)) == Approx(1.0).epsilon(1e-12));
        CHECK_THROWS_AS(hybrid_chain(h, {users[0]}, geom, prop), DomainError);
    }
}
