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

#include "xlmimo/channel.hpp"
#include "xlmimo/errors.hpp"

#include <cmath>
#include <limits>

namespace xlmimo
{
    arma::cx_mat channel_correlation(const UserLocation &loc, const ArrayGeometry &geom,
                                     const PropagationProfile &prop)
    {
        prop.validate();
        const arma::vec gamma = large_scale_gains(loc, geom, prop);
        const arma::uword n = gamma.n_elem;

        arma::cx_mat theta(n, n, arma::fill::zeros);
        const int q_count = prop.angular_spread > 0.0 ? prop.quadrature_points : 1;
        const double width = 2.0 * prop.angular_spread / q_count;
        const double weight = 1.0 / q_count;

        for (int q = 0; q < q_count; ++q)
        {
            UserLocation tilt = loc;
            tilt.azimuth = loc.azimuth - prop.angular_spread + (q + 0.5) * width;
            const arma::cx_vec b = steering_vector(tilt, geom, prop);
            theta += weight * (b * b.t());
        }

        // Unit-modulus diagonal; pin it exactly so trace(Theta~) = N.
        theta.diag().ones();
        const arma::mat big_gamma = gamma * gamma.t();
        return theta % big_gamma;
    }

    arma::cx_mat psd_sqrt(const arma::cx_mat &corr)
    {
        if (!corr.is_square())
            throw DomainError("psd_sqrt: matrix must be square");

        const arma::cx_mat herm = 0.5 * (corr + corr.t());
        arma::vec eigval;
        arma::cx_mat eigvec;
        if (!arma::eig_sym(eigval, eigvec, herm))
            throw DomainError("psd_sqrt: eigendecomposition failed");

        const double trace = std::real(arma::trace(herm));
        if (!eigval.is_empty() && eigval.min() < -1e-8 * std::abs(trace))
            throw DomainError("psd_sqrt: matrix is not positive semi-definite");

        // Eigenvalues at rounding level are treated as exact zeros so that
        // rank-deficient correlations yield rank-deficient factors.
        const double floor = eigval.is_empty() ? 0.0
                                               : eigval.max() * eigval.n_elem * std::numeric_limits<double>::epsilon();
        arma::vec root(eigval.n_elem);
        for (arma::uword i = 0; i < eigval.n_elem; ++i)
            root(i) = eigval(i) > floor ? std::sqrt(eigval(i)) : 0.0;

        return eigvec * arma::diagmat(root) * eigvec.t();
    }

    arma::cx_vec sample_channel_factored(const arma::cx_mat &sqrt_corr, RandomStream &rng)
    {
        arma::cx_vec g(sqrt_corr.n_cols);
        for (auto &x : g)
            x = rng.complex_normal();
        return sqrt_corr * g;
    }

    arma::cx_vec sample_channel(const arma::cx_mat &corr, RandomStream &rng)
    {
        return sample_channel_factored(psd_sqrt(corr), rng);
    }

    arma::cx_vec los_channel(const UserLocation &loc, const ArrayGeometry &geom,
                             const PropagationProfile &prop)
    {
        const arma::vec gamma = large_scale_gains(loc, geom, prop);
        const arma::cx_vec b = steering_vector(loc, geom, prop);
        return b % gamma;
    }

    arma::cx_vec sample_channel_sub6(const UserLocation &loc, const PropagationProfile &prop,
                                     int num_antennas, RandomStream &rng)
    {
        const double gamma = std::isinf(loc.distance) ? 0.0 : prop.wavelength / loc.distance;
        arma::cx_vec h(static_cast<arma::uword>(num_antennas));
        for (auto &x : h)
            x = gamma * rng.complex_normal();
        return h;
    }

    arma::cx_vec sample_channel_mmwave(const UserLocation &loc, const ArrayGeometry &geom,
                                       const PropagationProfile &prop, RandomStream &rng)
    {
        const double kappa = prop.rician_factor;
        const double gamma = prop.wavelength / loc.distance;
        const arma::cx_vec b = steering_vector(loc, geom, prop);

        double los_weight = 1.0, nlos_weight = 0.0;
        if (std::isfinite(kappa))
        {
            los_weight = std::sqrt(kappa / (kappa + 1.0));
            nlos_weight = std::sqrt(1.0 / (kappa + 1.0));
        }

        const std::complex<double> g = rng.complex_normal();
        arma::cx_vec h(b.n_elem);
        for (arma::uword n = 0; n < b.n_elem; ++n)
            h(n) = gamma * (los_weight * g * b(n) + nlos_weight * rng.complex_normal());
        return h;
    }
}
