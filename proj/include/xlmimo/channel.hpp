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

#ifndef XLMIMO_CHANNEL_HPP
#define XLMIMO_CHANNEL_HPP

#include "xlmimo/geometry.hpp"
#include "xlmimo/random.hpp"

#include <armadillo>
#include <vector>

namespace xlmimo
{
    /// N x K channel matrix with the per-element amplitude gains that
    /// produced each column.
    struct ChannelRealization
    {
        arma::cx_mat matrix;
        std::vector<arma::vec> large_scale;
    };

    // Theta = (gamma gamma^H) ⊙ Theta~, with Theta~ the midpoint-rule average
    // of b b^H over azimuths in [phi - spread, phi + spread] at fixed distance.
    arma::cx_mat channel_correlation(const UserLocation &loc, const ArrayGeometry &geom,
                                     const PropagationProfile &prop);

    // Hermitian factor L with L L^H = corr (spectral square root, eigenvalues
    // in [-1e-10 trace, 0) clamped to zero). Throws DomainError when corr has
    // an eigenvalue below -1e-8 trace.
    arma::cx_mat psd_sqrt(const arma::cx_mat &corr);

    // h = corr^{1/2} g, g ~ CN(0, I).
    arma::cx_vec sample_channel(const arma::cx_mat &corr, RandomStream &rng);

    // Same draw with a precomputed factor from psd_sqrt.
    arma::cx_vec sample_channel_factored(const arma::cx_mat &sqrt_corr, RandomStream &rng);

    // Deterministic line-of-sight channel gamma ⊙ b; the zero-spread limit
    // of the near-field model.
    arma::cx_vec los_channel(const UserLocation &loc, const ArrayGeometry &geom,
                             const PropagationProfile &prop);

    // i.i.d. Rayleigh vector scaled by lambda / r.
    arma::cx_vec sample_channel_sub6(const UserLocation &loc, const PropagationProfile &prop,
                                     int num_antennas, RandomStream &rng);

    // Rician: (sqrt(k/(k+1)) g b + sqrt(1/(k+1)) h_nlos) * lambda / r.
    arma::cx_vec sample_channel_mmwave(const UserLocation &loc, const ArrayGeometry &geom,
                                       const PropagationProfile &prop, RandomStream &rng);
}

#endif
