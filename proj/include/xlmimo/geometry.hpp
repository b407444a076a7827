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

#ifndef XLMIMO_GEOMETRY_HPP
#define XLMIMO_GEOMETRY_HPP

#include "xlmimo/random.hpp"

#include <armadillo>
#include <vector>

namespace xlmimo
{
    inline constexpr double speed_of_light = 299792458.0;
    inline constexpr double pi = 3.14159265358979323846;

    /// Uniform linear array centred on the origin along the x-axis.
    /// Element n sits at n * spacing for n in {-(N-1)/2, ..., (N-1)/2}.
    class ArrayGeometry
    {
    public:
        ArrayGeometry(int num_elements, double spacing);

        int num_elements() const noexcept { return num_elements_; }
        double spacing() const noexcept { return spacing_; }
        const std::vector<double> &element_coords() const noexcept { return coords_; }
        double half_aperture() const noexcept { return 0.5 * (num_elements_ - 1) * spacing_; }

    private:
        int num_elements_;
        double spacing_;
        std::vector<double> coords_;
    };

    /// Annular (semi-circular) service region, r_min <= r <= r_max.
    struct CellGeometry
    {
        double r_min = 70.0;
        double r_max = 150.0;

        void validate() const;
        double area_factor() const noexcept { return r_max * r_max - r_min * r_min; }
    };

    struct UserLocation
    {
        double distance; // meters
        double azimuth;  // radians, (0, pi)
    };

    struct PropagationProfile
    {
        double wavelength = speed_of_light / 7.5e9;
        double pathloss_constant = 1.0;
        double angular_spread = 0.0; // half-width of the angular support, radians
        double rician_factor = 10.0;
        int quadrature_points = 64;

        void validate() const;
    };

    // Distance drawn with density 2r / (r_max^2 - r_min^2) by inverse CDF;
    // azimuth uniform on (0, pi).
    UserLocation sample_user_location(RandomStream &rng, const CellGeometry &cell);

    // Law-of-cosines distance from the user to every element. Throws
    // DomainError when the user is not strictly outside the aperture.
    std::vector<double> element_distances(const UserLocation &loc, const ArrayGeometry &geom);

    // gamma_n = C_PL * lambda / D_n (amplitude, not power).
    arma::vec large_scale_gains(const UserLocation &loc, const ArrayGeometry &geom,
                                const PropagationProfile &prop);

    // b_n = exp(-j 2 pi D_n / lambda).
    arma::cx_vec steering_vector(const UserLocation &loc, const ArrayGeometry &geom,
                                 const PropagationProfile &prop);
}

#endif
