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

#include "xlmimo/geometry.hpp"
#include "xlmimo/errors.hpp"

#include <cmath>
#include <string>

namespace xlmimo
{
    ArrayGeometry::ArrayGeometry(int num_elements, double spacing)
        : num_elements_(num_elements), spacing_(spacing)
    {
        if (num_elements < 1)
            throw DomainError("ArrayGeometry: number of elements must be positive");
        if (!(spacing > 0.0) || !std::isfinite(spacing))
            throw DomainError("ArrayGeometry: element spacing must be positive");

        coords_.resize(static_cast<std::size_t>(num_elements));
        const double centre = 0.5 * (num_elements - 1);
        for (int i = 0; i < num_elements; ++i)
            coords_[static_cast<std::size_t>(i)] = (i - centre) * spacing;
    }

    void CellGeometry::validate() const
    {
        if (!(r_min > 0.0))
            throw DomainError("cell: r_min must be positive");
        if (!(r_min < r_max) || !std::isfinite(r_max))
            throw DomainError("cell: r_min must be smaller than r_max");
    }

    void PropagationProfile::validate() const
    {
        if (!(wavelength > 0.0))
            throw DomainError("propagation: wavelength must be positive");
        if (!(pathloss_constant > 0.0))
            throw DomainError("propagation: pathloss constant must be positive");
        if (!(angular_spread >= 0.0))
            throw DomainError("propagation: angular spread must be non-negative");
        if (!(rician_factor >= 0.0))
            throw DomainError("propagation: Rician factor must be non-negative");
        if (quadrature_points < 1)
            throw DomainError("propagation: quadrature_points must be at least 1");
    }

    UserLocation sample_user_location(RandomStream &rng, const CellGeometry &cell)
    {
        const double u = rng.uniform();
        const double r2 = cell.r_min * cell.r_min + u * cell.area_factor();
        const double phi = pi * rng.uniform();
        return {std::sqrt(r2), phi};
    }

    std::vector<double> element_distances(const UserLocation &loc, const ArrayGeometry &geom)
    {
        if (!(loc.distance > geom.half_aperture()))
            throw DomainError("user at r = " + std::to_string(loc.distance) +
                              " m lies inside the array aperture (half-aperture " +
                              std::to_string(geom.half_aperture()) + " m)");

        const double r = loc.distance;
        const double c = std::cos(loc.azimuth);
        std::vector<double> d;
        d.reserve(geom.element_coords().size());
        for (double delta : geom.element_coords())
            d.push_back(std::sqrt(r * r + delta * delta - 2.0 * r * delta * c));
        return d;
    }

    arma::vec large_scale_gains(const UserLocation &loc, const ArrayGeometry &geom,
                                const PropagationProfile &prop)
    {
        const auto d = element_distances(loc, geom);
        arma::vec g(d.size());
        for (std::size_t n = 0; n < d.size(); ++n)
            g(n) = prop.pathloss_constant * prop.wavelength / d[n];
        return g;
    }

    arma::cx_vec steering_vector(const UserLocation &loc, const ArrayGeometry &geom,
                                 const PropagationProfile &prop)
    {
        const auto d = element_distances(loc, geom);
        const double k = 2.0 * pi / prop.wavelength;
        arma::cx_vec b(d.size());
        for (std::size_t n = 0; n < d.size(); ++n)
            b(n) = std::polar(1.0, -k * d[n]);
        return b;
    }
}
