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

#include "xlmimo/expint.hpp"
#include "xlmimo/errors.hpp"

#include <cmath>
#include <limits>

namespace
{
    constexpr double euler_gamma = 0.57721566490153286061;

    // E1(x) = -gamma - ln x - sum_{k>=1} (-x)^k / (k k!)
    double e1_series(double x)
    {
        double sum = 0.0;
        double term = 1.0;
        for (int k = 1; k < 200; ++k)
        {
            term *= -x / k;
            const double contrib = term / k;
            sum += contrib;
            if (std::abs(contrib) < 1e-17 * std::abs(sum))
                break;
        }
        return -euler_gamma - std::log(x) - sum;
    }

    // exp(x) E1(x) = 1/(x+1- 1^2/(x+3- 2^2/(x+5- ...))), modified Lentz.
    double scaled_e1_fraction(double x)
    {
        constexpr double tiny = 1e-300;
        constexpr double eps = 1e-16;
        double b = x + 1.0;
        double c = 1.0 / tiny;
        double d = 1.0 / b;
        double h = d;
        for (int i = 1; i < 10000; ++i)
        {
            const double a = -static_cast<double>(i) * i;
            b += 2.0;
            d = 1.0 / (a * d + b);
            c = b + a / c;
            const double delta = c * d;
            h *= delta;
            if (std::abs(delta - 1.0) < eps)
                break;
        }
        return h;
    }

    void check_domain(double x)
    {
        if (!(x > 0.0) || !std::isfinite(x))
            throw xlmimo::DomainError("exponential integral: argument must be positive and finite");
    }
}

namespace xlmimo
{
    double exp_integral_e1(double x)
    {
        check_domain(x);
        if (x <= 1.0)
            return e1_series(x);
        return scaled_e1_fraction(x) * std::exp(-x);
    }

    double scaled_exp_integral_e1(double x)
    {
        check_domain(x);
        if (x <= 1.0)
            return std::exp(x) * e1_series(x);
        return scaled_e1_fraction(x);
    }
}
