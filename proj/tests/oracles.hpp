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

// Independent numerical oracles shared by the unit and acceptance tests.
// Everything here is computed by direct quadrature or summation and never
// calls the closed forms under test.

#ifndef XLMIMO_TEST_ORACLES_HPP
#define XLMIMO_TEST_ORACLES_HPP

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <limits>

namespace oracle
{
    inline double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

    // int_{-N/2}^{N/2} ln((r_max^2/d^2 - n^2) / (r_min^2/d^2 - n^2)) dn / (r_max^2 - r_min^2)
    inline double chi_bar_quad(double n, double d, double r_min, double r_max)
    {
        const double a2 = r_max * r_max / (d * d);
        const double b2 = r_min * r_min / (d * d);
        auto f = [&](double x) { return std::log((a2 - x * x) / (b2 - x * x)); };
        boost::math::quadrature::tanh_sinh<double> ts;
        const double v = ts.integrate(f, -0.5 * n, 0.5 * n, 1e-14);
        return v / (r_max * r_max - r_min * r_min);
    }

    // E{(r + N d / 2)^-2}, density 2r / (r_max^2 - r_min^2)
    inline double i_bar_quad(double n, double d, double r_min, double r_max)
    {
        const double h = 0.5 * n * d;
        auto f = [&](double r) { return 2.0 * r / ((r + h) * (r + h)); };
        const double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, r_min, r_max, 15, 1e-15);
        return v / (r_max * r_max - r_min * r_min);
    }

    // E_r{log2(1 + C / r^2)}
    inline double sub6_quad(double c, double r_min, double r_max)
    {
        auto f = [&](double r) { return std::log2(1.0 + c / (r * r)) * 2.0 * r; };
        const double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, r_min, r_max, 15, 1e-15);
        return v / (r_max * r_max - r_min * r_min);
    }

    // E_{r,g}{log2(1 + C g / r^2)}, g ~ Exp(1)
    inline double mmwave_quad(double c, double r_min, double r_max)
    {
        boost::math::quadrature::exp_sinh<double> es;
        auto inner = [&](double r)
        {
            auto g = [&](double x) { return std::log2(1.0 + c * x / (r * r)) * std::exp(-x); };
            return es.integrate(g, 0.0, std::numeric_limits<double>::infinity(), 1e-14) * 2.0 * r;
        };
        const double v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(inner, r_min, r_max, 10, 1e-13);
        return v / (r_max * r_max - r_min * r_min);
    }

    // E1(x) = int_0^inf exp(-x e^u) du (substitution t = x e^u)
    inline double e1_quad(double x)
    {
        auto f = [&](double u) { return std::exp(-x * std::exp(u)); };
        boost::math::quadrature::exp_sinh<double> es;
        return es.integrate(f, 0.0, std::numeric_limits<double>::infinity(), 1e-15);
    }

    // Long-double brute-force sums over the symmetric element index set.
    struct Sums
    {
        double chi;
        double interference;
    };
    inline Sums chi_sums_brute(int n, double d, double r_min, double r_max)
    {
        long double chi = 0.0L, inter = 0.0L;
        const long double delta = (long double)r_max * r_max - (long double)r_min * r_min;
        for (int i = 0; i < n; ++i)
        {
            const long double x = ((long double)i - 0.5L * (n - 1)) * d;
            const long double t = std::log(((long double)r_max * r_max - x * x) /
                                           ((long double)r_min * r_min - x * x)) / delta;
            chi += t;
            inter += t * t;
        }
        return {(double)chi, (double)inter};
    }

    // Midpoint rule with m points for chi_bar.
    inline double chi_bar_midpoint(double n, double d, double r_min, double r_max, long m)
    {
        const double a2 = r_max * r_max / (d * d);
        const double b2 = r_min * r_min / (d * d);
        const double h = n / m;
        long double acc = 0.0L;
        for (long i = 0; i < m; ++i)
        {
            const double x = -0.5 * n + (i + 0.5) * h;
            acc += std::log((a2 - x * x) / (b2 - x * x));
        }
        return (double)(acc * h) / (r_max * r_max - r_min * r_min);
    }
}

#endif
