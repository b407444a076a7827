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

#ifndef XLMIMO_RANDOM_HPP
#define XLMIMO_RANDOM_HPP

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace xlmimo
{
    // SplitMix64 finalizer; used to derive independent stream seeds.
    constexpr std::uint64_t mix64(std::uint64_t z) noexcept
    {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Seed for the stream identified by (master, ids...). Order matters.
    inline std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> ids) noexcept
    {
        std::uint64_t h = mix64(master);
        for (auto id : ids)
            h = mix64(h ^ mix64(id + 0x632be59bd9b4e019ULL));
        return h;
    }

    /// Deterministic random stream. Each worker owns its own instance.
    class RandomStream
    {
    public:
        explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

        // Uniform on the open interval (0, 1).
        double uniform()
        {
            double u;
            do
                u = std::generate_canonical<double, 53>(engine_);
            while (u <= 0.0);
            return u;
        }

        double normal() { return normal_(engine_); }

        // Circularly-symmetric CN(0, 1).
        std::complex<double> complex_normal()
        {
            constexpr double s = 0.70710678118654752440;
            double re = normal_(engine_);
            double im = normal_(engine_);
            return {s * re, s * im};
        }

    private:
        std::mt19937_64 engine_;
        std::normal_distribution<double> normal_{0.0, 1.0};
    };
}

#endif
