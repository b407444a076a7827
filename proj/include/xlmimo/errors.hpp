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

#ifndef XLMIMO_ERRORS_HPP
#define XLMIMO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace xlmimo
{
    // Argument outside the mathematical domain of a model equation
    // (user inside the array aperture, non-positive log argument, ...).
    class DomainError : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    // A throughput bound whose log argument is non-positive at this K.
    class VacuousBoundError : public DomainError
    {
    public:
        using DomainError::DomainError;
    };

    // Gram matrix too ill-conditioned for zero-forcing.
    class RankDeficientError : public DomainError
    {
    public:
        RankDeficientError(const std::string &what, double condition)
            : DomainError(what), condition_(condition) {}
        double condition() const noexcept { return condition_; }

    private:
        double condition_;
    };

    // Configuration file or sweep definition problem. Line is 0 when the
    // error is not tied to a source line (e.g. a cross-field invariant).
    class ConfigError : public std::runtime_error
    {
    public:
        explicit ConfigError(const std::string &what, int line = 0)
            : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
              line_(line) {}
        int line() const noexcept { return line_; }

    private:
        int line_;
    };

    class IoError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };
}

#endif
