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

#ifndef XLMIMO_EXPINT_HPP
#define XLMIMO_EXPINT_HPP

namespace xlmimo
{
    // E1(x) = int_x^inf exp(-t)/t dt for x > 0. Power series for x <= 1,
    // modified Lentz continued fraction above. Throws DomainError for x <= 0.
    double exp_integral_e1(double x);

    // exp(x) * E1(x), finite for every x > 0 (no overflow for large x).
    double scaled_exp_integral_e1(double x);
}

#endif
