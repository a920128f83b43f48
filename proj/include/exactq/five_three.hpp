// Copyright 2026 The exactq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EXACTQ_FIVE_THREE_HPP
#define EXACTQ_FIVE_THREE_HPP

#include <array>

namespace exactq {

/// Constants a[1]..a[18] of the two-query routine for n=5, d=3.
struct FiveThreeConstants {
    std::array<double, 19> a{};

    double operator[](int k) const {
        return a[k];
    }
};

/// Tabulated magnitudes. With literal_signs=false, a12 and a18 carry the negative sign
/// required for the constraint a8 = a12 (a13 - 1) / sqrt(3) to hold.
FiveThreeConstants five_three_constants(bool literal_signs = false);

/// Residuals of the eighteen constraints, in order.
std::array<double, 18> five_three_residuals(const FiveThreeConstants &a);
double max_five_three_residual(const FiveThreeConstants &a);

}  // namespace exactq

#endif
