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

#include "exactq/five_three.hpp"

#include <cmath>

namespace exactq {

FiveThreeConstants five_three_constants(bool literal_signs) {
    const double r5 = std::sqrt(5.0), r7 = std::sqrt(7.0);
    FiveThreeConstants k;
    auto &a = k.a;
    a[1] = 1 / (4 * r7);
    a[2] = 17 / (16 * r5);
    a[3] = 12.0 / 17;
    a[4] = std::sqrt(3.0 / 7) / 16;
    a[5] = 17.0 / 40;
    a[6] = 30.0 / 17;
    a[7] = 2 * std::sqrt(2.0 / 7) / 5;
    a[8] = 1 / (16 * r7);
    a[9] = 1 / (8 * r5);
    a[10] = 5;
    a[11] = 6;
    a[12] = 3 * std::sqrt(3.0 / 7) / 16;
    a[13] = 2.0 / 3;
    a[14] = 3.0 / 8;
    a[15] = 2.0 / 3;
    a[16] = 1 / (2 * r7);
    a[17] = 1;
    a[18] = 3 / (16 * r7);
    if (!literal_signs) {
        a[12] = -a[12];
        a[18] = -a[18];
    }
    return k;
}

std::array<double, 18> five_three_residuals(const FiveThreeConstants &k) {
    const double r3 = std::sqrt(3.0), r5 = std::sqrt(5.0);
    const auto &a = k.a;
    auto sq = [](double x) {
        return x * x;
    };
    return {
        (a[2] * a[3] + 4 * a[2]) / r5 - 1,
        sq(a[1]) - (sq(a[2] * (a[3] - 1) / r5) + sq(3 * a[4] / r3)),
        5 * a[2] * a[3] / r5 - a[5] * a[6],
        a[2] * 2 / r5 - a[5],
        sq(a[7]) - (sq(a[2]) / 5 + sq(a[4]) / 3),
        a[4] / r3 - a[8],
        (2 * a[9] + 3 * a[9] * a[10]) / r5 - a[5],
        a[9] * a[11] * 5 / r5 - a[5] * a[6],
        sq(a[7]) - (sq(a[9] * (1 - a[10]) / r5) + sq(a[12] * (2 + a[13]) / r3)),
        a[8] - a[12] * (a[13] - 1) / r3,
        a[14] - 3 * a[9] * a[10] / r5,
        a[14] * a[15] - (4 * a[9] + a[9] * a[11]) / r5,
        sq(a[16]) - (sq(a[12] * 2 / r3) + sq(a[9] * a[10] / r5)),
        a[18] - a[12] / r3,
        a[11] - 1 - a[17] * a[10],
        3 * a[13] - 2 * a[17],
        -2 + a[15] * 3,
        -1 + a[17],
    };
}

double max_five_three_residual(const FiveThreeConstants &k) {
    double worst = 0;
    for (double r : five_three_residuals(k)) {
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

}  // namespace exactq
