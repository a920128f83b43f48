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

#ifndef EXACTQ_TESTS_SUPPORT_HPP
#define EXACTQ_TESTS_SUPPORT_HPP

#include <cmath>
#include <complex>
#include <vector>

#include "exactq/isometry.hpp"
#include "exactq/verify.hpp"

namespace exactq::testing {

using Dense = std::vector<std::vector<amp_t>>;

/// Column k is the image of space()[k]; only meaningful for completed gadgets.
inline Dense dense_of(const IsometryGadget &g) {
    const auto &space = g.space();
    Dense m(space.size(), std::vector<amp_t>(space.size(), 0.0));
    for (size_t col = 0; col < space.size(); col++) {
        LabeledState img = g.image(space[col]);
        for (size_t row = 0; row < space.size(); row++) {
            m[row][col] = img.amplitude(space[row]);
        }
    }
    return m;
}

/// max |M^dagger M - I|.
inline double dense_unitarity_error(const Dense &m) {
    double worst = 0;
    const size_t n = m.size();
    for (size_t a = 0; a < n; a++) {
        for (size_t b = 0; b < n; b++) {
            amp_t s = 0;
            for (size_t r = 0; r < n; r++) {
                s += std::conj(m[r][a]) * m[r][b];
            }
            worst = std::max(worst, std::abs(s - (a == b ? 1.0 : 0.0)));
        }
    }
    return worst;
}

inline int weight(const std::vector<uint8_t> &x) {
    int w = 0;
    for (auto b : x) {
        w += b;
    }
    return w;
}

inline double hat(uint8_t b) {
    return b ? -1.0 : 1.0;
}

}  // namespace exactq::testing

#endif
