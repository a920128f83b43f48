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

#ifndef EXACTQ_SYM_HPP
#define EXACTQ_SYM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "exactq/plan.hpp"

namespace exactq {

/// Symmetric function f(x) = a[|x|] whose ones lie within g of the middle weight.
struct SymSpec {
    std::vector<uint8_t> a;
    int g = 0;

    int n() const {
        return static_cast<int>(a.size()) - 1;
    }
    std::string str() const;
};

/// Parses a 0/1 string; throws InconsistentSpec when a has a one farther than g from n/2.
SymSpec make_sym_spec(const std::string &a, int g);

enum class SymStrategy {
    /// Sweep the middle across the ones, testing symmetric pairs of weights.
    CenterSweep,
    /// Test the outermost ones on opposite sides, then move toward the remaining side.
    Outward,
};

PlanPtr build_sym(const SymSpec &spec, SymStrategy strategy = SymStrategy::CenterSweep);

/// floor(n/2) + 7g + 1 for the sweep, floor(n/2) + 5g for the outward strategy.
int sym_query_bound(const SymSpec &spec, SymStrategy strategy);

}  // namespace exactq

#endif
