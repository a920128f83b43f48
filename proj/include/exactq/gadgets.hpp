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

#ifndef EXACTQ_GADGETS_HPP
#define EXACTQ_GADGETS_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "exactq/isometry.hpp"

namespace exactq {

/// U_n: |i> -> (|S> - sum_{j<i}|ji> + sum_{j>i}|ij>) / sqrt(n), on single-part labels.
IsometryGadget u_gadget(int n);
/// Completed U_n, cached.
std::shared_ptr<const IsometryGadget> completed_u(int n);
/// Completed U_n^dagger, cached.
std::shared_ptr<const IsometryGadget> completed_u_dagger(int n);

/// R: |0> -> sin(alpha)|L> + cos(alpha)|R>.
IsometryGadget r_rotation(double alpha);
/// R with sin/cos proportional to (l, r).
IsometryGadget r_rotation_toward(double l, double r);

/// Q(u, w) on one ancilla qubit: [[sqrt u, -sqrt w], [sqrt w, sqrt u]] / sqrt(u + w).
IsometryGadget q_rotation(double u, double w);
IsometryGadget hadamard();

/// Input string seen by the oracle; entry i-1 is variable i.
struct OracleInput {
    std::vector<uint8_t> bits;
    std::vector<bool> padded;

    int size() const {
        return static_cast<int>(bits.size());
    }
};

/// Variable index read by the oracle from a label; nullopt means the no-query sector.
using IndexRule = std::function<std::optional<int>(const Label &)>;

/// Index of the last Index part; labels without one are not queried.
IndexRule last_index_rule();
/// Index of the first part when it is an Index.
IndexRule first_index_rule();
/// Index carried by [ancilla 1, Index i] labels.
IndexRule ancilla_index_rule();

/// |i> -> (-1)^{x_i}|i>.
LabeledState oracle_apply(const LabeledState &state, const OracleInput &x, const IndexRule &rule);

}  // namespace exactq

#endif
