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

#ifndef EXACTQ_MEASUREMENT_HPP
#define EXACTQ_MEASUREMENT_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "exactq/state.hpp"

namespace exactq {

/// Projective measurement described by disjoint predicates over labels.
/// A predicate returns the outcome parameter (e.g. the measured pair), or nullopt if
/// the label is outside that outcome.
struct MeasurementPartition {
    struct Outcome {
        std::string id;
        std::function<std::optional<Label>(const Label &)> predicate;
    };
    std::vector<Outcome> outcomes;

    /// (outcome index, parameter); throws PartitionGap / PartitionOverlap.
    std::pair<int, Label> classify(const Label &label) const;
};

struct MeasuredBranch {
    int outcome;
    Label param;
    LabeledState state;
    double squared_norm;
    bool reachable;

    std::string key(const MeasurementPartition &partition) const;
};

/// Splits the state into outcome branches sorted by (outcome, parameter). A branch is
/// unreachable when its squared norm is below branch_epsilon times the input's.
std::vector<MeasuredBranch> measure(
    const LabeledState &state, const MeasurementPartition &partition, double branch_epsilon = kBranchEpsilon);

}  // namespace exactq

#endif
