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

#include "exactq/measurement.hpp"

#include <map>

#include "exactq/error.hpp"

namespace exactq {

std::pair<int, Label> MeasurementPartition::classify(const Label &label) const {
    int found = -1;
    Label param;
    for (size_t k = 0; k < outcomes.size(); k++) {
        auto p = outcomes[k].predicate(label);
        if (!p) {
            continue;
        }
        if (found >= 0) {
            throw Error(
                ErrorCode::PartitionOverlap,
                label.str() + " matches both " + outcomes[found].id + " and " + outcomes[k].id);
        }
        found = static_cast<int>(k);
        param = *p;
    }
    if (found < 0) {
        throw Error(ErrorCode::PartitionGap, label.str() + " matches no outcome");
    }
    return {found, param};
}

std::string MeasuredBranch::key(const MeasurementPartition &partition) const {
    const std::string &id = partition.outcomes[outcome].id;
    return param.empty() ? id : id + param.str();
}

std::vector<MeasuredBranch> measure(
    const LabeledState &state, const MeasurementPartition &partition, double branch_epsilon) {
    std::map<std::pair<int, Label>, Amplitudes> groups;
    for (const auto &[label, a] : state) {
        groups[partition.classify(label)][label] = a;
    }
    double total = state.squared_norm();
    std::vector<MeasuredBranch> out;
    out.reserve(groups.size());
    for (auto &[key, amps] : groups) {
        LabeledState part(std::move(amps), 0.0);
        double n2 = part.squared_norm();
        out.push_back(MeasuredBranch{key.first, key.second, std::move(part), n2, n2 >= branch_epsilon * total && n2 > 0});
    }
    return out;
}

}  // namespace exactq
