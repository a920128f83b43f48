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

#ifndef EXACTQ_AUDIT_HPP
#define EXACTQ_AUDIT_HPP

#include <string>
#include <vector>

#include "exactq/plan.hpp"
#include "exactq/runner.hpp"

namespace exactq {

/// One amplitude function at the end of a call-free stretch of a sub-plan.
struct SegmentDegree {
    std::string plan;
    int n = 0;
    /// Entry basis label ("" for a fresh start).
    std::string entry;
    std::vector<std::string> path;
    /// "out0", "out1", "call:<family>/<n>" or "pass:<family>/<n>".
    std::string terminal;
    Label label;
    int queries = 0;
    int degree = 0;
};

struct DegreeAudit {
    bool ok = true;
    int plans_checked = 0;
    int segments_checked = 0;
    /// Largest degree minus queries over all segments (<= 0 when ok).
    int worst_slack = 0;
    std::vector<SegmentDegree> violations;
    std::vector<SegmentDegree> segments;
};

struct AuditOptions {
    double tolerance = 1e-9;
    int max_n = 14;
    bool keep_segments = false;
};

/// Checks that every leaf amplitude of the plan has degree at most its path query count.
/// Each sub-plan is checked once per entry basis state, over all inputs of its own
/// variables, up to the next call or output. A leaf amplitude is a sum of products of
/// one amplitude per stretch, with variables substituted or fixed, so the stretch bounds
/// add up along every path.
DegreeAudit audit_leaf_degrees(const Plan &plan, const AuditOptions &options = {});

/// Direct check on the full leaves: runs every input, collects each (leaf path, label)
/// amplitude and extracts its degree. Memory grows with the number of leaves; meant for
/// small n.
struct LeafDegree {
    std::vector<std::string> path;
    Label label;
    int queries = 0;
    int degree = 0;
};
std::vector<LeafDegree> direct_leaf_degrees(const Plan &plan, const RunOptions &options = {}, double tolerance = 1e-9);

}  // namespace exactq

#endif
