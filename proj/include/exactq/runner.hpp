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

#ifndef EXACTQ_RUNNER_HPP
#define EXACTQ_RUNNER_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "exactq/plan.hpp"

namespace exactq {

/// A live variable of a running plan: an input position, or a padded constant.
struct VarRef {
    int input = -1;
    uint8_t constant = 0;

    bool padded() const {
        return input < 0;
    }
};

struct RunOptions {
    double branch_epsilon = kBranchEpsilon;
    /// Entry state for plans that expect a precomputed state.
    std::optional<LabeledState> entry;
    /// Only follow branches whose keys match this path (from the root down).
    std::optional<std::vector<std::string>> follow;
};

struct RunTreeNode {
    int parent = -1;
    /// Outcome key that led here ("root", "pair(1,2)", "discard:(1,2)|R", ...).
    std::string key;
    double probability = 0;
    int queries = 0;
    bool reachable = true;
    std::optional<bool> output;
    /// Unnormalized amplitudes at a leaf.
    LabeledState amplitudes;
};

struct RunTree {
    std::vector<RunTreeNode> nodes;
    int worst_case_queries = 0;
    double accept_probability = 0;
    double reject_probability = 0;
    double max_norm_residual = 0;

    std::vector<std::string> path_to(int node) const;
    std::vector<int> leaves() const;
};

/// Executes the plan on one input, exploring every reachable branch.
RunTree run_on_input(const Plan &plan, const std::vector<uint8_t> &x, const RunOptions &options = {});

/// Runs the unitary steps of one node on a state (no terminal).
LabeledState apply_steps(const std::vector<Step> &steps, const LabeledState &state, const OracleInput &oracle);

/// State a Transform call passes to its callee (unnormalized, renumbered).
LabeledState handoff_state(const LabeledState &state, const Handoff &handoff, int live, const CallMap &map);

OracleInput oracle_for(const std::vector<VarRef> &vars, const std::vector<uint8_t> &x);

/// Outcome of one input under memoized exploration.
struct InputSummary {
    double mass[2] = {0, 0};
    /// Reachable leaves per output value, saturating at UINT64_MAX.
    uint64_t leaves[2] = {0, 0};
    int worst_queries = 0;
    double max_norm_residual = 0;
};

/// Memoizing evaluator; reuse one per thread.
class SummaryEngine {
   public:
    explicit SummaryEngine(double branch_epsilon = kBranchEpsilon);
    ~SummaryEngine();

    InputSummary run(const Plan &plan, const std::vector<uint8_t> &x, const std::optional<LabeledState> &entry);
    size_t memo_size() const;

   private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace exactq

#endif
