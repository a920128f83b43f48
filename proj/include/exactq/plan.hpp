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

#ifndef EXACTQ_PLAN_HPP
#define EXACTQ_PLAN_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "exactq/gadgets.hpp"
#include "exactq/measurement.hpp"

namespace exactq {

/// Replaces the current state. Only valid on a scalar state (at entry or after a discard).
struct PrepareStep {
    LabeledState state;
};

struct GadgetStep {
    std::shared_ptr<const IsometryGadget> gadget;
    Binding binding;
};

struct QueryStep {
    IndexRule rule;
};

using Step = std::variant<PrepareStep, GadgetStep, QueryStep>;

struct Node;
struct Plan;
using NodePtr = std::shared_ptr<const Node>;
using PlanPtr = std::shared_ptr<const Plan>;

struct OutputTerm {
    bool value;
};

struct MeasureTerm {
    MeasurementPartition partition;
    /// One child per outcome, same order as partition.outcomes.
    std::vector<NodePtr> children;
};

/// Variables handed to a sub-plan: kept live variables (1-based, in order) then padding.
struct CallMap {
    std::vector<int> keep;
    int pad_ones = 0;
    int pad_zeros = 0;
};

/// Computes the call map from the current live count and the last measured parameter.
using RemapRule = std::function<CallMap(int live, const Label &last_param)>;

/// What the callee receives of the caller's state.
struct Handoff {
    enum class Mode { Discard, Transform };
    Mode mode = Mode::Discard;
    /// Applied to each label before renumbering (Transform only).
    std::function<Label(const Label &)> relabel;
};

struct CallTerm {
    PlanPtr plan;
    RemapRule remap;
    Handoff handoff;
};

struct BranchTerm {
    std::function<bool(int live)> predicate;
    NodePtr if_true;
    NodePtr if_false;
};

using Terminal = std::variant<OutputTerm, MeasureTerm, CallTerm, BranchTerm>;

struct Node {
    std::string name;
    std::vector<Step> steps;
    Terminal terminal;
};

struct PlanInfo {
    std::string family;
    std::map<std::string, double> params;
    /// Live variables at entry.
    int n = 0;
    int claimed_queries = 0;
    /// True when the plan expects a precomputed state instead of starting from scratch.
    bool precomputed_entry = false;
    /// Started fresh, outcomes and query counts depend only on how many live variables are 1.
    bool symmetric = false;
};

struct Plan {
    PlanInfo info;
    NodePtr root;
};

/// Largest number of queries on any path of the plan graph, ignoring amplitudes.
int static_max_queries(const Plan &plan);
/// Number of distinct nodes reachable in the plan graph.
size_t plan_node_count(const Plan &plan);

// Remap rules and handoffs shared by the builders.
CallMap keep_all(int live);
RemapRule remap_keep_all(int pad_ones = 0, int pad_zeros = 0);
/// Drops the two variables of the measured pair (the leading pair of the parameter).
RemapRule remap_remove_pair();
/// Keeps variables first..live.
RemapRule remap_drop_prefix(int count);

Handoff discard();
Handoff transform(std::function<Label(const Label &)> relabel);
/// [P(ij), X] -> X and Quad(i,j,u,v) -> Pair(u,v).
Handoff strip_leading_pair();

/// Renumbers every index in the label through old->new (1-based; 0 = removed).
Label renumber(const Label &label, const std::vector<int> &old_to_new);

NodePtr make_node(std::string name, std::vector<Step> steps, Terminal terminal);
NodePtr output_node(bool value);
NodePtr call_node(std::string name, PlanPtr plan, RemapRule remap, Handoff handoff);

}  // namespace exactq

#endif
