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

#include "exactq/plan.hpp"

#include <set>
#include <unordered_map>

#include "exactq/error.hpp"

namespace exactq {

namespace {

int node_max_queries(const Node *node, std::unordered_map<const Node *, int> &memo) {
    auto it = memo.find(node);
    if (it != memo.end()) {
        return it->second;
    }
    int own = 0;
    for (const auto &step : node->steps) {
        own += std::holds_alternative<QueryStep>(step);
    }
    int below = 0;
    if (auto m = std::get_if<MeasureTerm>(&node->terminal)) {
        for (const auto &child : m->children) {
            below = std::max(below, node_max_queries(child.get(), memo));
        }
    } else if (auto c = std::get_if<CallTerm>(&node->terminal)) {
        below = node_max_queries(c->plan->root.get(), memo);
    } else if (auto b = std::get_if<BranchTerm>(&node->terminal)) {
        below = std::max(node_max_queries(b->if_true.get(), memo), node_max_queries(b->if_false.get(), memo));
    }
    memo[node] = own + below;
    return own + below;
}

void collect(const Node *node, std::set<const Node *> &seen) {
    if (!seen.insert(node).second) {
        return;
    }
    if (auto m = std::get_if<MeasureTerm>(&node->terminal)) {
        for (const auto &child : m->children) {
            collect(child.get(), seen);
        }
    } else if (auto c = std::get_if<CallTerm>(&node->terminal)) {
        collect(c->plan->root.get(), seen);
    } else if (auto b = std::get_if<BranchTerm>(&node->terminal)) {
        collect(b->if_true.get(), seen);
        collect(b->if_false.get(), seen);
    }
}

}  // namespace

int static_max_queries(const Plan &plan) {
    std::unordered_map<const Node *, int> memo;
    return node_max_queries(plan.root.get(), memo);
}

size_t plan_node_count(const Plan &plan) {
    std::set<const Node *> seen;
    collect(plan.root.get(), seen);
    return seen.size();
}

CallMap keep_all(int live) {
    CallMap map;
    for (int i = 1; i <= live; i++) {
        map.keep.push_back(i);
    }
    return map;
}

RemapRule remap_keep_all(int pad_ones, int pad_zeros) {
    return [pad_ones, pad_zeros](int live, const Label &) {
        CallMap map = keep_all(live);
        map.pad_ones = pad_ones;
        map.pad_zeros = pad_zeros;
        return map;
    };
}

RemapRule remap_remove_pair() {
    return [](int live, const Label &param) {
        if (param.empty() || (param[0].kind != PartKind::Pair && param[0].kind != PartKind::Quad)) {
            throw Error(ErrorCode::InvalidArgument, "pair removal needs a measured pair");
        }
        int i = param[0].idx[0];
        int j = param[0].idx[1];
        CallMap map;
        for (int v = 1; v <= live; v++) {
            if (v != i && v != j) {
                map.keep.push_back(v);
            }
        }
        return map;
    };
}

RemapRule remap_drop_prefix(int count) {
    return [count](int live, const Label &) {
        CallMap map;
        for (int v = count + 1; v <= live; v++) {
            map.keep.push_back(v);
        }
        return map;
    };
}

Handoff discard() {
    return Handoff{Handoff::Mode::Discard, nullptr};
}

Handoff transform(std::function<Label(const Label &)> relabel) {
    return Handoff{Handoff::Mode::Transform, std::move(relabel)};
}

Handoff strip_leading_pair() {
    return transform([](const Label &label) {
        if (label.size() > 0 && label[0].kind == PartKind::Quad) {
            Label rest = label.slice(1, label.size() - 1);
            return Label{Part::pair(label[0].idx[2], label[0].idx[3])} + rest;
        }
        if (label.size() > 1 && label[0].kind == PartKind::Pair) {
            return label.slice(1, label.size() - 1);
        }
        throw Error(ErrorCode::InvalidArgument, "cannot strip a leading pair from " + label.str());
    });
}

Label renumber(const Label &label, const std::vector<int> &old_to_new) {
    Label out;
    for (int k = 0; k < label.size(); k++) {
        Part p = label[k];
        for (int a = 0; a < p.arity(); a++) {
            int old = p.idx[a];
            int fresh = old < static_cast<int>(old_to_new.size()) ? old_to_new[old] : 0;
            if (fresh <= 0) {
                throw Error(ErrorCode::InvalidArgument, "label " + label.str() + " refers to a dropped variable");
            }
            p.idx[a] = static_cast<uint8_t>(fresh);
        }
        out = out.with(p);
    }
    return out;
}

NodePtr make_node(std::string name, std::vector<Step> steps, Terminal terminal) {
    return std::make_shared<const Node>(Node{std::move(name), std::move(steps), std::move(terminal)});
}

NodePtr output_node(bool value) {
    return make_node(value ? "output 1" : "output 0", {}, OutputTerm{value});
}

NodePtr call_node(std::string name, PlanPtr plan, RemapRule remap, Handoff handoff) {
    return make_node(std::move(name), {}, CallTerm{std::move(plan), std::move(remap), std::move(handoff)});
}

}  // namespace exactq
