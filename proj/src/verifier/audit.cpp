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

#include "exactq/audit.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "exactq/error.hpp"
#include "exactq/polynomial.hpp"
#include "exactq/verify.hpp"

namespace exactq {

namespace {

std::string plan_name(const Plan &plan) {
    return plan.info.family + "/" + std::to_string(plan.info.n);
}

int count_queries(const std::vector<Step> &steps) {
    return static_cast<int>(std::count_if(steps.begin(), steps.end(), [](const Step &s) {
        return std::holds_alternative<QueryStep>(s);
    }));
}

void collect_targets(const Node *node, std::set<const Node *> &seen, std::vector<const Plan *> &out) {
    if (!seen.insert(node).second) {
        return;
    }
    if (auto m = std::get_if<MeasureTerm>(&node->terminal)) {
        for (const auto &c : m->children) {
            collect_targets(c.get(), seen, out);
        }
    } else if (auto b = std::get_if<BranchTerm>(&node->terminal)) {
        collect_targets(b->if_true.get(), seen, out);
        collect_targets(b->if_false.get(), seen, out);
    } else if (auto c = std::get_if<CallTerm>(&node->terminal)) {
        out.push_back(c->plan.get());
    }
}

std::vector<const Plan *> direct_callees(const Plan &plan) {
    std::set<const Node *> seen;
    std::vector<const Plan *> out;
    collect_targets(plan.root.get(), seen, out);
    return out;
}

void postorder(const Plan *plan, std::set<const Plan *> &seen, std::vector<const Plan *> &order) {
    if (!seen.insert(plan).second) {
        return;
    }
    for (const Plan *c : direct_callees(*plan)) {
        postorder(c, seen, order);
    }
    order.push_back(plan);
}

std::string join(const std::vector<std::string> &path) {
    std::string s;
    for (const auto &p : path) {
        s += p;
        s += '/';
    }
    return s;
}

struct Accumulated {
    SegmentDegree meta;
    std::vector<amp_t> values;
};

/// Basis entry states can carry components that no outcome covers, because the designed
/// entry states never reach them. Projection is linear, so those components are dropped.
LabeledState covered(const LabeledState &state, const MeasurementPartition &partition) {
    Amplitudes keep;
    bool dropped = false;
    for (const auto &[label, a] : state) {
        try {
            partition.classify(label);
            keep.emplace(label, a);
        } catch (const Error &e) {
            if (e.code() != ErrorCode::PartitionGap) {
                throw;
            }
            dropped = true;
        }
    }
    return dropped ? LabeledState(std::move(keep), 0.0) : state;
}

/// Walks one sub-plan on one input up to its calls and outputs.
class SegmentWalker {
   public:
    SegmentWalker(
        const Plan &plan,
        const std::vector<uint8_t> &y,
        uint64_t code,
        std::map<std::string, Accumulated> &acc,
        std::map<const Plan *, std::set<Label>> &entries)
        : plan_(plan), y_(y), code_(code), acc_(acc), entries_(entries) {
        for (int i = 0; i < plan.info.n; i++) {
            vars_.push_back(VarRef{i, 0});
        }
        oracle_ = oracle_for(vars_, y_);
    }

    void walk(const Node *node, const LabeledState &input, int queries, const Label &last) {
        LabeledState state = apply_steps(node->steps, input, oracle_);
        queries += count_queries(node->steps);
        const int live = plan_.info.n;
        if (auto out = std::get_if<OutputTerm>(&node->terminal)) {
            record(out->value ? "out1" : "out0", state, queries);
            return;
        }
        if (auto m = std::get_if<MeasureTerm>(&node->terminal)) {
            for (const auto &b : measure(covered(state, m->partition), m->partition, 0.0)) {
                if (b.squared_norm <= 0) {
                    continue;
                }
                path_.push_back(b.key(m->partition));
                walk(m->children[b.outcome].get(), b.state, queries, b.param);
                path_.pop_back();
            }
            return;
        }
        if (auto b = std::get_if<BranchTerm>(&node->terminal)) {
            walk(b->predicate(live) ? b->if_true.get() : b->if_false.get(), state, queries, last);
            return;
        }
        const auto &call = std::get<CallTerm>(node->terminal);
        const Plan *target = call.plan.get();
        if (call.handoff.mode == Handoff::Mode::Transform) {
            LabeledState moved = handoff_state(state, call.handoff, live, call.remap(live, last));
            for (const auto &[label, _] : moved) {
                entries_[target].insert(label);
            }
            record("pass:" + plan_name(*target), moved, queries);
            return;
        }
        entries_[target].insert(LabeledState::scalar().begin()->first);
        record("call:" + plan_name(*target), state, queries);
    }

    std::string entry;

   private:
    void record(const std::string &terminal, const LabeledState &state, int queries) {
        const std::string base = join(path_) + "#" + terminal + "#";
        for (const auto &[label, a] : state) {
            auto &slot = acc_[base + label.str()];
            if (slot.values.empty()) {
                slot.meta.plan = plan_name(plan_);
                slot.meta.n = plan_.info.n;
                slot.meta.entry = entry;
                slot.meta.path = path_;
                slot.meta.terminal = terminal;
                slot.meta.label = label;
                slot.meta.queries = queries;
                slot.values.assign(size_t{1} << plan_.info.n, 0.0);
            } else if (slot.meta.queries != queries) {
                throw Error(ErrorCode::InvalidArgument, "segment " + base + " has input-dependent query count");
            }
            slot.values[code_] += a;
        }
    }

    const Plan &plan_;
    const std::vector<uint8_t> &y_;
    uint64_t code_;
    std::map<std::string, Accumulated> &acc_;
    std::map<const Plan *, std::set<Label>> &entries_;
    std::vector<VarRef> vars_;
    OracleInput oracle_;
    std::vector<std::string> path_;
};

std::set<Label> default_entries(const Plan &plan) {
    std::set<Label> out;
    if (!plan.info.precomputed_entry) {
        out.insert(LabeledState::scalar().begin()->first);
        return out;
    }
    out.insert(Label{Part::sum()});
    for (int i = 1; i <= plan.info.n; i++) {
        for (int j = i + 1; j <= plan.info.n; j++) {
            out.insert(Label{Part::pair(i, j)});
        }
    }
    return out;
}

}  // namespace

DegreeAudit audit_leaf_degrees(const Plan &plan, const AuditOptions &options) {
    std::set<const Plan *> seen;
    std::vector<const Plan *> order;
    postorder(&plan, seen, order);
    std::reverse(order.begin(), order.end());

    std::map<const Plan *, std::set<Label>> entries;
    entries[&plan] = default_entries(plan);
    const Label scalar = LabeledState::scalar().begin()->first;

    DegreeAudit audit;
    for (const Plan *p : order) {
        const int n = p->info.n;
        if (n > options.max_n) {
            throw Error(ErrorCode::InvalidArgument, "sub-plan " + plan_name(*p) + " is too large to audit");
        }
        audit.plans_checked++;
        const std::set<Label> todo = entries[p];
        for (const Label &entry : todo) {
            std::map<std::string, Accumulated> acc;
            LabeledState start({{entry, 1.0}});
            for (uint64_t code = 0; code < (uint64_t{1} << n); code++) {
                auto y = input_bits(code, n);
                SegmentWalker walker(*p, y, code, acc, entries);
                walker.entry = entry == scalar ? "" : entry.str();
                walker.walk(p->root.get(), start, 0, Label{});
            }
            for (auto &[_, slot] : acc) {
                SegmentDegree seg = slot.meta;
                seg.degree = MultilinearPoly::from_values(n, std::move(slot.values)).degree(options.tolerance);
                audit.segments_checked++;
                audit.worst_slack = audit.segments_checked == 1 ? seg.degree - seg.queries
                                                                : std::max(audit.worst_slack, seg.degree - seg.queries);
                if (seg.degree > seg.queries) {
                    audit.ok = false;
                    audit.violations.push_back(seg);
                }
                if (options.keep_segments) {
                    audit.segments.push_back(std::move(seg));
                }
            }
        }
    }
    return audit;
}

std::vector<LeafDegree> direct_leaf_degrees(const Plan &plan, const RunOptions &options, double tolerance) {
    const int n = plan.info.n;
    if (n > 12) {
        throw Error(ErrorCode::InvalidArgument, "direct leaf extraction is limited to n <= 12");
    }
    struct Slot {
        LeafDegree meta;
        std::vector<amp_t> values;
    };
    std::map<std::string, Slot> slots;
    // Keep every nonzero branch so that small amplitudes are not cut to zero.
    RunOptions all = options;
    all.branch_epsilon = 0;
    for (uint64_t code = 0; code < (uint64_t{1} << n); code++) {
        RunTree tree = run_on_input(plan, input_bits(code, n), all);
        for (int leaf : tree.leaves()) {
            auto path = tree.path_to(leaf);
            for (const auto &[label, a] : tree.nodes[leaf].amplitudes) {
                auto &slot = slots[join(path) + label.str()];
                if (slot.values.empty()) {
                    slot.meta.path = path;
                    slot.meta.label = label;
                    slot.meta.queries = tree.nodes[leaf].queries;
                    slot.values.assign(size_t{1} << n, 0.0);
                }
                slot.values[code] = a;
            }
        }
    }
    std::vector<LeafDegree> out;
    for (auto &[_, slot] : slots) {
        slot.meta.degree = MultilinearPoly::from_values(n, std::move(slot.values)).degree(tolerance);
        out.push_back(std::move(slot.meta));
    }
    return out;
}

}  // namespace exactq
