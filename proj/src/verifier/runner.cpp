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

#include "exactq/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>

#include "exactq/error.hpp"

namespace exactq {

namespace {

bool is_scalar(const LabeledState &s) {
    return s.empty() || (s.size() == 1 && s.begin()->first.is(PartKind::Scratch0));
}

std::vector<VarRef> remap_vars(const std::vector<VarRef> &vars, const CallMap &map) {
    std::vector<VarRef> out;
    out.reserve(map.keep.size() + map.pad_ones + map.pad_zeros);
    for (int k : map.keep) {
        if (k < 1 || k > static_cast<int>(vars.size())) {
            throw Error(ErrorCode::IndexOutOfRange, "call keeps variable " + std::to_string(k));
        }
        out.push_back(vars[k - 1]);
    }
    for (int k = 0; k < map.pad_ones; k++) {
        out.push_back(VarRef{-1, 1});
    }
    for (int k = 0; k < map.pad_zeros; k++) {
        out.push_back(VarRef{-1, 0});
    }
    return out;
}

std::vector<int> old_to_new(int live, const CallMap &map) {
    std::vector<int> o2n(live + 1, 0);
    for (size_t pos = 0; pos < map.keep.size(); pos++) {
        o2n[map.keep[pos]] = static_cast<int>(pos) + 1;
    }
    return o2n;
}

LabeledState hand_over(const LabeledState &state, const Handoff &handoff, const std::vector<int> &o2n) {
    Amplitudes out;
    for (const auto &[label, a] : state) {
        out[renumber(handoff.relabel(label), o2n)] += a;
    }
    return LabeledState(std::move(out), 0.0);
}

int count_queries(const std::vector<Step> &steps) {
    int q = 0;
    for (const auto &s : steps) {
        q += std::holds_alternative<QueryStep>(s);
    }
    return q;
}

std::vector<VarRef> root_vars(const Plan &plan, const std::vector<uint8_t> &x) {
    if (static_cast<int>(x.size()) != plan.info.n) {
        throw Error(
            ErrorCode::InvalidArgument,
            "input has " + std::to_string(x.size()) + " bits, plan expects " + std::to_string(plan.info.n));
    }
    std::vector<VarRef> vars;
    for (int i = 0; i < plan.info.n; i++) {
        vars.push_back(VarRef{i, 0});
    }
    return vars;
}

LabeledState entry_state(const Plan &plan, const std::optional<LabeledState> &entry) {
    if (plan.info.precomputed_entry) {
        if (!entry) {
            throw Error(ErrorCode::InvalidArgument, "plan " + plan.info.family + " needs an entry state");
        }
        return entry->normalized();
    }
    return LabeledState::scalar();
}

class TreeBuilder {
   public:
    TreeBuilder(const RunOptions &options, const std::vector<uint8_t> &x) : options_(options), x_(x) {
    }

    RunTree run(const Plan &plan) {
        LabeledState start = entry_state(plan, options_.entry);
        RunTreeNode root;
        root.key = "root";
        root.probability = start.squared_norm();
        tree_.nodes.push_back(root);
        explore(plan.root.get(), root_vars(plan, x_), start, 1.0, 0, Label{}, 0, 0);
        return std::move(tree_);
    }

   private:
    bool admitted(const std::string &key, size_t depth) const {
        if (!options_.follow) {
            return true;
        }
        return depth < options_.follow->size() && (*options_.follow)[depth] == key;
    }

    int add_node(int parent, std::string key, double probability, int queries, bool reachable) {
        RunTreeNode node;
        node.parent = parent;
        node.key = std::move(key);
        node.probability = probability;
        node.queries = queries;
        node.reachable = reachable;
        tree_.nodes.push_back(std::move(node));
        return static_cast<int>(tree_.nodes.size()) - 1;
    }

    void explore(
        const Node *node,
        const std::vector<VarRef> &vars,
        const LabeledState &input,
        amp_t scale,
        int queries,
        const Label &last,
        int at,
        size_t depth) {
        OracleInput oracle = oracle_for(vars, x_);
        LabeledState state = apply_steps(node->steps, input, oracle);
        queries += count_queries(node->steps);
        const double weight = std::norm(scale);
        if (auto out = std::get_if<OutputTerm>(&node->terminal)) {
            RunTreeNode &leaf = tree_.nodes[at];
            leaf.output = out->value;
            leaf.queries = queries;
            leaf.amplitudes = state.scaled(scale);
            double p = weight * state.squared_norm();
            leaf.probability = p;
            (out->value ? tree_.accept_probability : tree_.reject_probability) += p;
            tree_.worst_case_queries = std::max(tree_.worst_case_queries, queries);
            return;
        }
        if (auto m = std::get_if<MeasureTerm>(&node->terminal)) {
            auto branches = measure(state, m->partition, options_.branch_epsilon);
            double total = state.squared_norm(), sum = 0;
            for (const auto &b : branches) {
                sum += b.squared_norm;
            }
            if (total > 0) {
                tree_.max_norm_residual = std::max(tree_.max_norm_residual, std::abs(sum - total) / total);
            }
            for (const auto &b : branches) {
                std::string key = b.key(m->partition);
                if (!admitted(key, depth)) {
                    continue;
                }
                int child = add_node(at, key, weight * b.squared_norm, queries, b.reachable);
                if (b.reachable) {
                    explore(m->children[b.outcome].get(), vars, b.state, scale, queries, b.param, child, depth + 1);
                }
            }
            return;
        }
        if (auto b = std::get_if<BranchTerm>(&node->terminal)) {
            const Node *next = b->predicate(static_cast<int>(vars.size())) ? b->if_true.get() : b->if_false.get();
            explore(next, vars, state, scale, queries, last, at, depth);
            return;
        }
        const auto &call = std::get<CallTerm>(node->terminal);
        CallMap map = call.remap(static_cast<int>(vars.size()), last);
        std::vector<VarRef> next_vars = remap_vars(vars, map);
        const Node *target = call.plan->root.get();
        if (call.handoff.mode == Handoff::Mode::Transform) {
            LabeledState moved = hand_over(state, call.handoff, old_to_new(static_cast<int>(vars.size()), map));
            double nrm = std::sqrt(moved.squared_norm());
            explore(target, next_vars, moved.normalized(), scale * nrm, queries, Label{}, at, depth);
            return;
        }
        if (state.size() <= 1) {
            amp_t a = state.empty() ? amp_t{0.0} : state.begin()->second;
            explore(target, next_vars, LabeledState::scalar(), scale * a, queries, Label{}, at, depth);
            return;
        }
        const double total = state.squared_norm();
        for (const auto &[label, a] : state) {
            std::string key = "discard:" + label.str();
            if (!admitted(key, depth)) {
                continue;
            }
            bool reachable = std::norm(a) >= options_.branch_epsilon * total;
            int child = add_node(at, key, weight * std::norm(a), queries, reachable);
            if (reachable) {
                explore(target, next_vars, LabeledState::scalar(), scale * a, queries, Label{}, child, depth + 1);
            }
        }
    }

    const RunOptions &options_;
    const std::vector<uint8_t> &x_;
    RunTree tree_;
};

std::string state_key(const LabeledState &s) {
    amp_t phase = 1.0;
    for (const auto &[_, a] : s) {
        if (std::abs(a) > 1e-7) {
            phase = std::conj(a) / std::abs(a);
            break;
        }
    }
    std::string key;
    for (const auto &[label, a] : s) {
        amp_t b = a * phase;
        long long re = std::llround(b.real() * 1e9);
        long long im = std::llround(b.imag() * 1e9);
        if (re == 0 && im == 0) {
            continue;
        }
        key += label.str();
        key += ':';
        key += std::to_string(re);
        key += ',';
        key += std::to_string(im);
        key += ';';
    }
    return key;
}

void absorb(InputSummary &into, const InputSummary &sub, double weight, int queries) {
    for (int v = 0; v < 2; v++) {
        into.mass[v] += weight * sub.mass[v];
        into.leaves[v] = sub.leaves[v] > UINT64_MAX - into.leaves[v] ? UINT64_MAX : into.leaves[v] + sub.leaves[v];
    }
    into.worst_queries = std::max(into.worst_queries, queries + sub.worst_queries);
    into.max_norm_residual = std::max(into.max_norm_residual, sub.max_norm_residual);
}

}  // namespace

LabeledState handoff_state(const LabeledState &state, const Handoff &handoff, int live, const CallMap &map) {
    return hand_over(state, handoff, old_to_new(live, map));
}

std::vector<std::string> RunTree::path_to(int node) const {
    std::vector<std::string> path;
    while (node > 0) {
        path.push_back(nodes[node].key);
        node = nodes[node].parent;
    }
    return {path.rbegin(), path.rend()};
}

std::vector<int> RunTree::leaves() const {
    std::vector<int> out;
    for (size_t k = 0; k < nodes.size(); k++) {
        if (nodes[k].output) {
            out.push_back(static_cast<int>(k));
        }
    }
    return out;
}

OracleInput oracle_for(const std::vector<VarRef> &vars, const std::vector<uint8_t> &x) {
    OracleInput oracle;
    oracle.bits.reserve(vars.size());
    for (const auto &v : vars) {
        oracle.bits.push_back(v.padded() ? v.constant : x[v.input]);
        oracle.padded.push_back(v.padded());
    }
    return oracle;
}

LabeledState apply_steps(const std::vector<Step> &steps, const LabeledState &state, const OracleInput &oracle) {
    LabeledState cur = state;
    for (const auto &step : steps) {
        if (auto p = std::get_if<PrepareStep>(&step)) {
            if (!is_scalar(cur)) {
                throw Error(ErrorCode::InvalidArgument, "prepare on a non-scalar state");
            }
            amp_t a = cur.empty() ? amp_t{0.0} : cur.begin()->second;
            cur = p->state.scaled(a);
        } else if (auto g = std::get_if<GadgetStep>(&step)) {
            cur = apply_isometry(cur, *g->gadget, g->binding);
        } else {
            cur = oracle_apply(cur, oracle, std::get<QueryStep>(step).rule);
        }
    }
    return cur;
}

RunTree run_on_input(const Plan &plan, const std::vector<uint8_t> &x, const RunOptions &options) {
    TreeBuilder builder(options, x);
    return builder.run(plan);
}

struct SummaryEngine::Impl {
    double eps;
    std::unordered_map<std::string, InputSummary> memo;
    const std::vector<uint8_t> *x = nullptr;

    InputSummary enter(const Plan &plan, const std::vector<VarRef> &vars, const LabeledState &unit) {
        const Node *root = plan.root.get();
        std::string bits;
        for (const auto &v : vars) {
            bits += static_cast<char>('0' + (v.padded() ? v.constant : (*x)[v.input]));
        }
        const bool canonical = plan.info.symmetric && is_scalar(unit);
        if (canonical) {
            std::sort(bits.begin(), bits.end());
        }
        std::string key = std::to_string(reinterpret_cast<uintptr_t>(root)) + '/' + bits + '/' + state_key(unit);
        auto it = memo.find(key);
        if (it != memo.end()) {
            return it->second;
        }
        InputSummary s;
        if (canonical) {
            std::vector<VarRef> sorted;
            for (char b : bits) {
                sorted.push_back(VarRef{-1, static_cast<uint8_t>(b - '0')});
            }
            s = eval(root, sorted, unit, Label{});
        } else {
            s = eval(root, vars, unit, Label{});
        }
        memo.emplace(std::move(key), s);
        return s;
    }

    InputSummary eval(const Node *node, const std::vector<VarRef> &vars, const LabeledState &input, const Label &last) {
        LabeledState state = apply_steps(node->steps, input, oracle_for(vars, *x));
        const int q = count_queries(node->steps);
        InputSummary out;
        if (auto o = std::get_if<OutputTerm>(&node->terminal)) {
            out.mass[o->value] = state.squared_norm();
            out.leaves[o->value] = 1;
            out.worst_queries = q;
            return out;
        }
        if (auto m = std::get_if<MeasureTerm>(&node->terminal)) {
            auto branches = measure(state, m->partition, eps);
            double total = state.squared_norm(), sum = 0;
            for (const auto &b : branches) {
                sum += b.squared_norm;
                if (b.reachable) {
                    absorb(out, eval(m->children[b.outcome].get(), vars, b.state, b.param), 1.0, q);
                }
            }
            if (total > 0) {
                out.max_norm_residual = std::max(out.max_norm_residual, std::abs(sum - total) / total);
            }
            return out;
        }
        if (auto b = std::get_if<BranchTerm>(&node->terminal)) {
            const Node *next = b->predicate(static_cast<int>(vars.size())) ? b->if_true.get() : b->if_false.get();
            InputSummary sub = eval(next, vars, state, last);
            absorb(out, sub, 1.0, q);
            return out;
        }
        const auto &call = std::get<CallTerm>(node->terminal);
        CallMap map = call.remap(static_cast<int>(vars.size()), last);
        std::vector<VarRef> next_vars = remap_vars(vars, map);
                if (call.handoff.mode == Handoff::Mode::Transform) {
            LabeledState moved = hand_over(state, call.handoff, old_to_new(static_cast<int>(vars.size()), map));
            double n2 = moved.squared_norm();
            absorb(out, enter(*call.plan, next_vars, moved.normalized()), n2, q);
            return out;
        }
        const double total = state.squared_norm();
        InputSummary once;
        bool have = false;
        for (const auto &[label, a] : state) {
            if (std::norm(a) < eps * total) {
                continue;
            }
            if (!have) {
                once = enter(*call.plan, next_vars, LabeledState::scalar());
                have = true;
            }
            absorb(out, once, std::norm(a), q);
        }
        return out;
    }
};

SummaryEngine::SummaryEngine(double branch_epsilon) : impl_(std::make_unique<Impl>()) {
    impl_->eps = branch_epsilon;
}

SummaryEngine::~SummaryEngine() = default;

InputSummary SummaryEngine::run(
    const Plan &plan, const std::vector<uint8_t> &x, const std::optional<LabeledState> &entry) {
    impl_->x = &x;
    std::vector<VarRef> vars = root_vars(plan, x);
    LabeledState start = entry_state(plan, entry);
    InputSummary s = impl_->eval(plan.root.get(), vars, start, Label{});
    impl_->x = nullptr;
    return s;
}

size_t SummaryEngine::memo_size() const {
    return impl_->memo.size();
}

}  // namespace exactq
