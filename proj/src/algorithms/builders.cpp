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

#include "exactq/builders.hpp"

#include <cmath>
#include <mutex>

#include "bindings.hpp"
#include "exactq/error.hpp"
#include "exactq/five_three.hpp"

namespace exactq {

namespace {

using bindings::InnerIndex;
using bindings::OuterIndex;

std::recursive_mutex &memo_mutex() {
    static std::recursive_mutex m;
    return m;
}

template <typename Make>
PlanPtr memoized(const std::string &key, Make make) {
    static std::map<std::string, PlanPtr> memo;
    std::lock_guard<std::recursive_mutex> lock(memo_mutex());
    auto it = memo.find(key);
    if (it != memo.end()) {
        return it->second;
    }
    PlanPtr plan = make();
    memo.emplace(key, plan);
    return plan;
}

std::string key_of(const std::string &family, std::initializer_list<int> args) {
    std::string key = family;
    for (int a : args) {
        key += ":" + std::to_string(a);
    }
    return key;
}

PlanPtr make_plan(PlanInfo info, NodePtr root) {
    return std::make_shared<const Plan>(Plan{std::move(info), std::move(root)});
}

/// Same root under different metadata.
PlanPtr rename(const PlanPtr &plan, PlanInfo info) {
    return make_plan(std::move(info), plan->root);
}

std::shared_ptr<const IsometryGadget> shared(IsometryGadget g) {
    return std::make_shared<const IsometryGadget>(complete_isometry(g));
}

std::shared_ptr<const IsometryGadget> shared_adjoint(IsometryGadget g) {
    return std::make_shared<const IsometryGadget>(complete_isometry(g).adjoint());
}

GadgetStep gadget(std::shared_ptr<const IsometryGadget> g, Binding b) {
    return GadgetStep{std::move(g), std::move(b)};
}

LabeledState uniform_indices(int m) {
    Amplitudes amps;
    for (int i = 1; i <= m; i++) {
        amps[Label{Part::index(i)}] = 1.0 / std::sqrt(static_cast<double>(m));
    }
    return LabeledState(std::move(amps));
}

std::optional<Label> only_sum(const Label &g) {
    return g.is(PartKind::S) ? std::optional<Label>(Label{}) : std::nullopt;
}

std::optional<Label> leading_pair(const Label &g) {
    if (g.size() == 0) {
        return std::nullopt;
    }
    if (g[0].kind == PartKind::Pair) {
        return Label{g[0]};
    }
    if (g[0].kind == PartKind::Quad) {
        return Label{Part::pair(g[0].idx[0], g[0].idx[1])};
    }
    return std::nullopt;
}

MeasurementPartition sum_or_pair() {
    return MeasurementPartition{{{"S", only_sum}, {"pair", leading_pair}}};
}

/// As above, plus an outcome for whatever a broken step leaves behind (unreachable when
/// the constants are right).
MeasurementPartition sum_pair_or_other() {
    auto other = [](const Label &g) -> std::optional<Label> {
        if (only_sum(g) || leading_pair(g)) {
            return std::nullopt;
        }
        return g;
    };
    return MeasurementPartition{{{"S", only_sum}, {"pair", leading_pair}, {"other", other}}};
}

void check_unb_args(int n, int d) {
    if (d < 1 || n < d || (n - d) % 2 != 0) {
        throw Error(ErrorCode::DomainError, "need n >= d >= 1 and n = d mod 2");
    }
}

int chain_start(int d) {
    return d + 2 * chain_base(d).k0;
}

PlanPtr unbr_base(int d) {
    PlanInfo info{"unbr", {{"n", d}, {"d", d}, {"gamma", 0}}, d, 0, true};
    NodePtr root = make_node(
        "unbr base", {}, MeasureTerm{sum_or_pair(), {output_node(true), output_node(false)}});
    return make_plan(std::move(info), root);
}

PlanPtr unbr_step(int n, int d, const Tamper &tamper) {
    const double gamma_prev = unbr_gamma(n - 2, d);
    StepConstants k = solve_step_constants(n, d, gamma_prev);
    double c1 = tamper("c1", k[1]);
    if (tamper.delta.count("c7")) {
        const double c7 = tamper("c7", k[7]);
        c1 = -c7 / (static_cast<double>(n) * n - c7);
    }
    const double c2 = tamper("c2", k[2]);
    const double c8 = tamper("c8", k[8]);
    const double c9 = tamper("c9", k[9]);
    std::vector<Step> steps{
        gadget(shared(r_rotation_toward(c1, c2)), bindings::pair_tags()),
        gadget(completed_u_dagger(n), bindings::outer(OuterIndex::Plain)),
        gadget(completed_u_dagger(n - 2), bindings::inner(n, InnerIndex::PairThenIndex)),
        QueryStep{last_index_rule()},
        gadget(completed_u(n), bindings::outer(OuterIndex::Plain)),
        gadget(completed_u(n - 2), bindings::inner(n, InnerIndex::PairThenIndex)),
        gadget(shared_adjoint(r_rotation_toward(c8, c9)), bindings::pair_sum_tags()),
    };
    NodePtr recurse = call_node("reduce", build_unbr(n - 2, d), remap_remove_pair(), strip_leading_pair());
    NodePtr root = make_node(
        "unbr step n=" + std::to_string(n), std::move(steps),
        MeasureTerm{sum_pair_or_other(), {output_node(false), recurse, output_node(false)}});
    int claimed = (n - chain_start(d)) / 2 + chain_base(d).base_queries;
    PlanInfo info{"unbr", {{"n", n}, {"d", d}, {"gamma", k.gamma}}, n, claimed, true};
    return make_plan(std::move(info), root);
}

int unb_claim(int n, int d) {
    return d == 1 ? (n + d) / 2 : (n + d) / 2 - 1;
}

PlanPtr balanced(int m) {
    return memoized(key_of("balanced", {m}), [m] {
        PlanInfo info{"exactk", {{"n", m}, {"k", m / 2}}, m, m / 2, false, true};
        if (m == 0) {
            return make_plan(std::move(info), output_node(true));
        }
        std::vector<Step> steps{
            PrepareStep{uniform_indices(m)},
            QueryStep{last_index_rule()},
            gadget(completed_u(m), bindings::plain()),
        };
        NodePtr recurse = call_node("drop pair", balanced(m - 2), remap_remove_pair(), discard());
        NodePtr root = make_node(
            "balanced m=" + std::to_string(m), std::move(steps),
            MeasureTerm{sum_or_pair(), {output_node(false), recurse}});
        return make_plan(std::move(info), root);
    });
}

StepFragment ancilla_step(int n, double weight0, bool use_q, int u, int w) {
    if (n < 1) {
        throw Error(ErrorCode::DomainError, "step needs n >= 1");
    }
    Label s0{Part::ancilla(0), Part::sum()};
    Label s1{Part::ancilla(1), Part::sum()};
    LabeledState prep = LabeledState(Amplitudes{{s0, weight0}, {s1, 1.0}}).normalized();
    StepFragment f;
    f.steps = {
        PrepareStep{prep},
        gadget(completed_u_dagger(n), bindings::ancilla_one()),
        QueryStep{ancilla_index_rule()},
        gadget(completed_u(n), bindings::ancilla_one()),
    };
    if (use_q) {
        f.steps.push_back(gadget(shared(q_rotation(u, w)), bindings::ancilla_on_sum()));
    } else {
        f.steps.push_back(gadget(shared(hadamard()), bindings::ancilla_register()));
    }
    auto data_pair = [](const Label &g) -> std::optional<Label> {
        if (g.size() == 2 && g[0].kind == PartKind::Ancilla && g[1].kind == PartKind::Pair) {
            return Label{g[1]};
        }
        return std::nullopt;
    };
    auto exactly = [](Label want) {
        return [want](const Label &g) -> std::optional<Label> {
            return g == want ? std::optional<Label>(Label{}) : std::nullopt;
        };
    };
    f.partition.outcomes = {
        {"pair", data_pair},
        {use_q ? "not_u" : "not_minus_d", exactly(s0)},
        {use_q ? "not_minus_w" : "not_plus_d", exactly(s1)},
    };
    return f;
}

}  // namespace

double unbr_gamma(int n, int d) {
    check_unb_args(n, d);
    ChainBase base = chain_base(d);
    int n0 = d + 2 * base.k0;
    if (n < n0) {
        throw Error(ErrorCode::DomainError, "no recursive routine below the chain start n = " + std::to_string(n0));
    }
    double g = base.gamma0;
    for (int m = n0 + 2; m <= n; m += 2) {
        g = gamma_next(m, d, g);
        if (g >= 1) {
            throw Error(ErrorCode::DivergedChain, "gamma reaches 1 at n = " + std::to_string(m));
        }
    }
    return g;
}

PlanPtr build_unbr(int n, int d, const Tamper &tamper) {
    check_unb_args(n, d);
    int n0 = chain_start(d);
    if (n < n0) {
        throw Error(ErrorCode::DomainError, "no recursive routine below the chain start n = " + std::to_string(n0));
    }
    if (!tamper.empty()) {
        return n == n0 ? (d == 3 ? build_unbr_5_3(tamper) : unbr_base(d)) : unbr_step(n, d, tamper);
    }
    return memoized(key_of("unbr", {n, d}), [n, d, n0] {
        if (n == n0) {
            return d == 3 ? build_unbr_5_3() : unbr_base(d);
        }
        return unbr_step(n, d, Tamper{});
    });
}

PlanPtr build_unb(int n, int d, const Tamper &tamper) {
    check_unb_args(n, d);
    chain_base(d);
    PlanInfo info{"unb", {{"n", n}, {"d", d}}, n, unb_claim(n, d), false};
    if (n == d) {
        return rename(build_equality(n), info);
    }
    auto make = [n, d, tamper, info]() {
        const double gamma = unbr_gamma(n, d);
        PlanInfo out = info;
        out.params["gamma"] = gamma;
        const double g = tamper("gamma", gamma);
        if (!(g >= 0 && g <= 1)) {
            throw Error(ErrorCode::DivergedChain, "gamma outside [0,1]");
        }
        std::vector<Step> steps{
            PrepareStep{uniform_indices(n)},
            QueryStep{last_index_rule()},
            gadget(completed_u(n), bindings::plain()),
            gadget(shared(r_rotation(std::asin(std::sqrt(g)))), bindings::pair_tags()),
        };
        auto r_pair = [](const Label &lab) -> std::optional<Label> {
            if (lab.size() == 2 && lab[0].kind == PartKind::Pair && lab[1].kind == PartKind::TagR) {
                return Label{lab[0]};
            }
            return std::nullopt;
        };
        auto rest = [](const Label &lab) -> std::optional<Label> {
            if (lab.is(PartKind::S) ||
                (lab.size() == 2 && lab[0].kind == PartKind::Pair && lab[1].kind == PartKind::TagL)) {
                return Label{};
            }
            return std::nullopt;
        };
        Tamper inner = tamper;
        inner.delta.erase("gamma");
        NodePtr smaller = call_node("drop pair", build_unb(n - 2, d), remap_remove_pair(), discard());
        NodePtr handed = call_node("recursive routine", build_unbr(n, d, inner), remap_keep_all(), transform([](const Label &lab) {
                                       return lab.size() == 2 ? Label{lab[0]} : lab;
                                   }));
        NodePtr root = make_node(
            "unb n=" + std::to_string(n), std::move(steps),
            MeasureTerm{MeasurementPartition{{{"R", r_pair}, {"rest", rest}}}, {smaller, handed}});
        return make_plan(std::move(out), root);
    };
    if (!tamper.empty()) {
        return make();
    }
    return memoized(key_of("unb", {n, d}), make);
}

PlanPtr build_equality(int n) {
    if (n < 1) {
        throw Error(ErrorCode::DomainError, "equality needs n >= 1");
    }
    return memoized(key_of("equality", {n}), [n] {
        PlanInfo info{"equality", {{"n", n}}, n, n - 1, false};
        if (n == 1) {
            return make_plan(std::move(info), output_node(true));
        }
        const double h = 1.0 / std::sqrt(2.0);
        std::vector<Step> steps{
            PrepareStep{LabeledState{{Label{Part::index(1)}, h}, {Label{Part::index(2)}, h}}},
            QueryStep{last_index_rule()},
            gadget(completed_u(2), bindings::plain()),
        };
        NodePtr rest = call_node("drop first", build_equality(n - 1), remap_drop_prefix(1), discard());
        NodePtr root = make_node(
            "equality n=" + std::to_string(n), std::move(steps),
            MeasureTerm{sum_or_pair(), {rest, output_node(false)}});
        return make_plan(std::move(info), root);
    });
}

PlanPtr build_xor2() {
    return memoized("xor2", [] {
        const double h = 1.0 / std::sqrt(2.0);
        std::vector<Step> steps{
            PrepareStep{LabeledState{{Label{Part::index(1)}, h}, {Label{Part::index(2)}, h}}},
            QueryStep{last_index_rule()},
            gadget(completed_u(2), bindings::plain()),
        };
        NodePtr root =
            make_node("xor", std::move(steps), MeasureTerm{sum_or_pair(), {output_node(false), output_node(true)}});
        return make_plan(PlanInfo{"xor", {{"n", 2}}, 2, 1, false}, root);
    });
}

PlanPtr build_constant(int n, bool value) {
    if (n < 0) {
        throw Error(ErrorCode::DomainError, "constant needs n >= 0");
    }
    return make_plan(PlanInfo{"constant", {{"n", n}, {"value", value}}, n, 0, false}, output_node(value));
}

PlanPtr build_exact_k(int n, int k) {
    if (n < 1 || k < 0 || k > n) {
        throw Error(ErrorCode::DomainError, "exact_k needs n >= 1 and 0 <= k <= n");
    }
    return memoized(key_of("exactk", {n, k}), [n, k] {
        int ones = std::max(0, n - 2 * k);
        int zeros = std::max(0, 2 * k - n);
        PlanInfo info{"exactk", {{"n", n}, {"k", k}}, n, std::max(k, n - k), false, true};
        PlanPtr inner = balanced(n + ones + zeros);
        if (ones == 0 && zeros == 0) {
            return rename(inner, info);
        }
        return make_plan(std::move(info), call_node("pad", inner, remap_keep_all(ones, zeros), discard()));
    });
}

StepFragment unbalance_step(int n, int d) {
    if (d < 1 || d > n || (n - d) % 2 != 0) {
        throw Error(ErrorCode::DomainError, "unbalance step needs 1 <= d <= n and d = n mod 2");
    }
    return ancilla_step(n, static_cast<double>(d) / n, false, 0, 0);
}

StepFragment uw_step(int n, int u, int w) {
    if (u <= 0 || w <= 0) {
        throw Error(ErrorCode::DomainError, "u and w must both be positive");
    }
    if (u > n || w > n || (n - u) % 2 != 0 || (n - w) % 2 != 0) {
        throw Error(ErrorCode::DomainError, "need u, w <= n and u = w = n mod 2");
    }
    return ancilla_step(n, std::sqrt(static_cast<double>(u) * w) / n, true, u, w);
}

NodePtr attach(std::string name, const StepFragment &fragment, std::vector<NodePtr> children) {
    if (children.size() != fragment.partition.outcomes.size()) {
        throw Error(ErrorCode::InvalidArgument, "one child per outcome is required");
    }
    return make_node(std::move(name), fragment.steps, MeasureTerm{fragment.partition, std::move(children)});
}

PlanPtr build_general_unbalance(int n, int k) {
    if (n < 1 || k < 0 || n - 2 * k < 1) {
        throw Error(ErrorCode::DomainError, "general unbalance needs n >= 1 and 0 <= k < n/2");
    }
    return memoized(key_of("general", {n, k}), [n, k] {
        PlanInfo info{"general", {{"n", n}, {"k", k}}, n, n - k + 1, false};
        if (k == 0) {
            return rename(build_equality(n), info);
        }
        auto whole = remap_keep_all();
        NodePtr root = attach(
            "general n=" + std::to_string(n), unbalance_step(n, n - 2 * k),
            {
                call_node("drop pair", build_general_unbalance(n - 2, k - 1), remap_remove_pair(), discard()),
                call_node("exact k", build_exact_k(n, k), whole, discard()),
                call_node("exact n-k", build_exact_k(n, n - k), whole, discard()),
            });
        return make_plan(std::move(info), root);
    });
}

PlanPtr build_exact_kl(int n, int k, int l) {
    if (n < 1 || k < 0 || k > l || l > n) {
        throw Error(ErrorCode::DomainError, "exact_kl needs 0 <= k <= l <= n");
    }
    const int d = l - k;
    const int m = std::max(n - k, l);
    if (d == 0) {
        PlanPtr p = build_exact_k(n, k);
        return rename(p, PlanInfo{"exactkl", {{"n", n}, {"k", k}, {"l", l}}, n, p->info.claimed_queries, false});
    }
    if (k == 0 && l == n) {
        return rename(build_equality(n), PlanInfo{"exactkl", {{"n", n}, {"k", k}, {"l", l}}, n, n - 1, false});
    }
    int ones = std::max(0, n - k - l);
    int zeros = std::max(0, l + k - n);
    int padded = n + ones + zeros;
    int claimed = d == 1 ? m : d <= 3 ? m - 1 : m + 1;
    PlanInfo info{"exactkl", {{"n", n}, {"k", k}, {"l", l}}, n, claimed, false};
    PlanPtr inner = d <= 3 ? build_unb(padded, d) : build_general_unbalance(padded, k + ones);
    if (ones == 0 && zeros == 0) {
        return rename(inner, info);
    }
    return make_plan(std::move(info), call_node("pad", inner, remap_keep_all(ones, zeros), discard()));
}

PlanPtr build_unbr_5_3(const Tamper &tamper) {
    FiveThreeConstants k = five_three_constants();
    auto a = [&](int i) {
        return tamper("a" + std::to_string(i), k[i]);
    };
    const double r3 = std::sqrt(3.0), r5 = std::sqrt(5.0);
    auto outer = bindings::outer(OuterIndex::WithSum);
    auto inner = bindings::inner(5, InnerIndex::IndexThenPair);
    std::vector<Step> steps{
        gadget(shared(r_rotation_toward(a(2) * (a(3) - 1) / r5, r3 * a(4))), bindings::pair_tags()),
        gadget(completed_u_dagger(5), outer),
        gadget(completed_u_dagger(3), inner),
        QueryStep{first_index_rule()},
        gadget(completed_u(5), outer),
        gadget(completed_u(3), inner),
        gadget(shared_adjoint(r_rotation_toward(a(2) / r5, a(4) / r3)), bindings::pair_tags()),
        gadget(shared(r_rotation_toward(a(9) * (1 - a(10)) / r5, a(12) * (2 + a(13)) / r3)), bindings::pair_tags()),
        gadget(completed_u_dagger(5), outer),
        gadget(completed_u_dagger(3), inner),
        QueryStep{first_index_rule()},
        gadget(completed_u(5), outer),
        gadget(completed_u(3), inner),
        gadget(shared_adjoint(r_rotation_toward(a(9) * a(10) / r5, 2 * a(12) / r3)), bindings::pair_tags()),
    };
    auto single_pair = [](const Label &g) -> std::optional<Label> {
        return g.is(PartKind::Pair) ? std::optional<Label>(g) : std::nullopt;
    };
    auto quad = [](const Label &g) -> std::optional<Label> {
        return g.is(PartKind::Quad) ? std::optional<Label>(g) : std::nullopt;
    };
    auto other = [](const Label &g) -> std::optional<Label> {
        if (g.is(PartKind::S) || g.is(PartKind::Pair) || g.is(PartKind::Quad)) {
            return std::nullopt;
        }
        return g;
    };
    MeasurementPartition final_measure{{{"S", only_sum}, {"pair", single_pair}, {"quad", quad}, {"other", other}}};
    NodePtr root = make_node(
        "unbr n=5 d=3", std::move(steps),
        MeasureTerm{
            std::move(final_measure), {output_node(false), output_node(true), output_node(false), output_node(false)}});
    PlanInfo info{"unbr", {{"n", 5}, {"d", 3}, {"gamma", 1.0 / 112}}, 5, 2, true};
    return make_plan(std::move(info), root);
}

LabeledState unbr_entry_state(const std::vector<uint8_t> &x, double gamma) {
    const int n = static_cast<int>(x.size());
    Amplitudes amps;
    auto hat = [&](int i) {
        return x[i - 1] ? -1.0 : 1.0;
    };
    double sum = 0;
    for (int i = 1; i <= n; i++) {
        sum += hat(i);
    }
    amps[Label{Part::sum()}] = sum;
    const double g = std::sqrt(gamma);
    for (int i = 1; i <= n; i++) {
        for (int j = i + 1; j <= n; j++) {
            amps[Label{Part::pair(i, j)}] = g * (hat(i) - hat(j));
        }
    }
    return LabeledState(std::move(amps));
}

}  // namespace exactq
