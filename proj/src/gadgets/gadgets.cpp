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

#include "exactq/gadgets.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "exactq/error.hpp"

namespace exactq {

IsometryGadget u_gadget(int n) {
    if (n < 1) {
        throw Error(ErrorCode::InvalidArgument, "U_n needs n >= 1");
    }
    const double s = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<Label> inputs;
    std::map<Label, LabeledState> columns;
    for (int i = 1; i <= n; i++) {
        Amplitudes col;
        col[Label{Part::sum()}] = s;
        for (int j = 1; j < i; j++) {
            col[Label{Part::pair(j, i)}] = -s;
        }
        for (int j = i + 1; j <= n; j++) {
            col[Label{Part::pair(i, j)}] = s;
        }
        Label in{Part::index(i)};
        inputs.push_back(in);
        columns.emplace(in, LabeledState(std::move(col), 0.0));
    }
    std::vector<Label> extra{Label{Part::sum()}};
    return IsometryGadget("U_" + std::to_string(n), std::move(inputs), std::move(columns), std::move(extra));
}

namespace {

template <typename Make>
std::shared_ptr<const IsometryGadget> cached(std::map<int, std::shared_ptr<const IsometryGadget>> &cache, int n, Make make) {
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) {
        return it->second;
    }
    auto g = std::make_shared<const IsometryGadget>(make());
    cache.emplace(n, g);
    return g;
}

}  // namespace

std::shared_ptr<const IsometryGadget> completed_u(int n) {
    static std::map<int, std::shared_ptr<const IsometryGadget>> cache;
    return cached(cache, n, [n] {
        return complete_isometry(u_gadget(n));
    });
}

std::shared_ptr<const IsometryGadget> completed_u_dagger(int n) {
    static std::map<int, std::shared_ptr<const IsometryGadget>> cache;
    auto u = completed_u(n);
    return cached(cache, n, [&u] {
        return u->adjoint();
    });
}

IsometryGadget r_rotation(double alpha) {
    Label zero{Part::scratch0()};
    std::map<Label, LabeledState> columns;
    columns.emplace(
        zero, LabeledState(Amplitudes{{Label{Part::tag_l()}, std::sin(alpha)}, {Label{Part::tag_r()}, std::cos(alpha)}}, 0.0));
    return IsometryGadget(
        "R", {zero}, std::move(columns), {zero, Label{Part::tag_l()}, Label{Part::tag_r()}});
}

IsometryGadget r_rotation_toward(double l, double r) {
    if (l == 0 && r == 0) {
        throw Error(ErrorCode::InvalidArgument, "R direction is the zero vector");
    }
    return r_rotation(std::atan2(l, r));
}

IsometryGadget q_rotation(double u, double w) {
    if (!(u > 0) || !(w > 0)) {
        throw Error(ErrorCode::DomainError, "Q(u,w) needs u > 0 and w > 0");
    }
    const double su = std::sqrt(u / (u + w));
    const double sw = std::sqrt(w / (u + w));
    Label a0{Part::ancilla(0)};
    Label a1{Part::ancilla(1)};
    std::map<Label, LabeledState> columns;
    columns.emplace(a0, LabeledState(Amplitudes{{a0, su}, {a1, sw}}, 0.0));
    columns.emplace(a1, LabeledState(Amplitudes{{a0, -sw}, {a1, su}}, 0.0));
    return IsometryGadget("Q", {a0, a1}, std::move(columns));
}

IsometryGadget hadamard() {
    const double h = 1.0 / std::sqrt(2.0);
    Label a0{Part::ancilla(0)};
    Label a1{Part::ancilla(1)};
    std::map<Label, LabeledState> columns;
    columns.emplace(a0, LabeledState(Amplitudes{{a0, h}, {a1, h}}, 0.0));
    columns.emplace(a1, LabeledState(Amplitudes{{a0, h}, {a1, -h}}, 0.0));
    return IsometryGadget("H", {a0, a1}, std::move(columns));
}

IndexRule last_index_rule() {
    return [](const Label &label) -> std::optional<int> {
        for (int k = label.size() - 1; k >= 0; k--) {
            if (label[k].kind == PartKind::Index) {
                return label[k].idx[0];
            }
        }
        return std::nullopt;
    };
}

IndexRule first_index_rule() {
    return [](const Label &label) -> std::optional<int> {
        if (label.size() > 0 && label[0].kind == PartKind::Index) {
            return label[0].idx[0];
        }
        return std::nullopt;
    };
}

IndexRule ancilla_index_rule() {
    return [](const Label &label) -> std::optional<int> {
        if (label.size() == 2 && label[0] == Part::ancilla(1) && label[1].kind == PartKind::Index) {
            return label[1].idx[0];
        }
        return std::nullopt;
    };
}

LabeledState oracle_apply(const LabeledState &state, const OracleInput &x, const IndexRule &rule) {
    Amplitudes out;
    for (const auto &[label, a] : state) {
        auto i = rule(label);
        if (!i) {
            out[label] = a;
            continue;
        }
        if (*i < 1 || *i > x.size()) {
            throw Error(
                ErrorCode::IndexOutOfRange,
                "oracle index " + std::to_string(*i) + " outside 1.." + std::to_string(x.size()));
        }
        out[label] = x.bits[*i - 1] ? -a : a;
    }
    return LabeledState(std::move(out), 0.0);
}

}  // namespace exactq
