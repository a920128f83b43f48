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

#include "exactq/isometry.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "exactq/error.hpp"

namespace exactq {

namespace {

using Dense = std::vector<amp_t>;

amp_t dot(const Dense &a, const Dense &b) {
    amp_t total = 0;
    for (size_t k = 0; k < a.size(); k++) {
        total += std::conj(a[k]) * b[k];
    }
    return total;
}

double dense_norm(const Dense &v) {
    return std::sqrt(std::real(dot(v, v)));
}

}  // namespace

IsometryGadget::IsometryGadget(
    std::string name, std::vector<Label> inputs, std::map<Label, LabeledState> columns, std::vector<Label> extra_space)
    : name_(std::move(name)), inputs_(std::move(inputs)) {
    std::set<Label> all(inputs_.begin(), inputs_.end());
    if (all.size() != inputs_.size()) {
        throw Error(ErrorCode::InvalidArgument, name_ + ": duplicate input label");
    }
    for (const auto &in : inputs_) {
        auto it = columns.find(in);
        if (it == columns.end()) {
            throw Error(ErrorCode::InvalidArgument, name_ + ": missing column for " + in.str());
        }
        for (const auto &[out, _] : it->second) {
            all.insert(out);
        }
    }
    all.insert(extra_space.begin(), extra_space.end());
    space_.assign(all.begin(), all.end());
    index_space();
    cols_.assign(space_.size(), {});
    defined_.assign(space_.size(), false);
    for (const auto &in : inputs_) {
        int c = position_.at(in);
        defined_[c] = true;
        for (const auto &[out, a] : columns.at(in)) {
            cols_[c].emplace_back(position_.at(out), a);
        }
    }
    double residual = unitarity_residual();
    if (residual > kUnitarityTolerance) {
        throw Error(
            ErrorCode::NotIsometry, name_ + ": columns are not orthonormal (residual " + std::to_string(residual) + ")");
    }
}

void IsometryGadget::index_space() {
    position_.clear();
    for (size_t k = 0; k < space_.size(); k++) {
        position_[space_[k]] = static_cast<int>(k);
    }
}

int IsometryGadget::space_index(const Label &label) const {
    auto it = position_.find(label);
    return it == position_.end() ? -1 : it->second;
}

LabeledState IsometryGadget::image(const Label &local) const {
    int c = space_index(local);
    if (c < 0 || !defined_[c]) {
        throw Error(ErrorCode::UnspecifiedInput, name_ + ": no column for " + local.str());
    }
    Amplitudes out;
    for (const auto &[r, a] : cols_[c]) {
        out[space_[r]] += a;
    }
    return LabeledState(std::move(out), 0.0);
}

double IsometryGadget::unitarity_residual() const {
    std::vector<Dense> dense;
    for (size_t c = 0; c < space_.size(); c++) {
        if (!defined_[c]) {
            continue;
        }
        Dense v(space_.size(), 0.0);
        for (const auto &[r, a] : cols_[c]) {
            v[r] += a;
        }
        dense.push_back(std::move(v));
    }
    double worst = 0;
    for (size_t a = 0; a < dense.size(); a++) {
        for (size_t b = a; b < dense.size(); b++) {
            amp_t g = dot(dense[a], dense[b]);
            worst = std::max(worst, std::abs(g - (a == b ? 1.0 : 0.0)));
        }
    }
    return worst;
}

IsometryGadget IsometryGadget::adjoint() const {
    if (!completed_) {
        throw Error(ErrorCode::InvalidArgument, name_ + ": adjoint needs a completed gadget");
    }
    IsometryGadget out;
    out.name_ = name_ + "^dag";
    out.space_ = space_;
    out.inputs_ = space_;
    out.index_space();
    out.cols_.assign(space_.size(), {});
    out.defined_.assign(space_.size(), true);
    for (size_t c = 0; c < space_.size(); c++) {
        for (const auto &[r, a] : cols_[c]) {
            out.cols_[r].emplace_back(static_cast<int>(c), std::conj(a));
        }
    }
    for (auto &col : out.cols_) {
        std::sort(col.begin(), col.end(), [](const auto &x, const auto &y) {
            return x.first < y.first;
        });
    }
    out.completed_ = true;
    return out;
}

IsometryGadget complete_isometry(const IsometryGadget &gadget) {
    if (gadget.completed_) {
        return gadget;
    }
    const size_t dim = gadget.space_.size();
    std::vector<Dense> basis;
    for (size_t c = 0; c < dim; c++) {
        if (!gadget.defined_[c]) {
            continue;
        }
        Dense v(dim, 0.0);
        for (const auto &[r, a] : gadget.cols_[c]) {
            v[r] += a;
        }
        basis.push_back(std::move(v));
    }
    std::vector<Dense> extra;
    for (size_t k = 0; k < dim && basis.size() < dim; k++) {
        Dense v(dim, 0.0);
        v[k] = 1.0;
        for (int pass = 0; pass < 2; pass++) {
            for (const auto &b : basis) {
                amp_t p = dot(b, v);
                for (size_t r = 0; r < dim; r++) {
                    v[r] -= p * b[r];
                }
            }
        }
        double nv = dense_norm(v);
        if (nv < 1e-6) {
            continue;
        }
        for (auto &x : v) {
            x /= nv;
        }
        basis.push_back(v);
        extra.push_back(std::move(v));
    }
    IsometryGadget out = gadget;
    size_t next = 0;
    for (size_t c = 0; c < dim; c++) {
        if (out.defined_[c]) {
            continue;
        }
        const Dense &v = extra.at(next++);
        for (size_t r = 0; r < dim; r++) {
            if (std::abs(v[r]) > 1e-15) {
                out.cols_[c].emplace_back(static_cast<int>(r), v[r]);
            }
        }
        out.defined_[c] = true;
    }
    out.completed_ = true;
    return out;
}

Binding Binding::whole(std::function<bool(const Label &)> accepts) {
    return Binding{
        [accepts](const Label &g) -> std::optional<BoundLabel> {
            if (!accepts(g)) {
                return std::nullopt;
            }
            return BoundLabel{g, Label{}};
        },
        [](const Label &local, const Label &) {
            return local;
        },
    };
}

LabeledState apply_isometry(const LabeledState &state, const IsometryGadget &gadget, const Binding &binding) {
    Amplitudes out;
    std::set<Label> untouched;
    std::map<std::pair<Label, Label>, Label> seen;
    std::set<Label> produced;
    for (const auto &[label, amp] : state) {
        auto bound = binding.match(label);
        if (!bound) {
            out[label] += amp;
            untouched.insert(label);
            continue;
        }
        int c = gadget.space_index(bound->local);
        if (c < 0) {
            throw Error(
                ErrorCode::BindingConflict, gadget.name() + ": " + label.str() + " binds outside the gadget space");
        }
        auto key = std::make_pair(bound->local, bound->context);
        auto [it, fresh] = seen.emplace(key, label);
        if (!fresh) {
            throw Error(
                ErrorCode::BindingConflict,
                gadget.name() + ": " + label.str() + " and " + it->second.str() + " bind to the same local label");
        }
        if (!gadget.has_column(c)) {
            throw Error(ErrorCode::UnspecifiedInput, gadget.name() + ": no column for " + bound->local.str());
        }
        for (const auto &[r, coef] : gadget.sparse_column(c)) {
            Label g = binding.embed(gadget.space()[r], bound->context);
            out[g] += amp * coef;
            produced.insert(g);
        }
    }
    for (const auto &g : produced) {
        if (untouched.count(g)) {
            throw Error(ErrorCode::BindingConflict, gadget.name() + ": output " + g.str() + " collides with a spectator");
        }
    }
    return LabeledState(std::move(out));
}

}  // namespace exactq
