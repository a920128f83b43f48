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

#ifndef EXACTQ_ISOMETRY_HPP
#define EXACTQ_ISOMETRY_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exactq/state.hpp"

namespace exactq {

/// A partial isometry specified column by column, optionally completed to a unitary
/// on the span of every label it mentions.
class IsometryGadget {
   public:
    using SparseColumn = std::vector<std::pair<int, amp_t>>;

    IsometryGadget(
        std::string name,
        std::vector<Label> inputs,
        std::map<Label, LabeledState> columns,
        std::vector<Label> extra_space = {});

    const std::string &name() const {
        return name_;
    }
    const std::vector<Label> &inputs() const {
        return inputs_;
    }
    /// Local label space in canonical order.
    const std::vector<Label> &space() const {
        return space_;
    }
    int dimension() const {
        return static_cast<int>(space_.size());
    }
    bool completed() const {
        return completed_;
    }
    /// Position of a local label in space(), or -1.
    int space_index(const Label &label) const;
    bool has_column(int space_idx) const {
        return !cols_[space_idx].empty() || defined_[space_idx];
    }
    const SparseColumn &sparse_column(int space_idx) const {
        return cols_[space_idx];
    }
    /// Image of a local basis label as a state.
    LabeledState image(const Label &local) const;

    /// U^dagger of a completed gadget.
    IsometryGadget adjoint() const;
    /// max |G^dagger G - I| over the defined columns.
    double unitarity_residual() const;

    friend IsometryGadget complete_isometry(const IsometryGadget &gadget);

   private:
    IsometryGadget() = default;
    void index_space();

    std::string name_;
    std::vector<Label> inputs_;
    std::vector<Label> space_;
    std::map<Label, int> position_;
    std::vector<SparseColumn> cols_;
    std::vector<bool> defined_;
    bool completed_ = false;
};

/// Deterministic unitary completion: Gram-Schmidt on the standard basis in canonical
/// label order, against the specified columns. Specified columns are kept exactly.
IsometryGadget complete_isometry(const IsometryGadget &gadget);

struct BoundLabel {
    Label local;
    Label context;
};

/// Maps global labels to (gadget-local label, context) and back.
/// Labels that do not match are left untouched by the gadget.
struct Binding {
    std::function<std::optional<BoundLabel>(const Label &)> match;
    std::function<Label(const Label &local, const Label &context)> embed;

    /// Binds labels accepted by the predicate to themselves with empty context.
    static Binding whole(std::function<bool(const Label &)> accepts);
};

LabeledState apply_isometry(const LabeledState &state, const IsometryGadget &gadget, const Binding &binding);

}  // namespace exactq

#endif
