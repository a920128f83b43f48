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

#ifndef EXACTQ_STATE_HPP
#define EXACTQ_STATE_HPP

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "exactq/label.hpp"

namespace exactq {

using amp_t = std::complex<double>;
using Amplitudes = std::map<Label, amp_t>;

/// Amplitudes below this magnitude are dropped from stored states.
constexpr double kStoreEpsilon = 1e-13;
/// Outcomes whose relative squared norm is below this are unreachable.
constexpr double kBranchEpsilon = 1e-9;
/// Tolerance on unitarity and isometry checks.
constexpr double kUnitarityTolerance = 1e-12;

/// Immutable sparse vector over basis labels, kept in canonical label order.
class LabeledState {
   public:
    LabeledState() = default;
    explicit LabeledState(Amplitudes amplitudes, double store_epsilon = kStoreEpsilon);
    LabeledState(std::initializer_list<std::pair<const Label, amp_t>> init);

    /// The one-label state |0>.
    static LabeledState scalar(amp_t value = 1.0);

    amp_t amplitude(const Label &label) const;
    bool contains(const Label &label) const {
        return amps_.count(label) > 0;
    }
    std::vector<Label> support() const;
    size_t size() const {
        return amps_.size();
    }
    bool empty() const {
        return amps_.empty();
    }
    double squared_norm() const;

    LabeledState scaled(amp_t factor) const;
    /// Unit-norm copy; the zero state stays zero.
    LabeledState normalized() const;

    const Amplitudes &amplitudes() const {
        return amps_;
    }
    auto begin() const {
        return amps_.begin();
    }
    auto end() const {
        return amps_.end();
    }

    std::string str() const;

   private:
    Amplitudes amps_;
};

double squared_norm(const LabeledState &state);
/// <a|b>
amp_t inner(const LabeledState &a, const LabeledState &b);
LabeledState add(const LabeledState &a, const LabeledState &b, amp_t scale_b = 1.0);
/// max |a_L - b_L| over labels.
double max_difference(const LabeledState &a, const LabeledState &b);

}  // namespace exactq

#endif
