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

#include "exactq/state.hpp"

#include <cmath>
#include <sstream>

namespace exactq {

LabeledState::LabeledState(Amplitudes amplitudes, double store_epsilon) : amps_(std::move(amplitudes)) {
    std::erase_if(amps_, [&](const auto &kv) {
        return std::abs(kv.second) < store_epsilon;
    });
}

LabeledState::LabeledState(std::initializer_list<std::pair<const Label, amp_t>> init) : LabeledState(Amplitudes(init)) {
}

LabeledState LabeledState::scalar(amp_t value) {
    return LabeledState(Amplitudes{{Label{Part::scratch0()}, value}});
}

amp_t LabeledState::amplitude(const Label &label) const {
    auto it = amps_.find(label);
    return it == amps_.end() ? amp_t{0.0} : it->second;
}

std::vector<Label> LabeledState::support() const {
    std::vector<Label> out;
    out.reserve(amps_.size());
    for (const auto &[label, _] : amps_) {
        out.push_back(label);
    }
    return out;
}

double LabeledState::squared_norm() const {
    double total = 0;
    for (const auto &[_, a] : amps_) {
        total += std::norm(a);
    }
    return total;
}

LabeledState LabeledState::scaled(amp_t factor) const {
    Amplitudes out = amps_;
    for (auto &[_, a] : out) {
        a *= factor;
    }
    return LabeledState(std::move(out));
}

LabeledState LabeledState::normalized() const {
    double n2 = squared_norm();
    if (n2 == 0) {
        return *this;
    }
    return scaled(1.0 / std::sqrt(n2));
}

std::string LabeledState::str() const {
    std::ostringstream out;
    bool first = true;
    for (const auto &[label, a] : amps_) {
        if (!first) {
            out << " + ";
        }
        first = false;
        out << "(" << a.real();
        if (a.imag() != 0) {
            out << (a.imag() < 0 ? "-" : "+") << std::abs(a.imag()) << "i";
        }
        out << ")|" << label.str() << ">";
    }
    return first ? "0" : out.str();
}

double squared_norm(const LabeledState &state) {
    return state.squared_norm();
}

amp_t inner(const LabeledState &a, const LabeledState &b) {
    amp_t total = 0;
    for (const auto &[label, x] : a) {
        total += std::conj(x) * b.amplitude(label);
    }
    return total;
}

LabeledState add(const LabeledState &a, const LabeledState &b, amp_t scale_b) {
    Amplitudes out = a.amplitudes();
    for (const auto &[label, x] : b) {
        out[label] += scale_b * x;
    }
    return LabeledState(std::move(out));
}

double max_difference(const LabeledState &a, const LabeledState &b) {
    double worst = 0;
    for (const auto &[label, x] : a) {
        worst = std::max(worst, std::abs(x - b.amplitude(label)));
    }
    for (const auto &[label, y] : b) {
        if (!a.contains(label)) {
            worst = std::max(worst, std::abs(y));
        }
    }
    return worst;
}

}  // namespace exactq
