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

#include "exactq/label.hpp"

#include <ostream>

#include "exactq/error.hpp"

namespace exactq {

namespace {

uint8_t checked_index(int i) {
    if (i < 1 || i > 255) {
        throw Error(ErrorCode::InvalidArgument, "variable index out of label range: " + std::to_string(i));
    }
    return static_cast<uint8_t>(i);
}

}  // namespace

Part Part::scratch0() {
    return Part{};
}

Part Part::sum() {
    return Part{PartKind::S, {}};
}

Part Part::index(int i) {
    return Part{PartKind::Index, {checked_index(i), 0, 0, 0}};
}

Part Part::pair(int i, int j) {
    if (i >= j) {
        throw Error(ErrorCode::InvalidArgument, "pair label needs i < j");
    }
    return Part{PartKind::Pair, {checked_index(i), checked_index(j), 0, 0}};
}

Part Part::quad(int i, int j, int k, int l) {
    if (i >= j || k >= l || i == k || i == l || j == k || j == l) {
        throw Error(ErrorCode::InvalidArgument, "quad label needs i<j, k<l and disjoint pairs");
    }
    return Part{PartKind::Quad, {checked_index(i), checked_index(j), checked_index(k), checked_index(l)}};
}

Part Part::ancilla(int bit) {
    if (bit != 0 && bit != 1) {
        throw Error(ErrorCode::InvalidArgument, "ancilla bit must be 0 or 1");
    }
    return Part{PartKind::Ancilla, {static_cast<uint8_t>(bit), 0, 0, 0}};
}

Part Part::tag_l() {
    return Part{PartKind::TagL, {}};
}

Part Part::tag_r() {
    return Part{PartKind::TagR, {}};
}

int Part::arity() const {
    switch (kind) {
        case PartKind::Index:
            return 1;
        case PartKind::Pair:
            return 2;
        case PartKind::Quad:
            return 4;
        default:
            return 0;
    }
}

std::string Part::str() const {
    switch (kind) {
        case PartKind::Scratch0:
            return "0";
        case PartKind::S:
            return "S";
        case PartKind::Index:
            return std::to_string(idx[0]);
        case PartKind::Pair:
            return "(" + std::to_string(idx[0]) + "," + std::to_string(idx[1]) + ")";
        case PartKind::Quad:
            return "(" + std::to_string(idx[0]) + "," + std::to_string(idx[1]) + "," + std::to_string(idx[2]) + "," +
                   std::to_string(idx[3]) + ")";
        case PartKind::Ancilla:
            return "a" + std::to_string(idx[0]);
        case PartKind::TagL:
            return "L";
        case PartKind::TagR:
            return "R";
    }
    return "?";
}

Label::Label(std::initializer_list<Part> parts) {
    if (parts.size() > kMaxParts) {
        throw Error(ErrorCode::InvalidArgument, "label has too many parts");
    }
    for (const auto &p : parts) {
        parts_[size_++] = p;
    }
}

Label::Label(const Part &part) : Label({part}) {
}

Label Label::with(const Part &part) const {
    if (size_ >= kMaxParts) {
        throw Error(ErrorCode::InvalidArgument, "label has too many parts");
    }
    Label out = *this;
    out.parts_[out.size_++] = part;
    return out;
}

Label Label::operator+(const Label &other) const {
    Label out = *this;
    for (int k = 0; k < other.size_; k++) {
        out = out.with(other.parts_[k]);
    }
    return out;
}

Label Label::slice(int start, int count) const {
    Label out;
    for (int k = start; k < start + count && k < size_; k++) {
        out = out.with(parts_[k]);
    }
    return out;
}

std::string Label::str() const {
    if (size_ == 0) {
        return "<>";
    }
    std::string out;
    for (int k = 0; k < size_; k++) {
        if (k) {
            out += '|';
        }
        out += parts_[k].str();
    }
    return out;
}

std::ostream &operator<<(std::ostream &out, const Label &label) {
    return out << label.str();
}

}  // namespace exactq
