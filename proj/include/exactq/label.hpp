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

#ifndef EXACTQ_LABEL_HPP
#define EXACTQ_LABEL_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>

namespace exactq {

/// Kinds are declared in canonical order; labels sort by kind first.
enum class PartKind : uint8_t {
    Scratch0,
    S,
    Index,
    Pair,
    Quad,
    Ancilla,
    TagL,
    TagR,
};

/// One register of a basis label, e.g. |S>, |i>, |ij>, |ijkl>, an ancilla bit or an L/R tag.
struct Part {
    PartKind kind = PartKind::Scratch0;
    std::array<uint8_t, 4> idx{};

    static Part scratch0();
    static Part sum();
    static Part index(int i);
    static Part pair(int i, int j);
    static Part quad(int i, int j, int k, int l);
    static Part ancilla(int bit);
    static Part tag_l();
    static Part tag_r();

    /// Number of meaningful entries in idx.
    int arity() const;
    std::string str() const;

    auto operator<=>(const Part &) const = default;
    bool operator==(const Part &) const = default;
};

/// Basis label: a short product of registers. Inline storage, totally ordered.
class Label {
   public:
    static constexpr int kMaxParts = 3;

    Label() = default;
    Label(std::initializer_list<Part> parts);
    explicit Label(const Part &part);

    int size() const {
        return size_;
    }
    bool empty() const {
        return size_ == 0;
    }
    const Part &operator[](int k) const {
        return parts_[k];
    }
    const Part &front() const {
        return parts_[0];
    }
    const Part &back() const {
        return parts_[size_ - 1];
    }

    /// Label with `part` appended.
    Label with(const Part &part) const;
    /// Concatenation.
    Label operator+(const Label &other) const;
    /// Parts [start, start + count).
    Label slice(int start, int count) const;

    /// Single-part label of the given kind?
    bool is(PartKind kind) const {
        return size_ == 1 && parts_[0].kind == kind;
    }

    std::string str() const;

    auto operator<=>(const Label &) const = default;
    bool operator==(const Label &) const = default;

   private:
    std::array<Part, kMaxParts> parts_{};
    uint8_t size_ = 0;
};

std::ostream &operator<<(std::ostream &out, const Label &label);

}  // namespace exactq

#endif
