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

#include "bindings.hpp"

#include "exactq/error.hpp"

namespace exactq::bindings {

namespace {

bool is_data(const Part &p) {
    return p.kind == PartKind::S || p.kind == PartKind::Index || p.kind == PartKind::Pair;
}

const Label kZero{Part::scratch0()};
const Label kL{Part::tag_l()};
const Label kR{Part::tag_r()};

}  // namespace

int rank_without(int l, int i, int j) {
    return l - (l > i) - (l > j);
}

int unrank_without(int r, int i, int j) {
    int l = r;
    if (l >= i) {
        l++;
    }
    if (l >= j) {
        l++;
    }
    return l;
}

Binding plain() {
    return Binding::whole([](const Label &g) {
        return g.size() == 1 && is_data(g[0]);
    });
}

namespace {

Binding pair_tags_with(bool sum_as_zero) {
    return Binding{
        [sum_as_zero](const Label &g) -> std::optional<BoundLabel> {
            if (g.size() == 0 || g[0].kind != PartKind::Pair) {
                return std::nullopt;
            }
            Label ctx{g[0]};
            if (g.size() == 1) {
                return sum_as_zero ? std::nullopt : std::optional<BoundLabel>(BoundLabel{kZero, ctx});
            }
            if (g.size() != 2) {
                return std::nullopt;
            }
            switch (g[1].kind) {
                case PartKind::TagL:
                    return BoundLabel{kL, ctx};
                case PartKind::TagR:
                    return BoundLabel{kR, ctx};
                case PartKind::S:
                    return sum_as_zero ? std::optional<BoundLabel>(BoundLabel{kZero, ctx}) : std::nullopt;
                default:
                    return std::nullopt;
            }
        },
        [sum_as_zero](const Label &local, const Label &ctx) {
            if (local == kZero) {
                return sum_as_zero ? ctx.with(Part::sum()) : ctx;
            }
            return ctx + local;
        },
    };
}

}  // namespace

Binding pair_tags() {
    return pair_tags_with(false);
}

Binding pair_sum_tags() {
    return pair_tags_with(true);
}

Binding outer(OuterIndex form) {
    return Binding{
        [form](const Label &g) -> std::optional<BoundLabel> {
            if (g.is(PartKind::S)) {
                return BoundLabel{g, Label{}};
            }
            if (g.size() == 2 && g[0].kind == PartKind::Pair && g[1].kind == PartKind::TagL) {
                return BoundLabel{Label{g[0]}, Label{}};
            }
            if (form == OuterIndex::Plain && g.is(PartKind::Index)) {
                return BoundLabel{g, Label{}};
            }
            if (form == OuterIndex::WithSum && g.size() == 2 && g[0].kind == PartKind::Index &&
                g[1].kind == PartKind::S) {
                return BoundLabel{Label{g[0]}, Label{}};
            }
            return std::nullopt;
        },
        [form](const Label &local, const Label &) {
            switch (local[0].kind) {
                case PartKind::Pair:
                    return local.with(Part::tag_l());
                case PartKind::Index:
                    return form == OuterIndex::Plain ? local : local.with(Part::sum());
                default:
                    return local;
            }
        },
    };
}

Binding inner(int n, InnerIndex form) {
    return Binding{
        [n, form](const Label &g) -> std::optional<BoundLabel> {
            if (g.size() == 1 && g[0].kind == PartKind::Quad) {
                int i = g[0].idx[0], j = g[0].idx[1];
                int u = rank_without(g[0].idx[2], i, j), v = rank_without(g[0].idx[3], i, j);
                return BoundLabel{Label{Part::pair(u, v)}, Label{Part::pair(i, j)}};
            }
            if (g.size() != 2) {
                return std::nullopt;
            }
            if (g[0].kind == PartKind::Pair && g[1].kind == PartKind::TagR) {
                return BoundLabel{Label{Part::sum()}, Label{g[0]}};
            }
            const Part *pair = nullptr;
            const Part *index = nullptr;
            if (form == InnerIndex::PairThenIndex && g[0].kind == PartKind::Pair && g[1].kind == PartKind::Index) {
                pair = &g[0];
                index = &g[1];
            } else if (form == InnerIndex::IndexThenPair && g[0].kind == PartKind::Index && g[1].kind == PartKind::Pair) {
                index = &g[0];
                pair = &g[1];
            }
            if (!pair) {
                return std::nullopt;
            }
            int i = pair->idx[0], j = pair->idx[1], l = index->idx[0];
            if (l == i || l == j || l > n) {
                throw Error(ErrorCode::BindingConflict, "index label " + g.str() + " overlaps its pair context");
            }
            return BoundLabel{Label{Part::index(rank_without(l, i, j))}, Label{*pair}};
        },
        [form](const Label &local, const Label &ctx) {
            int i = ctx[0].idx[0], j = ctx[0].idx[1];
            switch (local[0].kind) {
                case PartKind::S:
                    return ctx.with(Part::tag_r());
                case PartKind::Pair:
                    return Label{Part::quad(
                        i, j, unrank_without(local[0].idx[0], i, j), unrank_without(local[0].idx[1], i, j))};
                default: {
                    Part index = Part::index(unrank_without(local[0].idx[0], i, j));
                    return form == InnerIndex::PairThenIndex ? ctx.with(index) : Label{index, ctx[0]};
                }
            }
        },
    };
}

Binding ancilla_one() {
    return Binding{
        [](const Label &g) -> std::optional<BoundLabel> {
            if (g.size() == 2 && g[0] == Part::ancilla(1) && is_data(g[1])) {
                return BoundLabel{Label{g[1]}, Label{}};
            }
            return std::nullopt;
        },
        [](const Label &local, const Label &) {
            return Label{Part::ancilla(1), local[0]};
        },
    };
}

Binding ancilla_register() {
    return Binding{
        [](const Label &g) -> std::optional<BoundLabel> {
            if (g.size() == 2 && g[0].kind == PartKind::Ancilla) {
                return BoundLabel{Label{g[0]}, Label{g[1]}};
            }
            return std::nullopt;
        },
        [](const Label &local, const Label &ctx) {
            return local + ctx;
        },
    };
}

Binding ancilla_on_sum() {
    return Binding{
        [](const Label &g) -> std::optional<BoundLabel> {
            if (g.size() == 2 && g[0].kind == PartKind::Ancilla && g[1].kind == PartKind::S) {
                return BoundLabel{Label{g[0]}, Label{g[1]}};
            }
            return std::nullopt;
        },
        [](const Label &local, const Label &ctx) {
            return local + ctx;
        },
    };
}

}  // namespace exactq::bindings
