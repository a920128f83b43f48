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

#ifndef EXACTQ_SRC_ALGORITHMS_BINDINGS_HPP
#define EXACTQ_SRC_ALGORITHMS_BINDINGS_HPP

#include "exactq/isometry.hpp"

namespace exactq::bindings {

/// Single-part S / Index / Pair labels bind to themselves.
Binding plain();

/// R space on the pair register: [P] <-> 0, [P,L] <-> L, [P,R] <-> R.
Binding pair_tags();
/// As pair_tags but with [P,S] as the |0> side.
Binding pair_sum_tags();

enum class OuterIndex {
    Plain,    // [i]
    WithSum,  // [i, S]
};
/// U_n over [S], [P(ij), L] and the index labels.
Binding outer(OuterIndex form);

enum class InnerIndex {
    PairThenIndex,  // [P(ij), l]
    IndexThenPair,  // [l, P(ij)]
};
/// U_{n-2} for every pair context (ij) of n variables: S <-> [P(ij), R],
/// (u'v') <-> Quad(i,j,u,v), l' <-> index label, where primes are ranks in [n] \ {i,j}.
Binding inner(int n, InnerIndex form);

/// [a1, X] <-> X for data labels X.
Binding ancilla_one();
/// Ancilla register [a, X] with context X.
Binding ancilla_register();
/// Ancilla register restricted to [a, S].
Binding ancilla_on_sum();

int rank_without(int l, int i, int j);
int unrank_without(int r, int i, int j);

}  // namespace exactq::bindings

#endif
