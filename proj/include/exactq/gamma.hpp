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

#ifndef EXACTQ_GAMMA_HPP
#define EXACTQ_GAMMA_HPP

#include <array>
#include <utility>
#include <vector>

namespace exactq {

/// Pair-weight of the state handed to the next level:
/// gamma_n = (n^2 (n-2)^2 g/(1-g) + d^4) / (n^2 - d^2)^2, with g the next level's gamma.
double gamma_next(int n, int d, double gamma_prev);

struct GammaChain {
    int d = 0;
    int k0 = 0;
    std::vector<std::pair<int, double>> entries;
    /// Every gamma < 1.
    bool valid = true;
    /// gamma_n <= 1/n for every n >= decay_threshold(d) in the chain.
    bool decays = true;
};

/// Chain from the base (n0 = d + 2 k0, gamma0) up to n_max. Throws DivergedChain if a gamma
/// reaches 1.
GammaChain gamma_chain(int d, int k0, double gamma0, int n_max);

/// Base of the chain used for a given d: (k0, gamma0, base query count).
struct ChainBase {
    int k0;
    double gamma0;
    int base_queries;
};
/// d in {1,2,3}; throws NoChain otherwise.
ChainBase chain_base(int d);
/// Chain for d from its standard base.
GammaChain standard_chain(int d, int n_max);
/// First n from which gamma_n <= 1/n is claimed: 5, 12, 23.
int decay_threshold(int d);

/// n^4 - (2 d^2 + 4) n^3 + (6 d^2 - d^4) n^2 + 4 d^4 n - 3 d^4.
/// Non-negative exactly when the inductive decay step goes through.
double decay_quartic(int n, int d);

/// Closed-form constants of one recursive step at size n.
struct StepConstants {
    int n = 0;
    int d = 0;
    double gamma_prev = 0;
    double gamma = 0;
    std::array<double, 12> c{};  // c[1]..c[11]; c[0] unused

    double operator[](int k) const {
        return c[k];
    }
};

StepConstants solve_step_constants(int n, int d, double gamma_prev);

/// Residuals of the twelve step constraints, in order.
std::array<double, 12> step_residuals(const StepConstants &k);
double max_step_residual(const StepConstants &k);

}  // namespace exactq

#endif
