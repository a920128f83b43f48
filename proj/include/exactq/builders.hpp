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

#ifndef EXACTQ_BUILDERS_HPP
#define EXACTQ_BUILDERS_HPP

#include <map>
#include <string>
#include <vector>

#include "exactq/gamma.hpp"
#include "exactq/plan.hpp"

namespace exactq {

/// Additive perturbations of named constants, applied at the top level of a build.
/// Used to check that the verifier notices broken constants.
struct Tamper {
    std::map<std::string, double> delta;

    double operator()(const std::string &name, double value) const {
        auto it = delta.find(name);
        return it == delta.end() ? value : value + it->second;
    }
    bool empty() const {
        return delta.empty();
    }
};

/// Recursive routine at size n entered in the state
///   sum_i x_i |S> + sqrt(gamma) sum_{i<j} (x_i - x_j) |ij>,
/// with gamma its chain value. Tamper keys: c1, c2, c8, c9, and c7 (re-solves c1).
PlanPtr build_unbr(int n, int d, const Tamper &tamper = {});
/// Gamma of the routine above.
double unbr_gamma(int n, int d);

/// EXACT_{k,n-k} with d = n - 2k in {1,2,3}. Tamper key: gamma (others go to the
/// recursive routine at the same size).
PlanPtr build_unb(int n, int d, const Tamper &tamper = {});

/// All variables equal; n-1 queries.
PlanPtr build_equality(int n);
/// x1 != x2 with one query.
PlanPtr build_xor2();
/// No queries.
PlanPtr build_constant(int n, bool value);
/// |x| = k, with max(k, n-k) queries.
PlanPtr build_exact_k(int n, int k);
/// EXACT_{k,n-k} for any k < n/2 with n-k+1 queries.
PlanPtr build_general_unbalance(int n, int k);
/// EXACT_{k,l} by padding to a symmetric instance and dispatching on l-k.
PlanPtr build_exact_kl(int n, int k, int l);

/// The two-query routine at n=5, d=3 entered with gamma = 1/112. Tamper keys: a1..a18.
PlanPtr build_unbr_5_3(const Tamper &tamper = {});

/// Unitary part and measurement of one step, without the children.
struct StepFragment {
    std::vector<Step> steps;
    MeasurementPartition partition;
};

/// Rules out unbalance -d (outcome "not_minus_d"), +d ("not_plus_d"), or finds an
/// unequal pair ("pair").
StepFragment unbalance_step(int n, int d);
/// Rules out unbalance +u ("not_u"), -w ("not_minus_w"), or finds an unequal pair.
StepFragment uw_step(int n, int u, int w);

NodePtr attach(std::string name, const StepFragment &fragment, std::vector<NodePtr> children);

/// Entry state of build_unbr for an input (unnormalized).
LabeledState unbr_entry_state(const std::vector<uint8_t> &x, double gamma);

}  // namespace exactq

#endif
