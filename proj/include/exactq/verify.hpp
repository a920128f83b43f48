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

#ifndef EXACTQ_VERIFY_HPP
#define EXACTQ_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "exactq/plan.hpp"
#include "exactq/runner.hpp"

namespace exactq {

using Truth = std::function<bool(const std::vector<uint8_t> &)>;
using EntryFactory = std::function<LabeledState(const std::vector<uint8_t> &)>;

/// |x| in {k, l}.
Truth truth_exact_kl(int k, int l);
/// accepts[|x|].
Truth truth_by_weight(std::vector<bool> accepts);

std::vector<uint8_t> input_bits(uint64_t code, int n);
std::string bits_string(const std::vector<uint8_t> &x);

struct VerifyOptions {
    double branch_epsilon = kBranchEpsilon;
    /// 0 picks the hardware concurrency.
    int threads = 0;
    /// Entry state per input for plans that expect one.
    EntryFactory entry;
    bool keep_per_input = false;
};

struct Counterexample {
    std::string input;
    bool output;
    double probability;
};

struct InputReport {
    std::string input;
    bool expected;
    double accept;
    double reject;
    int worst_queries;
};

struct VerificationReport {
    std::string family;
    std::map<std::string, double> params;
    bool exact = true;
    int worst_case_queries = 0;
    int claimed_bound = 0;
    int inputs_checked = 0;
    double max_norm_residual = 0;
    std::vector<Counterexample> counterexamples;
    std::vector<InputReport> per_input;
};

/// Runs the plan on every input in {0,1}^n. Exact means every reachable leaf outputs
/// truth(x); counterexamples list inputs with a reachable wrong leaf.
VerificationReport verify_exactness(const Plan &plan, const Truth &truth, const VerifyOptions &options = {});

}  // namespace exactq

#endif
