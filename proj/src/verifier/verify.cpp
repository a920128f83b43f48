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

#include "exactq/verify.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "exactq/error.hpp"

namespace exactq {

Truth truth_exact_kl(int k, int l) {
    return [k, l](const std::vector<uint8_t> &x) {
        int w = std::accumulate(x.begin(), x.end(), 0);
        return w == k || w == l;
    };
}

Truth truth_by_weight(std::vector<bool> accepts) {
    return [accepts = std::move(accepts)](const std::vector<uint8_t> &x) {
        size_t w = std::accumulate(x.begin(), x.end(), 0u);
        return w < accepts.size() && accepts[w];
    };
}

std::vector<uint8_t> input_bits(uint64_t code, int n) {
    std::vector<uint8_t> x(n);
    for (int i = 0; i < n; i++) {
        x[i] = (code >> i) & 1;
    }
    return x;
}

std::string bits_string(const std::vector<uint8_t> &x) {
    std::string s;
    for (auto b : x) {
        s += static_cast<char>('0' + b);
    }
    return s;
}

VerificationReport verify_exactness(const Plan &plan, const Truth &truth, const VerifyOptions &options) {
    const int n = plan.info.n;
    if (n > 24) {
        throw Error(ErrorCode::InvalidArgument, "exhaustive verification is limited to n <= 24");
    }
    if (plan.info.precomputed_entry && !options.entry) {
        throw Error(ErrorCode::InvalidArgument, "plan needs an entry state factory");
    }
    const uint64_t total = uint64_t{1} << n;
    int threads = options.threads > 0 ? options.threads : static_cast<int>(std::thread::hardware_concurrency());
    threads = std::clamp<int>(threads, 1, static_cast<int>(std::min<uint64_t>(total, 64)));

    std::vector<InputSummary> results(total);
    std::vector<std::exception_ptr> errors(threads);
    auto worker = [&](int t) {
        try {
            SummaryEngine engine(options.branch_epsilon);
            for (uint64_t code = t; code < total; code += threads) {
                auto x = input_bits(code, n);
                std::optional<LabeledState> entry;
                if (plan.info.precomputed_entry) {
                    entry = options.entry(x);
                }
                results[code] = engine.run(plan, x, entry);
            }
        } catch (...) {
            errors[t] = std::current_exception();
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; t++) {
            pool.emplace_back(worker, t);
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }

    VerificationReport report;
    report.family = plan.info.family;
    report.params = plan.info.params;
    report.claimed_bound = plan.info.claimed_queries;
    report.inputs_checked = static_cast<int>(total);
    for (uint64_t code = 0; code < total; code++) {
        auto x = input_bits(code, n);
        const InputSummary &s = results[code];
        bool want = truth(x);
        report.worst_case_queries = std::max(report.worst_case_queries, s.worst_queries);
        report.max_norm_residual = std::max(report.max_norm_residual, s.max_norm_residual);
        if (s.leaves[!want] > 0) {
            report.exact = false;
            report.counterexamples.push_back({bits_string(x), !want, s.mass[!want]});
        } else if (s.leaves[want] == 0) {
            report.exact = false;
            report.counterexamples.push_back({bits_string(x), want, 0.0});
        }
        if (options.keep_per_input) {
            report.per_input.push_back({bits_string(x), want, s.mass[1], s.mass[0], s.worst_queries});
        }
    }
    return report;
}

}  // namespace exactq
