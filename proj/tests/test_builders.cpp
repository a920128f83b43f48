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

#include <gtest/gtest.h>

#include "exactq/builders.hpp"
#include "exactq/error.hpp"
#include "exactq/runner.hpp"
#include "exactq/verify.hpp"
#include "support.hpp"

namespace exactq {
namespace {

using testing::hat;

VerificationReport check(const PlanPtr &plan, const Truth &truth, EntryFactory entry = {}) {
    VerifyOptions options;
    options.threads = 1;
    options.entry = std::move(entry);
    return verify_exactness(*plan, truth, options);
}

TEST(Unb, DOneUsesHalfPlusOneQueries) {
    auto trivial = check(build_unb(1, 1), truth_exact_kl(0, 1));
    EXPECT_TRUE(trivial.exact);
    EXPECT_EQ(trivial.worst_case_queries, 0);
    for (int n = 3; n <= 9; n += 2) {
        int k = (n - 1) / 2;
        auto r = check(build_unb(n, 1), truth_exact_kl(k, n - k));
        EXPECT_TRUE(r.exact) << n;
        EXPECT_EQ(r.worst_case_queries, (n + 1) / 2) << n;
        EXPECT_EQ(r.claimed_bound, (n + 1) / 2) << n;
    }
}

TEST(Unb, DTwoAndThreeUseHalfPlusDMinusOne) {
    for (int d = 2; d <= 3; d++) {
        for (int n = d; n <= 10; n += 2) {
            int k = (n - d) / 2;
            auto r = check(build_unb(n, d), truth_exact_kl(k, n - k));
            EXPECT_TRUE(r.exact) << "n=" << n << " d=" << d;
            EXPECT_EQ(r.worst_case_queries, (n + d) / 2 - 1) << "n=" << n << " d=" << d;
            EXPECT_EQ(r.claimed_bound, (n + d) / 2 - 1);
        }
    }
}

TEST(Unb, SixTwoNeedsHalfTheClassicalQueries) {
    auto r = check(build_unb(6, 2), truth_exact_kl(2, 4));
    EXPECT_TRUE(r.exact);
    EXPECT_EQ(r.worst_case_queries, 3);
}

TEST(Unb, RejectsBadParameters) {
    EXPECT_THROW(build_unb(4, 0), Error);
    EXPECT_THROW(build_unb(5, 2), Error);
    EXPECT_THROW(build_unb(8, 4), Error);
    EXPECT_THROW(build_unb(1, 3), Error);
}

TEST(Unbr, ExactOnItsEntryStates) {
    for (int d = 1; d <= 3; d++) {
        // At n = d = 2 gamma is 0 and the entry state vanishes on weight one.
        for (int n = d == 1 ? 1 : d + 2; n <= 9; n += 2) {
            if ((n - d) % 2) {
                continue;
            }
            const double gamma = unbr_gamma(n, d);
            int k = (n - d) / 2;
            auto r = check(build_unbr(n, d), truth_exact_kl(k, n - k), [gamma](const std::vector<uint8_t> &x) {
                return unbr_entry_state(x, gamma);
            });
            EXPECT_TRUE(r.exact) << "n=" << n << " d=" << d;
            EXPECT_LE(r.worst_case_queries, r.claimed_bound) << "n=" << n << " d=" << d;
        }
    }
}

TEST(Unbr, StepHandsTheNextEntryStateToTheSmallerRoutine) {
    // After the unitaries of one step, the S amplitude is c6((sum xhat)^2 - c7) and the
    // pair (i,j) block is c11 (xhat_i - xhat_j) times the entry state on the other n-2
    // variables with gamma of size n-2.
    for (auto [n, d] : {std::pair{5, 1}, std::pair{7, 1}, std::pair{6, 2}, std::pair{8, 2}, std::pair{7, 3}}) {
        const double g = unbr_gamma(n, d), gp = unbr_gamma(n - 2, d);
        StepConstants c = solve_step_constants(n, d, gp);
        PlanPtr plan = build_unbr(n, d);
        std::vector<VarRef> vars;
        for (int i = 0; i < n; i++) {
            vars.push_back(VarRef{i, 0});
        }
        for (uint64_t code = 0; code < (uint64_t{1} << n); code += 3) {
            auto x = input_bits(code, n);
            LabeledState out = apply_steps(plan->root->steps, unbr_entry_state(x, g), oracle_for(vars, x));
            double total = 0;
            for (auto b : x) {
                total += hat(b);
            }
            EXPECT_NEAR(out.amplitude(Label{Part::sum()}).real(), c[6] * (total * total - c[7]), 1e-11);
            for (int i = 1; i <= n; i++) {
                for (int j = i + 1; j <= n; j++) {
                    const double dij = hat(x[i - 1]) - hat(x[j - 1]);
                    double rest = total - hat(x[i - 1]) - hat(x[j - 1]);
                    EXPECT_NEAR(
                        out.amplitude(Label{Part::pair(i, j), Part::sum()}).real(), c[11] * dij * rest, 1e-11);
                    for (int u = 1; u <= n; u++) {
                        for (int v = u + 1; v <= n; v++) {
                            if (u == i || u == j || v == i || v == j) {
                                continue;
                            }
                            EXPECT_NEAR(
                                out.amplitude(Label{Part::quad(i, j, u, v)}).real(),
                                c[11] * std::sqrt(gp) * dij * (hat(x[u - 1]) - hat(x[v - 1])), 1e-11);
                        }
                    }
                }
            }
        }
    }
}

TEST(Unbr, TamperedConstantsBreakExactness) {
    const int n = 7, d = 1;
    const int k = (n - d) / 2;
    for (const char *name : {"c1", "c2", "c8", "c9", "c7"}) {
        auto r = check(build_unb(n, d, Tamper{{{name, 1e-3}}}), truth_exact_kl(k, n - k));
        EXPECT_FALSE(r.exact) << name;
        EXPECT_FALSE(r.counterexamples.empty()) << name;
    }
    auto r = check(build_unb(n, d, Tamper{{{"gamma", 1e-3}}}), truth_exact_kl(k, n - k));
    EXPECT_FALSE(r.exact);
}

TEST(Unbr, WrongC7IsCaught) {
    // c7 = d^2 + 0.1 on the recursive routine at n = 5, d = 3.
    const double gamma = unbr_gamma(7, 3);
    auto r = check(build_unbr(7, 3, Tamper{{{"c7", 0.1}}}), truth_exact_kl(2, 5), [gamma](const std::vector<uint8_t> &x) {
        return unbr_entry_state(x, gamma);
    });
    EXPECT_FALSE(r.exact);
    ASSERT_FALSE(r.counterexamples.empty());
}

TEST(Equality, NMinusOneQueries) {
    for (int n = 1; n <= 8; n++) {
        auto r = check(build_equality(n), truth_exact_kl(0, n));
        EXPECT_TRUE(r.exact) << n;
        EXPECT_EQ(r.worst_case_queries, n - 1) << n;
    }
    auto r = check(build_equality(2), truth_exact_kl(0, 2));
    EXPECT_EQ(r.worst_case_queries, 1);
}

TEST(Xor, OneQuery) {
    auto r = check(build_xor2(), [](const std::vector<uint8_t> &x) {
        return x[0] != x[1];
    });
    EXPECT_TRUE(r.exact);
    EXPECT_EQ(r.worst_case_queries, 1);
}

TEST(ExactK, MaxOfKAndNMinusK) {
    for (int n = 1; n <= 8; n++) {
        for (int k = 0; k <= n; k++) {
            auto r = check(build_exact_k(n, k), truth_exact_kl(k, k));
            EXPECT_TRUE(r.exact) << n << "," << k;
            EXPECT_EQ(r.worst_case_queries, std::max(k, n - k)) << n << "," << k;
        }
    }
    EXPECT_THROW(build_exact_k(3, 4), Error);
}

TEST(GeneralUnbalance, AtMostNMinusKPlusOne) {
    for (auto [n, k] : {std::pair{4, 1}, std::pair{6, 2}, std::pair{8, 2}, std::pair{5, 1}, std::pair{7, 2},
                        std::pair{6, 1}, std::pair{8, 3}}) {
        auto r = check(build_general_unbalance(n, k), truth_exact_kl(k, n - k));
        EXPECT_TRUE(r.exact) << n << "," << k;
        EXPECT_LE(r.worst_case_queries, n - k + 1) << n << "," << k;
        EXPECT_EQ(r.claimed_bound, n - k + 1);
    }
}

int expected_claim(int n, int k, int l) {
    int d = l - k, m = std::max(n - k, l);
    if (d == 0) {
        return std::max(k, n - k);
    }
    if (k == 0 && l == n) {
        return n - 1;
    }
    return d == 1 ? m : d <= 3 ? m - 1 : m + 1;
}

TEST(ExactKL, EveryPairUpToSeven) {
    for (int n = 1; n <= 7; n++) {
        for (int k = 0; k <= n; k++) {
            for (int l = k; l <= n; l++) {
                auto plan = build_exact_kl(n, k, l);
                auto r = check(plan, truth_exact_kl(k, l));
                EXPECT_TRUE(r.exact) << n << "," << k << "," << l;
                EXPECT_EQ(r.claimed_bound, expected_claim(n, k, l)) << n << "," << k << "," << l;
                EXPECT_LE(r.worst_case_queries, r.claimed_bound) << n << "," << k << "," << l;
            }
        }
    }
}

TEST(ExactKL, FiveOneThreeUsesThreeQueries) {
    auto r = check(build_exact_kl(5, 1, 3), truth_exact_kl(1, 3));
    EXPECT_TRUE(r.exact);
    EXPECT_EQ(r.worst_case_queries, 3);
}

TEST(ExactKL, LargeGapUsesGeneralRoutine) {
    auto r = check(build_exact_kl(6, 1, 5), truth_exact_kl(1, 5));
    EXPECT_TRUE(r.exact);
    EXPECT_LE(r.worst_case_queries, std::max(6 - 1, 5) + 1);
}

TEST(ExactKL, RejectsBadParameters) {
    EXPECT_THROW(build_exact_kl(5, 3, 2), Error);
    EXPECT_THROW(build_exact_kl(5, -1, 2), Error);
    EXPECT_THROW(build_exact_kl(5, 1, 6), Error);
}

TEST(Plans, StaticBoundsAreAtLeastMeasured) {
    for (auto [n, d] : {std::pair{5, 1}, std::pair{8, 2}, std::pair{7, 3}}) {
        PlanPtr plan = build_unb(n, d);
        int k = (n - d) / 2;
        auto r = check(plan, truth_exact_kl(k, n - k));
        EXPECT_GE(static_max_queries(*plan), r.worst_case_queries);
        EXPECT_GT(plan_node_count(*plan), 0u);
    }
}

TEST(Plans, MemoizedBuildsShareStructure) {
    EXPECT_EQ(build_unb(9, 1).get(), build_unb(9, 1).get());
    EXPECT_NE(build_unb(9, 1, Tamper{{{"c1", 1e-3}}}).get(), build_unb(9, 1).get());
}

}  // namespace
}  // namespace exactq
