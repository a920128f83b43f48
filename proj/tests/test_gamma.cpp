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

#include <boost/multiprecision/cpp_int.hpp>

#include "exactq/error.hpp"
#include "exactq/gamma.hpp"

namespace exactq {
namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

/// Exact chain, straight from the recurrence.
std::map<int, cpp_rational> exact_chain(int d, int n0, cpp_rational g0, int n_max) {
    std::map<int, cpp_rational> out{{n0, g0}};
    cpp_rational g = g0;
    for (int n = n0 + 2; n <= n_max; n += 2) {
        cpp_rational nn = n, dd = d;
        g = (nn * nn * (nn - 2) * (nn - 2) * g / (1 - g) + dd * dd * dd * dd) /
            ((nn * nn - dd * dd) * (nn * nn - dd * dd));
        out[n] = g;
    }
    return out;
}

double as_double(const cpp_rational &r) {
    return static_cast<double>(r);
}

TEST(GammaNext, SmallExactValues) {
    EXPECT_DOUBLE_EQ(gamma_next(3, 1, 0.0), 1.0 / 64);
    EXPECT_DOUBLE_EQ(gamma_next(5, 1, 1.0 / 64), 1.0 / 126);
    EXPECT_DOUBLE_EQ(gamma_next(4, 2, 0.0), 1.0 / 9);
    EXPECT_DOUBLE_EQ(gamma_next(6, 2, 1.0 / 9), 11.0 / 128);
    EXPECT_DOUBLE_EQ(gamma_next(7, 3, 1.0 / 112), 1277.0 / 22200);
}

TEST(GammaNext, RejectsBadArguments) {
    auto code_of = [](auto f) {
        try {
            f();
        } catch (const Error &e) {
            return e.code();
        }
        return ErrorCode::InvalidArgument;
    };
    EXPECT_EQ(code_of([] { gamma_next(3, 3, 0.0); }), ErrorCode::DegenerateCase);
    EXPECT_EQ(code_of([] { gamma_next(5, 1, 1.0); }), ErrorCode::DivergedChain);
    EXPECT_EQ(code_of([] { gamma_next(5, 1, -0.1); }), ErrorCode::DomainError);
}

TEST(GammaChain, MatchesExactRationalsUpTo41) {
    for (int d = 1; d <= 3; d++) {
        ChainBase base = chain_base(d);
        cpp_rational g0 = d == 3 ? cpp_rational(1, 112) : cpp_rational(0);
        auto exact = exact_chain(d, d + 2 * base.k0, g0, 41);
        GammaChain chain = standard_chain(d, 41);
        ASSERT_EQ(chain.entries.size(), exact.size()) << d;
        for (const auto &[n, g] : chain.entries) {
            EXPECT_NEAR(g, as_double(exact.at(n)), 1e-15) << "d=" << d << " n=" << n;
        }
        EXPECT_TRUE(chain.valid);
        EXPECT_TRUE(chain.decays);
    }
}

TEST(GammaChain, ReferenceNumerics) {
    // Exact values from the rational oracle, frozen.
    auto c1 = exact_chain(1, 1, 0, 5);
    EXPECT_EQ(c1.at(5), cpp_rational(1, 126));
    auto c2 = exact_chain(2, 2, 0, 12);
    auto c3 = exact_chain(3, 5, cpp_rational(1, 112), 23);
    EXPECT_NEAR(as_double(c2.at(12)), 0.03924646781789639, 1e-15);
    EXPECT_NEAR(as_double(c3.at(23)), 0.030438479230965813, 1e-15);
    // Against the rounded figures quoted for these chains.
    EXPECT_NEAR(standard_chain(1, 5).entries.back().second, 0.008, 0.001);
    EXPECT_NEAR(standard_chain(2, 12).entries.back().second, 0.039, 0.001);
    EXPECT_NEAR(standard_chain(3, 23).entries.back().second, 0.030, 0.001);
}

TEST(GammaChain, DecaysBelowOneOverNFromThreshold) {
    for (int d = 1; d <= 3; d++) {
        auto exact = exact_chain(d, d + 2 * chain_base(d).k0, d == 3 ? cpp_rational(1, 112) : cpp_rational(0), 201);
        for (const auto &[n, g] : exact) {
            EXPECT_LT(g, 1);
            if (n >= decay_threshold(d)) {
                EXPECT_LE(g, cpp_rational(1, n)) << "d=" << d << " n=" << n;
            }
        }
    }
}

TEST(GammaChain, DivergingBaseIsReported) {
    EXPECT_THROW(gamma_chain(1, 1, 0.9, 41), Error);
    EXPECT_THROW(chain_base(4), Error);
}

/// Sign of (n^2(n-2)^2/(n-3) + d^4)/(n^2-d^2)^2 <= 1/n, decided in integers.
bool decay_step_holds(int n, int d) {
    cpp_int nn = n, d2 = d * d;
    cpp_int lhs = nn * (nn * nn * (nn - 2) * (nn - 2) + d2 * d2 * (nn - 3));
    cpp_int rhs = (nn - 3) * (nn * nn - d2) * (nn * nn - d2);
    return lhs <= rhs;
}

TEST(DecayQuartic, SignAgreesWithTheRationalInequality) {
    for (int d = 1; d <= 3; d++) {
        for (int n = 4; n <= 300; n++) {
            if (n == d) {
                continue;
            }
            EXPECT_EQ(decay_quartic(n, d) >= 0, decay_step_holds(n, d)) << "d=" << d << " n=" << n;
        }
    }
}

TEST(DecayQuartic, StatedThresholds) {
    for (int n = 3; n <= 4; n++) {
        EXPECT_LT(decay_quartic(n, 1), 0) << n;
    }
    for (int n = 3; n <= 10; n++) {
        EXPECT_LT(decay_quartic(n, 2), 0) << n;
    }
    for (int n = 3; n <= 22; n++) {
        EXPECT_LT(decay_quartic(n, 3), 0) << n;
    }
    for (int d = 1; d <= 3; d++) {
        for (int n = decay_threshold(d); n <= 1000; n++) {
            EXPECT_GE(decay_quartic(n, d), 0) << "d=" << d << " n=" << n;
        }
    }
    // For d = 2 the inequality already holds one step early.
    EXPECT_GE(decay_quartic(11, 2), 0);
}

TEST(StepConstants, ClosedFormsAtThreeOne) {
    StepConstants k = solve_step_constants(3, 1, 0.0);
    EXPECT_DOUBLE_EQ(k[1], -1.0 / 8);
    EXPECT_DOUBLE_EQ(k[2], 0.0);
    EXPECT_NEAR(k[3], std::pow(3.0, 1.5) / 8, 1e-15);
    EXPECT_NEAR(k[4], 1.0 / 3, 1e-15);
    EXPECT_NEAR(k[6], 3.0 / 8, 1e-15);
    EXPECT_DOUBLE_EQ(k[7], 1.0);
    EXPECT_NEAR(k.gamma, 1.0 / 64, 1e-17);
    EXPECT_LT(max_step_residual(k), 1e-12);
}

TEST(StepConstants, EveryChainStepSatisfiesTheConstraints) {
    for (int d = 1; d <= 3; d++) {
        GammaChain chain = standard_chain(d, 41);
        for (size_t s = 1; s < chain.entries.size(); s++) {
            auto [n, g] = chain.entries[s];
            StepConstants k = solve_step_constants(n, d, chain.entries[s - 1].second);
            EXPECT_LT(max_step_residual(k), 1e-12) << "d=" << d << " n=" << n;
            EXPECT_NEAR(k.gamma, g, 1e-14) << "d=" << d << " n=" << n;
        }
    }
}

TEST(StepConstants, TamperedConstantShowsUpInResiduals) {
    StepConstants k = solve_step_constants(7, 1, gamma_next(5, 1, gamma_next(3, 1, 0.0)));
    k.c[7] += 1e-3;
    auto r = step_residuals(k);
    EXPECT_GT(std::abs(r[11]), 5e-4);
    EXPECT_GT(std::abs(r[6]), 1e-6);
}

}  // namespace
}  // namespace exactq
