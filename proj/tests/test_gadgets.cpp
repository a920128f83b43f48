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

#include "exactq/error.hpp"
#include "exactq/gadgets.hpp"
#include "support.hpp"

namespace exactq {
namespace {

Label idx(int i) {
    return Label{Part::index(i)};
}
Label pr(int i, int j) {
    return Label{Part::pair(i, j)};
}
const Label kSum{Part::sum()};

TEST(UGadget, ColumnsMatchTheDefinition) {
    for (int n = 2; n <= 7; n++) {
        IsometryGadget u = u_gadget(n);
        const double r = 1 / std::sqrt(static_cast<double>(n));
        for (int i = 1; i <= n; i++) {
            LabeledState img = u.image(idx(i));
            EXPECT_NEAR(img.amplitude(kSum).real(), r, 1e-15);
            for (int j = 1; j <= n; j++) {
                if (j < i) {
                    EXPECT_NEAR(img.amplitude(pr(j, i)).real(), -r, 1e-15);
                } else if (j > i) {
                    EXPECT_NEAR(img.amplitude(pr(i, j)).real(), r, 1e-15);
                }
            }
            EXPECT_EQ(img.size(), static_cast<size_t>(n));
        }
    }
}

TEST(UGadget, CompletedIsUnitaryUpToTwenty) {
    for (int n = 1; n <= 20; n++) {
        auto u = completed_u(n);
        EXPECT_LT(u->unitarity_residual(), 1e-12) << n;
        EXPECT_LT(testing::dense_unitarity_error(testing::dense_of(*u)), 1e-12) << n;
        EXPECT_EQ(u->dimension(), 1 + n + n * (n - 1) / 2) << n;
    }
}

TEST(UGadget, DaggerUndoesU) {
    const int n = 5;
    Binding all = Binding::whole([](const Label &) {
        return true;
    });
    LabeledState s({{idx(2), 0.5}, {idx(4), -0.5}, {pr(1, 3), 0.5}, {kSum, 0.5}});
    LabeledState back = apply_isometry(apply_isometry(s, *completed_u(n), all), *completed_u_dagger(n), all);
    EXPECT_LT(max_difference(back, s), 1e-14);
}

TEST(UGadget, SplitsQueriedUniformStateIntoSumAndDifferences) {
    // U_n sum_i xhat_i |i> = (sum xhat)/sqrt(n) |S> + sum_{i<j} (xhat_i - xhat_j)/sqrt(n) |ij>.
    const int n = 5;
    std::vector<uint8_t> x{1, 0, 0, 1, 1};
    Amplitudes in;
    double total = 0;
    for (int i = 1; i <= n; i++) {
        in[idx(i)] = testing::hat(x[i - 1]);
        total += testing::hat(x[i - 1]);
    }
    Binding all = Binding::whole([](const Label &) {
        return true;
    });
    LabeledState out = apply_isometry(LabeledState(in), *completed_u(n), all);
    const double r = 1 / std::sqrt(5.0);
    EXPECT_NEAR(out.amplitude(kSum).real(), total * r, 1e-14);
    for (int i = 1; i <= n; i++) {
        for (int j = i + 1; j <= n; j++) {
            EXPECT_NEAR(
                out.amplitude(pr(i, j)).real(), (testing::hat(x[i - 1]) - testing::hat(x[j - 1])) * r, 1e-14);
        }
    }
}

TEST(RRotation, MapsZeroToLAndR) {
    const double alpha = 0.3;
    IsometryGadget r = r_rotation(alpha);
    LabeledState img = r.image(Label{Part::scratch0()});
    EXPECT_NEAR(img.amplitude(Label{Part::tag_l()}).real(), std::sin(alpha), 1e-15);
    EXPECT_NEAR(img.amplitude(Label{Part::tag_r()}).real(), std::cos(alpha), 1e-15);
    IsometryGadget toward = r_rotation_toward(3, 4);
    EXPECT_NEAR(toward.image(Label{Part::scratch0()}).amplitude(Label{Part::tag_l()}).real(), 0.6, 1e-15);
    EXPECT_THROW(r_rotation_toward(0, 0), Error);
    EXPECT_LT(testing::dense_unitarity_error(testing::dense_of(complete_isometry(r))), 1e-12);
}

TEST(QRotation, IsUnitaryAndNeedsPositiveWeights) {
    IsometryGadget q = q_rotation(2, 3);
    EXPECT_LT(testing::dense_unitarity_error(testing::dense_of(q)), 1e-12);
    EXPECT_NEAR(q.image(Label{Part::ancilla(0)}).amplitude(Label{Part::ancilla(1)}).real(), std::sqrt(0.6), 1e-15);
    for (auto [u, w] : {std::pair{0.0, 1.0}, std::pair{1.0, 0.0}, std::pair{-1.0, 2.0}}) {
        try {
            q_rotation(u, w);
            FAIL();
        } catch (const Error &e) {
            EXPECT_EQ(e.code(), ErrorCode::DomainError);
        }
    }
}

TEST(Hadamard, IsItsOwnInverse) {
    IsometryGadget h = hadamard();
    Binding all = Binding::whole([](const Label &) {
        return true;
    });
    LabeledState s({{Label{Part::ancilla(0)}, 0.6}, {Label{Part::ancilla(1)}, 0.8}});
    EXPECT_LT(max_difference(apply_isometry(apply_isometry(s, h, all), h, all), s), 1e-15);
}

TEST(Oracle, FlipsSignsOfOnes) {
    OracleInput x{{0, 1, 1}, {false, false, false}};
    LabeledState s({{idx(1), 1.0}, {idx(2), 1.0}, {kSum, 1.0}, {Label{Part::pair(1, 2), Part::index(3)}, 1.0}});
    LabeledState out = oracle_apply(s, x, last_index_rule());
    EXPECT_NEAR(out.amplitude(idx(1)).real(), 1, 0);
    EXPECT_NEAR(out.amplitude(idx(2)).real(), -1, 0);
    EXPECT_NEAR(out.amplitude(kSum).real(), 1, 0);
    EXPECT_NEAR(out.amplitude(Label{Part::pair(1, 2), Part::index(3)}).real(), -1, 0);
}

TEST(Oracle, RulesPickTheRightRegister) {
    OracleInput x{{1, 0, 0}, {false, false, false}};
    Label two_parts{Part::index(1), Part::index(2)};
    EXPECT_NEAR(oracle_apply(LabeledState({{two_parts, 1.0}}), x, first_index_rule()).amplitude(two_parts).real(), -1,
                0);
    EXPECT_NEAR(oracle_apply(LabeledState({{two_parts, 1.0}}), x, last_index_rule()).amplitude(two_parts).real(), 1, 0);
    Label anc1{Part::ancilla(1), Part::index(1)};
    Label anc0{Part::ancilla(0), Part::index(1)};
    LabeledState s({{anc0, 1.0}, {anc1, 1.0}});
    LabeledState out = oracle_apply(s, x, ancilla_index_rule());
    EXPECT_NEAR(out.amplitude(anc0).real(), 1, 0);
    EXPECT_NEAR(out.amplitude(anc1).real(), -1, 0);
}

TEST(Oracle, OutOfRangeIndexThrows) {
    OracleInput x{{0, 1}, {false, false}};
    try {
        oracle_apply(LabeledState({{idx(3), 1.0}}), x, last_index_rule());
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::IndexOutOfRange);
    }
}

}  // namespace
}  // namespace exactq
