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

#include <random>

#include "exactq/error.hpp"
#include "exactq/isometry.hpp"
#include "exactq/measurement.hpp"
#include "exactq/state.hpp"
#include "support.hpp"

namespace exactq {
namespace {

Label L(Part p) {
    return Label{p};
}

TEST(Label, PrintsRegisters) {
    EXPECT_EQ(L(Part::sum()).str(), "S");
    EXPECT_EQ(L(Part::index(3)).str(), "3");
    EXPECT_EQ(L(Part::pair(1, 2)).str(), "(1,2)");
    EXPECT_EQ((Label{Part::pair(1, 2), Part::tag_l()}).str(), "(1,2)|L");
}

TEST(Label, PairNeedsIncreasingIndices) {
    EXPECT_THROW(Part::pair(2, 1), Error);
    EXPECT_THROW(Part::pair(2, 2), Error);
}

TEST(Label, CanonicalOrderFollowsKindThenIndices) {
    std::vector<Label> labels{L(Part::pair(1, 3)), L(Part::index(2)), L(Part::sum()), L(Part::pair(1, 2)),
                              L(Part::index(1)), L(Part::scratch0())};
    std::sort(labels.begin(), labels.end());
    std::vector<std::string> got;
    for (const auto &l : labels) {
        got.push_back(l.str());
    }
    EXPECT_EQ(got, (std::vector<std::string>{"0", "S", "1", "2", "(1,2)", "(1,3)"}));
}

TEST(Label, SliceAndConcat) {
    Label a{Part::pair(1, 2), Part::index(4)};
    EXPECT_EQ(a.slice(1, 1), L(Part::index(4)));
    EXPECT_EQ(L(Part::pair(1, 2)) + L(Part::index(4)), a);
    EXPECT_EQ(L(Part::pair(1, 2)).with(Part::index(4)), a);
}

TEST(LabeledState, DropsTinyAmplitudesAndKeepsOrder) {
    LabeledState s({{L(Part::index(2)), 0.5}, {L(Part::index(1)), 1e-15}, {L(Part::sum()), -0.5}});
    EXPECT_EQ(s.size(), 2u);
    EXPECT_EQ(s.begin()->first, L(Part::sum()));
    EXPECT_NEAR(s.squared_norm(), 0.5, 1e-15);
}

TEST(LabeledState, NormalizeScaleInnerAdd) {
    LabeledState a({{L(Part::index(1)), 3.0}, {L(Part::index(2)), amp_t(0, 4)}});
    EXPECT_NEAR(a.normalized().squared_norm(), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(inner(a, a) - 25.0), 0.0, 1e-12);
    LabeledState b = add(a, a, -1.0);
    EXPECT_TRUE(b.empty());
    EXPECT_TRUE(LabeledState().normalized().empty());
    EXPECT_NEAR(max_difference(a.scaled(2.0), add(a, a)), 0.0, 1e-15);
}

IsometryGadget swap12() {
    Label one = L(Part::index(1)), two = L(Part::index(2));
    std::map<Label, LabeledState> cols;
    cols.emplace(one, LabeledState({{two, 1.0}}));
    cols.emplace(two, LabeledState({{one, 1.0}}));
    return IsometryGadget("swap", {one, two}, cols);
}

TEST(Isometry, RejectsNonOrthonormalColumns) {
    Label one = L(Part::index(1)), two = L(Part::index(2));
    std::map<Label, LabeledState> cols;
    cols.emplace(one, LabeledState({{one, 1.0}}));
    cols.emplace(two, LabeledState({{one, 0.6}, {two, 0.8}}));
    try {
        IsometryGadget("bad", {one, two}, cols);
        FAIL() << "expected NotIsometry";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotIsometry);
    }
}

TEST(Isometry, CompletionIsUnitaryAndKeepsColumns) {
    // A single column spreading over three labels; completion must fill the rest.
    Label a = L(Part::index(1)), b = L(Part::index(2)), c = L(Part::index(3));
    std::map<Label, LabeledState> cols;
    const double r = 1 / std::sqrt(3.0);
    cols.emplace(a, LabeledState({{a, r}, {b, r}, {c, r}}));
    IsometryGadget g("spread", {a}, cols, {b, c});
    IsometryGadget u = complete_isometry(g);
    EXPECT_TRUE(u.completed());
    EXPECT_LT(testing::dense_unitarity_error(testing::dense_of(u)), 1e-12);
    EXPECT_LT(max_difference(u.image(a), g.image(a)), 1e-15);
    // Deterministic: completing twice gives the same matrix.
    IsometryGadget again = complete_isometry(g);
    for (const auto &lab : u.space()) {
        EXPECT_LT(max_difference(u.image(lab), again.image(lab)), 0.0 + 1e-15);
    }
}

TEST(Isometry, AdjointInvertsCompletedGadget) {
    Label a = L(Part::index(1)), b = L(Part::index(2));
    std::map<Label, LabeledState> cols;
    cols.emplace(a, LabeledState({{a, 0.6}, {b, amp_t(0, 0.8)}}));
    IsometryGadget u = complete_isometry(IsometryGadget("rot", {a}, cols, {b}));
    IsometryGadget ud = u.adjoint();
    Binding all = Binding::whole([](const Label &) {
        return true;
    });
    LabeledState s({{a, 0.3}, {b, amp_t(-0.1, 0.2)}});
    EXPECT_LT(max_difference(apply_isometry(apply_isometry(s, u, all), ud, all), s), 1e-14);
}

TEST(Isometry, AdjointNeedsCompletion) {
    Label a = L(Part::index(1)), b = L(Part::index(2));
    std::map<Label, LabeledState> cols;
    cols.emplace(a, LabeledState({{b, 1.0}}));
    EXPECT_THROW(IsometryGadget("half", {a}, cols, {b}).adjoint(), Error);
}

TEST(Isometry, ApplyLeavesSpectatorsAlone) {
    Label one = L(Part::index(1)), two = L(Part::index(2)), s = L(Part::sum());
    Binding idx = Binding::whole([](const Label &g) {
        return g.size() == 1 && g[0].kind == PartKind::Index;
    });
    LabeledState in({{one, 0.5}, {s, 0.25}});
    LabeledState out = apply_isometry(in, swap12(), idx);
    EXPECT_NEAR(std::abs(out.amplitude(two) - 0.5), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(out.amplitude(s) - 0.25), 0.0, 1e-15);
    EXPECT_FALSE(out.contains(one));
}

TEST(Isometry, MissingColumnIsUnspecifiedInput) {
    Label a = L(Part::index(1)), b = L(Part::index(2));
    std::map<Label, LabeledState> cols;
    cols.emplace(a, LabeledState({{b, 1.0}}));
    IsometryGadget half("half", {a}, cols, {b});
    Binding idx = Binding::whole([](const Label &g) {
        return g.size() == 1 && g[0].kind == PartKind::Index;
    });
    try {
        apply_isometry(LabeledState({{b, 1.0}}), half, idx);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::UnspecifiedInput);
    }
}

TEST(Isometry, OutputCollidingWithSpectatorIsBindingConflict) {
    // The binding claims only label 1, but the gadget writes label 2, which is also
    // present as an untouched spectator.
    Label one = L(Part::index(1)), two = L(Part::index(2));
    Binding only_one = Binding::whole([one](const Label &g) {
        return g == one;
    });
    try {
        apply_isometry(LabeledState({{one, 0.6}, {two, 0.8}}), swap12(), only_one);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::BindingConflict);
    }
}

TEST(Isometry, RandomStatesKeepTheirNorm) {
    std::mt19937 rng(7);
    std::normal_distribution<double> gauss;
    Label a = L(Part::index(1)), b = L(Part::index(2)), c = L(Part::index(3));
    std::map<Label, LabeledState> cols;
    cols.emplace(a, LabeledState({{a, 0.6}, {c, 0.8}}));
    IsometryGadget u = complete_isometry(IsometryGadget("g", {a}, cols, {b, c}));
    Binding all = Binding::whole([](const Label &) {
        return true;
    });
    for (int trial = 0; trial < 50; trial++) {
        LabeledState s({{a, amp_t(gauss(rng), gauss(rng))}, {b, amp_t(gauss(rng), gauss(rng))},
                        {c, amp_t(gauss(rng), gauss(rng))}});
        EXPECT_NEAR(apply_isometry(s, u, all).squared_norm(), s.squared_norm(), 1e-12 * s.squared_norm());
    }
}

MeasurementPartition sum_vs_pairs() {
    return MeasurementPartition{{
        {"S",
         [](const Label &g) -> std::optional<Label> {
             return g.is(PartKind::S) ? std::optional<Label>(Label{}) : std::nullopt;
         }},
        {"pair",
         [](const Label &g) -> std::optional<Label> {
             return g.is(PartKind::Pair) ? std::optional<Label>(g) : std::nullopt;
         }},
    }};
}

TEST(Measurement, SplitsByOutcomeAndParameter) {
    LabeledState s({{L(Part::sum()), 0.6}, {L(Part::pair(1, 2)), 0.48}, {L(Part::pair(1, 3)), 0.64}});
    auto branches = measure(s, sum_vs_pairs());
    ASSERT_EQ(branches.size(), 3u);
    double total = 0;
    for (const auto &b : branches) {
        total += b.squared_norm;
        EXPECT_TRUE(b.reachable);
    }
    EXPECT_NEAR(total, s.squared_norm(), 1e-15);
    EXPECT_EQ(branches[0].outcome, 0);
    EXPECT_EQ(branches[1].param, L(Part::pair(1, 2)));
}

TEST(Measurement, TinyBranchesAreUnreachable) {
    LabeledState s({{L(Part::sum()), 1.0}, {L(Part::pair(1, 2)), 1e-6}});
    auto branches = measure(s, sum_vs_pairs(), 1e-9);
    ASSERT_EQ(branches.size(), 2u);
    EXPECT_TRUE(branches[0].reachable);
    EXPECT_FALSE(branches[1].reachable);
}

TEST(Measurement, GapAndOverlapAreErrors) {
    try {
        measure(LabeledState({{L(Part::index(1)), 1.0}}), sum_vs_pairs());
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::PartitionGap);
    }
    MeasurementPartition twice = sum_vs_pairs();
    twice.outcomes.push_back(twice.outcomes[0]);
    try {
        measure(LabeledState({{L(Part::sum()), 1.0}}), twice);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::PartitionOverlap);
    }
}

TEST(ErrorCodes, HaveNames) {
    EXPECT_EQ(error_code_name(ErrorCode::PartitionGap), "PartitionGap");
    EXPECT_EQ(error_code_name(ErrorCode::ZeroWitnessMissing), "ZeroWitnessMissing");
}

}  // namespace
}  // namespace exactq
