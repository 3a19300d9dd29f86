// Copyright 2026 The ame-invariants Authors
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

#include <set>
#include <stdexcept>

#include "gtest/gtest.h"

#include "ame/existence.hpp"

using namespace ame;

TEST(check, eight_qubits_ruled_out_at_i2) {
    auto verdict = check(SystemParams(8, 2));
    EXPECT_TRUE(verdict.ruled_out);
    ASSERT_TRUE(verdict.witness_i.has_value());
    EXPECT_EQ(*verdict.witness_i, 2);
    EXPECT_EQ(verdict.profile.trace(2), ExactRational(-192));
    EXPECT_FALSE(verdict.scott_satisfied);
}

TEST(check, seven_qubits_not_ruled_out) {
    auto verdict = check(SystemParams(7, 2));
    EXPECT_FALSE(verdict.ruled_out);
    EXPECT_FALSE(verdict.witness_i.has_value());
    EXPECT_TRUE(verdict.scott_satisfied);
    for (std::int64_t i = 1; i <= verdict.profile.size(); ++i) {
        EXPECT_GT(verdict.profile.trace(i).sign(), 0);
    }
}

TEST(check, ame43_not_ruled_out) {
    auto verdict = check(SystemParams(4, 3));
    EXPECT_FALSE(verdict.ruled_out);
    EXPECT_EQ(verdict.profile.trace(1), ExactRational(216));
    EXPECT_EQ(verdict.profile.trace(2), ExactRational(3888));
}

TEST(check, zero_trace_is_not_a_rule_out) {
    EXPECT_FALSE(check(SystemParams(6, 2)).ruled_out);
    EXPECT_FALSE(check(SystemParams(11, 2)).ruled_out);
}

TEST(scan, qubit_rule_outs) {
    auto verdicts = scan(IntRange{2, 2}, IntRange{2, 13});
    ASSERT_EQ(verdicts.size(), 12u);
    std::set<std::int64_t> ruled;
    for (const auto &v : verdicts) {
        if (v.ruled_out) {
            ruled.insert(v.params.n());
            EXPECT_EQ(v.witness_i, 2);
        }
    }
    EXPECT_EQ(ruled, (std::set<std::int64_t>{8, 10, 12, 13}));
}

TEST(scan, qutrits_up_to_17) {
    for (const auto &v : scan(IntRange{3, 3}, IntRange{2, 17})) {
        EXPECT_FALSE(v.ruled_out) << v.params.n();
        EXPECT_TRUE(v.scott_satisfied);
    }
}

TEST(scan, ordering_and_empty_ranges) {
    auto verdicts = scan(IntRange{2, 3}, IntRange{4, 5});
    ASSERT_EQ(verdicts.size(), 4u);
    EXPECT_EQ(verdicts[0].params, SystemParams(4, 2));
    EXPECT_EQ(verdicts[1].params, SystemParams(5, 2));
    EXPECT_EQ(verdicts[2].params, SystemParams(4, 3));
    EXPECT_EQ(verdicts[3].params, SystemParams(5, 3));
    EXPECT_TRUE(scan(IntRange{3, 2}, IntRange{2, 5}).empty());
    EXPECT_TRUE(scan(IntRange{2, 5}, IntRange{}).empty());
    EXPECT_THROW(scan(IntRange{1, 3}, IntRange{2, 5}), std::invalid_argument);
}

TEST(scan, deterministic) {
    auto a = scan(IntRange{2, 4}, IntRange{2, 20});
    auto b = scan(IntRange{2, 4}, IntRange{2, 20});
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        EXPECT_EQ(a[k].params, b[k].params);
        EXPECT_EQ(a[k].witness_i, b[k].witness_i);
        EXPECT_EQ(a[k].profile.traces, b[k].profile.traces);
    }
}

TEST(scan, scott_violation_always_has_i2_witness) {
    for (const auto &v : scan(IntRange{2, 7}, IntRange{2, 40})) {
        if (!v.scott_satisfied) {
            ASSERT_EQ(v.witness_i, 2) << "n=" << v.params.n() << " d=" << v.params.d();
        }
        ASSERT_EQ(v.ruled_out, v.witness_i.has_value());
        if (v.witness_i) {
            ASSERT_LT(v.profile.trace(*v.witness_i).sign(), 0);
        }
    }
}

TEST(first_negative_claim, qubit_table) {
    auto report = first_negative_claim_holds(IntRange{2, 2}, IntRange{2, 13});
    EXPECT_TRUE(report.holds);
    EXPECT_EQ(report.points_examined, 12);
    EXPECT_EQ(report.points_with_negative, 4);
    EXPECT_TRUE(report.counterexamples.empty());
}

TEST(first_negative_claim, vacuous_without_negatives) {
    auto report = first_negative_claim_holds(IntRange{5, 5}, IntRange{2, 12});
    EXPECT_TRUE(report.holds);
    EXPECT_EQ(report.points_with_negative, 0);
}

TEST(first_negative_claim, reports_counterexamples) {
    // Synthetic verdict whose first negative trace sits at i = 3.
    auto verdict = check(SystemParams(9, 2));
    verdict.profile.traces[2] = -1;
    verdict.ruled_out = true;
    verdict.witness_i = 3;
    auto report = first_negative_claim_holds(std::vector<ExistenceVerdict>{verdict});
    EXPECT_FALSE(report.holds);
    ASSERT_EQ(report.counterexamples.size(), 1u);
    EXPECT_EQ(report.counterexamples[0].first_negative_i, 3);
}
