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

#include <map>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"

#include "ame/enumerator.hpp"

using namespace ame;

namespace {

ExactRational q(const char *text) { return ExactRational::parse(text); }

// tr(P_{m+i}^2) for d = 2, n = 2..13, frozen from an independent exact-fraction
// evaluation of the recursion. Note (12, 4) is -61440.
const std::map<int, std::vector<std::int64_t>> kQubitTraces = {
    {2, {12}},
    {3, {4, 32}},
    {4, {24, 48}},
    {5, {8, 48, 192}},
    {6, {48, 0, 1152}},
    {7, {16, 64, 256, 2816}},
    {8, {96, -192, 2688, 768}},
    {9, {32, 64, 384, 4864, 11264}},
    {10, {192, -768, 6912, -12288, 141312}},
    {11, {64, 0, 768, 8192, 6144, 294912}},
    {12, {384, -2304, 18432, -61440, 405504, -663552}},
    {13, {128, -256, 2048, 12288, -12288, 614400, -98304}},
};

}  // namespace

TEST(system_params, derived_half) {
    SystemParams p(7, 3);
    EXPECT_EQ(p.m(), 3);
    EXPECT_EQ(p.max_i(), 4);
    EXPECT_EQ(SystemParams(8, 2).max_i(), 4);
    EXPECT_THROW(SystemParams(1, 2), std::invalid_argument);
    EXPECT_THROW(SystemParams(4, 1), std::invalid_argument);
}

TEST(build_system, trace_flavor_n3_d2) {
    auto system = build_system(SystemParams(3, 2), 1, SystemFlavor::kTrace);
    ASSERT_EQ(system.size(), 1u);
    EXPECT_EQ(system.matrix[0][0], q("1/16"));
    EXPECT_EQ(system.rhs[0], q("1/4"));
}

TEST(build_system, eigenvalue_flavor_n2_d2) {
    auto system = build_system(SystemParams(2, 2), 1, SystemFlavor::kEigenvalue);
    ASSERT_EQ(system.size(), 1u);
    EXPECT_EQ(system.matrix[0][0], q("1/4"));
    EXPECT_EQ(system.rhs[0], q("3/4"));
}

TEST(build_system, lower_triangular_with_nonzero_diagonal) {
    auto system = build_system(SystemParams(8, 2), 2, SystemFlavor::kTrace);
    ASSERT_EQ(system.size(), 2u);
    EXPECT_TRUE(system.matrix[0][1].is_zero());
    for (std::int64_t n = 2; n <= 15; ++n) {
        for (std::int64_t d = 2; d <= 4; ++d) {
            SystemParams p(n, d);
            for (auto flavor : {SystemFlavor::kTrace, SystemFlavor::kEigenvalue}) {
                auto s = build_system(p, p.max_i(), flavor);
                for (std::size_t l = 0; l < s.size(); ++l) {
                    ASSERT_FALSE(s.matrix[l][l].is_zero());
                    for (std::size_t j = l + 1; j < s.size(); ++j) {
                        ASSERT_TRUE(s.matrix[l][j].is_zero());
                    }
                }
            }
        }
    }
}

TEST(build_system, range_errors) {
    SystemParams p(3, 2);
    EXPECT_THROW(build_system(p, 0, SystemFlavor::kTrace), std::out_of_range);
    EXPECT_THROW(build_system(p, 3, SystemFlavor::kTrace), std::out_of_range);
    EXPECT_NO_THROW(build_system(p, 2, SystemFlavor::kEigenvalue));
}

TEST(explicit_inverse, scalar_case) {
    auto inverse = explicit_inverse(build_system(SystemParams(3, 2), 1, SystemFlavor::kTrace));
    ASSERT_EQ(inverse.size(), 1u);
    EXPECT_EQ(inverse[0][0], ExactRational(16));
}

TEST(explicit_inverse, eigenvalue_flavor_sign) {
    // n=4, d=3, m=2: entry (2,1) = (-1)^3 3^(2+1) C(4,3) = -108.
    auto inverse = explicit_inverse(build_system(SystemParams(4, 3), 2, SystemFlavor::kEigenvalue));
    EXPECT_EQ(inverse[1][0], ExactRational(-108));
    EXPECT_LT(inverse[1][0].sign(), 0);
    EXPECT_EQ(inverse[0][0], ExactRational(27));
    EXPECT_EQ(inverse[1][1], ExactRational(81));
}

TEST(explicit_inverse, multiplies_to_identity) {
    for (std::int64_t n = 2; n <= 20; ++n) {
        for (std::int64_t d = 2; d <= 5; ++d) {
            SystemParams p(n, d);
            for (auto flavor : {SystemFlavor::kTrace, SystemFlavor::kEigenvalue}) {
                auto system = build_system(p, p.max_i(), flavor);
                ASSERT_EQ(multiply(system.matrix, explicit_inverse(system)), identity_matrix(system.size()))
                    << "n=" << n << " d=" << d;
            }
        }
    }
}

TEST(solve_traces, examples) {
    EXPECT_EQ(solve_traces(SystemParams(2, 2)).trace(1), ExactRational(12));
    auto six = solve_traces(SystemParams(6, 2));
    ASSERT_EQ(six.size(), 3);
    EXPECT_EQ(six.trace(1), ExactRational(48));
    EXPECT_TRUE(six.trace(2).is_zero());
    EXPECT_EQ(six.trace(3), ExactRational(1152));
    // Hand forward substitution: x1 = (8/27) 3^6, x2 = (80/81 - 4 x1 / 3^7) 3^8.
    auto ame43 = solve_traces(SystemParams(4, 3));
    EXPECT_EQ(ame43.trace(1), ExactRational(216));
    EXPECT_EQ(ame43.trace(2), ExactRational(3888));
}

TEST(solve_traces, partial_range) {
    auto partial = solve_traces(SystemParams(13, 2), 3);
    ASSERT_EQ(partial.size(), 3);
    EXPECT_EQ(partial.trace(3), ExactRational(2048));
    EXPECT_THROW(solve_traces(SystemParams(13, 2), 8), std::out_of_range);
    EXPECT_THROW(solve_traces(SystemParams(13, 2), 0), std::out_of_range);
}

TEST(solve_traces, qubit_table) {
    for (const auto &[n, row] : kQubitTraces) {
        auto profile = solve_traces(SystemParams(n, 2));
        ASSERT_EQ(profile.size(), static_cast<std::int64_t>(row.size())) << n;
        for (std::size_t k = 0; k < row.size(); ++k) {
            EXPECT_EQ(profile.trace(static_cast<std::int64_t>(k + 1)), ExactRational(row[k])) << "n=" << n << " i=" << k + 1;
        }
    }
}

TEST(solve_traces, inverse_route_agrees) {
    // x = A^-1 T as a third route next to forward substitution and the closed form.
    for (std::int64_t n = 2; n <= 24; ++n) {
        for (std::int64_t d = 2; d <= 5; ++d) {
            SystemParams p(n, d);
            auto system = build_system(p, p.max_i(), SystemFlavor::kTrace);
            auto inverse = explicit_inverse(system);
            auto solved = forward_substitute(system);
            for (std::size_t l = 0; l < system.size(); ++l) {
                ExactRational x = 0;
                for (std::size_t j = 0; j <= l; ++j) {
                    x += inverse[l][j] * system.rhs[j];
                }
                ASSERT_EQ(x, solved[l]) << "n=" << n << " d=" << d << " i=" << l + 1;
            }
        }
    }
}

TEST(trace_closed_form, examples) {
    EXPECT_EQ(trace_closed_form(SystemParams(8, 2), 2), ExactRational(-192));
    EXPECT_EQ(trace_closed_form(SystemParams(13, 2), 7), ExactRational(-98304));
    EXPECT_EQ(trace_closed_form(SystemParams(5, 2), 3), ExactRational(192));
    EXPECT_THROW(trace_closed_form(SystemParams(5, 2), 4), std::out_of_range);
}

TEST(trace_closed_form, matches_forward_substitution) {
    for (std::int64_t n = 2; n <= 25; ++n) {
        for (std::int64_t d = 2; d <= 6; ++d) {
            SystemParams p(n, d);
            auto profile = solve_traces(p);
            for (std::int64_t i = 1; i <= p.max_i(); ++i) {
                ASSERT_EQ(trace_closed_form(p, i), profile.trace(i)) << "n=" << n << " d=" << d << " i=" << i;
            }
        }
    }
}

TEST(trace_i2_specialization, examples) {
    EXPECT_EQ(trace_i2_specialization(SystemParams(8, 2)), ExactRational(-192));
    EXPECT_TRUE(trace_i2_specialization(SystemParams(11, 2)).is_zero());
    EXPECT_EQ(trace_i2_specialization(SystemParams(7, 2)), ExactRational(64));
    EXPECT_EQ(trace_i2_specialization(SystemParams(4, 3)), ExactRational(3888));
    EXPECT_THROW(trace_i2_specialization(SystemParams(2, 2)), std::out_of_range);
}

TEST(eigenvalue_closed_form, examples) {
    EXPECT_EQ(eigenvalue_closed_form(SystemParams(2, 2), 1), ExactRational(3));
    EXPECT_TRUE(eigenvalue_closed_form(SystemParams(6, 2), 2).is_zero());
    EXPECT_EQ(eigenvalue_closed_form(SystemParams(8, 2), 2), ExactRational(-3));
}

TEST(eigenvalue_closed_form, matches_eigenvalue_system) {
    for (std::int64_t n = 2; n <= 20; ++n) {
        for (std::int64_t d = 2; d <= 5; ++d) {
            SystemParams p(n, d);
            auto profile = solve_traces(p);
            for (std::int64_t i = 1; i <= p.max_i(); ++i) {
                ASSERT_EQ(eigenvalue_closed_form(p, i), profile.eigenvalue(i));
                ASSERT_EQ(profile.trace(i), ExactRational::power(d, p.m() + i) * profile.eigenvalue(i));
            }
        }
    }
}

TEST(purity_identity_residual, vanishes) {
    EXPECT_TRUE(purity_identity_residual(SystemParams(4, 3)).is_zero());
    EXPECT_TRUE(purity_identity_residual(SystemParams(7, 2)).is_zero());
    EXPECT_TRUE(purity_identity_residual(SystemParams(13, 2)).is_zero());
    EXPECT_TRUE(purity_identity_residual(SystemParams(2, 7)).is_zero());
}

TEST(forward_substitute, zero_pivot) {
    auto system = build_system(SystemParams(3, 2), 1, SystemFlavor::kTrace);
    system.matrix[0][0] = 0;
    EXPECT_THROW(forward_substitute(system), std::domain_error);
}
