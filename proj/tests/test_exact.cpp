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

#include <random>
#include <stdexcept>

#include "gtest/gtest.h"

#include "ame/exact.hpp"

using namespace ame;

namespace {

// Independent oracle: sum_k (1)_k (1-i)_k / (c)_k z^k / k! with each Pochhammer
// product expanded in full for every term.
ExactRational hyp2f1_by_pochhammer(std::int64_t c, std::int64_t i, const ExactRational &z) {
    auto pochhammer = [](std::int64_t a, std::int64_t k) {
        ExactRational p = 1;
        for (std::int64_t t = 0; t < k; ++t) {
            p *= a + t;
        }
        return p;
    };
    ExactRational sum = 0;
    for (std::int64_t k = 0; k < i; ++k) {
        ExactRational z_power = 1;
        for (std::int64_t t = 0; t < k; ++t) {
            z_power *= z;
        }
        sum += pochhammer(1, k) * pochhammer(1 - i, k) / pochhammer(c, k) * z_power / pochhammer(1, k);
    }
    return sum;
}

bool is_reduced(const ExactRational &value) {
    BigInt g;
    BigInt num = abs(value.numerator());
    BigInt den = value.denominator();
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return den > 0 && (value.is_zero() ? den == 1 : g == 1);
}

}  // namespace

TEST(binomial, examples) {
    EXPECT_EQ(binomial(5, 0), 1);
    EXPECT_EQ(binomial(6, 4), 15);
    EXPECT_EQ(binomial(4, 7), 0);
    EXPECT_EQ(binomial(4, -1), 0);
    EXPECT_EQ(binomial(0, 0), 1);
    EXPECT_EQ(binomial(60, 30), BigInt("118264581564861424"));
}

TEST(binomial, rejects_negative_n) { EXPECT_THROW(binomial(-1, 0), std::invalid_argument); }

TEST(binomial, pascal_rule) {
    for (std::int64_t n = 1; n <= 30; ++n) {
        for (std::int64_t k = 0; k <= n; ++k) {
            ASSERT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k)) << n << "," << k;
        }
    }
}

TEST(exact_rational, canonical_form) {
    ExactRational r(BigInt(6), BigInt(-4));
    EXPECT_EQ(r.numerator(), -3);
    EXPECT_EQ(r.denominator(), 2);
    EXPECT_EQ(r.to_string(), "-3/2");
    EXPECT_EQ(ExactRational(BigInt(8), BigInt(4)).to_string(), "2");
    EXPECT_EQ(ExactRational(BigInt(0), BigInt(-7)).to_string(), "0");
}

TEST(exact_rational, division_by_zero) {
    EXPECT_THROW(ExactRational(BigInt(1), BigInt(0)), std::domain_error);
    ExactRational one = 1;
    EXPECT_THROW(one / ExactRational(0), std::domain_error);
    EXPECT_THROW(ExactRational::power(0, -1), std::domain_error);
}

TEST(exact_rational, parse_and_power) {
    EXPECT_EQ(ExactRational::parse("-12/8"), ExactRational(BigInt(-3), BigInt(2)));
    EXPECT_EQ(ExactRational::parse("42"), ExactRational(42));
    EXPECT_THROW(ExactRational::parse("1/x"), std::invalid_argument);
    EXPECT_EQ(ExactRational::power(2, -3), ExactRational(BigInt(1), BigInt(8)));
    EXPECT_EQ(ExactRational::power(-3, 3), ExactRational(-27));
    EXPECT_EQ(ExactRational::power(7, 0), ExactRational(1));
    EXPECT_EQ(ExactRational::power(2, 100).to_string(), "1267650600228229401496703205376");
}

TEST(exact_rational, ordering) {
    EXPECT_LT(ExactRational::parse("-1/2"), ExactRational(0));
    EXPECT_GT(ExactRational::parse("3/2"), ExactRational(1));
    EXPECT_EQ(ExactRational::parse("-1/2").sign(), -1);
    EXPECT_TRUE(ExactRational(5).is_integer());
    EXPECT_FALSE(ExactRational::parse("5/3").is_integer());
}

TEST(exact_rational, results_stay_reduced) {
    std::mt19937_64 rng(20261015);
    std::uniform_int_distribution<std::int64_t> pick(-50, 50);
    for (int trial = 0; trial < 500; ++trial) {
        std::int64_t den_a = pick(rng);
        std::int64_t den_b = pick(rng);
        if (den_a == 0 || den_b == 0) {
            continue;
        }
        ExactRational a(BigInt(static_cast<long>(pick(rng))), BigInt(static_cast<long>(den_a)));
        ExactRational b(BigInt(static_cast<long>(pick(rng))), BigInt(static_cast<long>(den_b)));
        ASSERT_TRUE(is_reduced(a + b));
        ASSERT_TRUE(is_reduced(a - b));
        ASSERT_TRUE(is_reduced(a * b));
        ASSERT_TRUE(is_reduced(-a));
        if (!b.is_zero()) {
            ASSERT_TRUE(is_reduced(a / b));
            ASSERT_EQ(a / b * b, a);
        }
        ASSERT_EQ(a + b - b, a);
    }
}

TEST(hyp2f1_terminating, examples) {
    EXPECT_EQ(hyp2f1_terminating(3, 1, 4), ExactRational(1));
    // 1 + (1 * -1 / 5) * 4
    EXPECT_EQ(hyp2f1_terminating(5, 2, 4), ExactRational::parse("1/5"));
    // 1 + (-2/4) * 4 + (2 * 2 / 20) * 16 / 2 = 1 - 2 + 8/5
    EXPECT_EQ(hyp2f1_terminating(4, 3, 4), ExactRational::parse("3/5"));
}

TEST(hyp2f1_terminating, single_term_is_one) {
    for (std::int64_t c = 1; c <= 10; ++c) {
        for (auto z : {ExactRational(0), ExactRational(4), ExactRational::parse("-7/3")}) {
            EXPECT_EQ(hyp2f1_terminating(c, 1, z), ExactRational(1));
        }
    }
}

TEST(hyp2f1_terminating, recurrence_matches_pochhammer_products) {
    for (std::int64_t c = 1; c <= 12; ++c) {
        for (std::int64_t i = 1; i <= 12; ++i) {
            for (auto z : {ExactRational(4), ExactRational(49), ExactRational::parse("-2/3"), ExactRational(0)}) {
                ASSERT_EQ(hyp2f1_terminating(c, i, z), hyp2f1_by_pochhammer(c, i, z)) << c << "," << i << "," << z;
            }
        }
    }
}

TEST(hyp2f1_terminating, rejects_bad_parameters) {
    EXPECT_THROW(hyp2f1_terminating(3, 0, 4), std::invalid_argument);
    EXPECT_THROW(hyp2f1_terminating(0, 2, 4), std::invalid_argument);
}
