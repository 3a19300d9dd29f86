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

#ifndef AME_EXACT_HPP
#define AME_EXACT_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace ame {

using BigInt = mpz_class;

/// Arbitrary-precision signed rational, always kept in lowest terms with a
/// positive denominator. Thin value-semantic wrapper over GMP's mpq.
class ExactRational {
   public:
    ExactRational() = default;
    ExactRational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    explicit ExactRational(const BigInt &value);
    /// Throws std::domain_error when `denominator` is zero.
    ExactRational(const BigInt &numerator, const BigInt &denominator);

    /// Parses "p" or "p/q".
    static ExactRational parse(const std::string &text);

    /// base^exponent for any integer exponent; negative exponents invert.
    static ExactRational power(std::int64_t base, std::int64_t exponent);

    BigInt numerator() const;
    BigInt denominator() const;

    int sign() const;
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const;

    /// "p" when the denominator is one, "p/q" otherwise.
    std::string to_string() const;
    double to_double() const;

    ExactRational operator-() const;
    ExactRational &operator+=(const ExactRational &other);
    ExactRational &operator-=(const ExactRational &other);
    ExactRational &operator*=(const ExactRational &other);
    /// Throws std::domain_error on division by zero.
    ExactRational &operator/=(const ExactRational &other);

    friend ExactRational operator+(ExactRational lhs, const ExactRational &rhs) { return lhs += rhs; }
    friend ExactRational operator-(ExactRational lhs, const ExactRational &rhs) { return lhs -= rhs; }
    friend ExactRational operator*(ExactRational lhs, const ExactRational &rhs) { return lhs *= rhs; }
    friend ExactRational operator/(ExactRational lhs, const ExactRational &rhs) { return lhs /= rhs; }

    friend bool operator==(const ExactRational &lhs, const ExactRational &rhs);
    friend std::strong_ordering operator<=>(const ExactRational &lhs, const ExactRational &rhs);

   private:
    mpq_class value_{0};
};

std::ostream &operator<<(std::ostream &out, const ExactRational &value);

/// C(n, k) for n >= 0; zero when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// Terminating Gauss series 2F1(1, 1 - i; c; z), a sum of exactly i terms.
/// Throws std::invalid_argument when i < 1 or c < 1.
ExactRational hyp2f1_terminating(std::int64_t c, std::int64_t i, const ExactRational &z);

}  // namespace ame

#endif  // AME_EXACT_HPP
