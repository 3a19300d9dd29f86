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

#include "ame/exact.hpp"

#include <stdexcept>

namespace ame {

namespace {

static_assert(sizeof(long) == sizeof(std::int64_t), "BigInt conversions assume a 64-bit long");

BigInt to_big(std::int64_t value) { return BigInt(static_cast<long>(value)); }

}  // namespace

ExactRational::ExactRational(std::int64_t value) : value_(to_big(value)) {}

ExactRational::ExactRational(const BigInt &value) : value_(value) {}

ExactRational::ExactRational(const BigInt &numerator, const BigInt &denominator) {
    if (denominator == 0) {
        throw std::domain_error("ExactRational: zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

ExactRational ExactRational::parse(const std::string &text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return ExactRational(BigInt(text));
        }
        return ExactRational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::invalid_argument &) {
        throw std::invalid_argument("ExactRational: cannot parse '" + text + "'");
    }
}

ExactRational ExactRational::power(std::int64_t base, std::int64_t exponent) {
    BigInt b = to_big(base);
    std::uint64_t magnitude = exponent < 0 ? static_cast<std::uint64_t>(-exponent) : static_cast<std::uint64_t>(exponent);
    BigInt p;
    mpz_pow_ui(p.get_mpz_t(), b.get_mpz_t(), magnitude);
    if (exponent >= 0) {
        return ExactRational(p);
    }
    return ExactRational(BigInt(1), p);
}

BigInt ExactRational::numerator() const { return value_.get_num(); }

BigInt ExactRational::denominator() const { return value_.get_den(); }

int ExactRational::sign() const { return sgn(value_); }

bool ExactRational::is_integer() const { return value_.get_den() == 1; }

std::string ExactRational::to_string() const {
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

double ExactRational::to_double() const { return value_.get_d(); }

ExactRational ExactRational::operator-() const {
    ExactRational out;
    out.value_ = -value_;
    return out;
}

ExactRational &ExactRational::operator+=(const ExactRational &other) {
    value_ += other.value_;
    return *this;
}

ExactRational &ExactRational::operator-=(const ExactRational &other) {
    value_ -= other.value_;
    return *this;
}

ExactRational &ExactRational::operator*=(const ExactRational &other) {
    value_ *= other.value_;
    return *this;
}

ExactRational &ExactRational::operator/=(const ExactRational &other) {
    if (other.is_zero()) {
        throw std::domain_error("ExactRational: division by zero");
    }
    value_ /= other.value_;
    return *this;
}

bool operator==(const ExactRational &lhs, const ExactRational &rhs) { return lhs.value_ == rhs.value_; }

std::strong_ordering operator<=>(const ExactRational &lhs, const ExactRational &rhs) {
    int c = cmp(lhs.value_, rhs.value_);
    if (c < 0) {
        return std::strong_ordering::less;
    }
    if (c > 0) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::ostream &operator<<(std::ostream &out, const ExactRational &value) { return out << value.to_string(); }

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) {
        throw std::invalid_argument("binomial: n must be nonnegative");
    }
    if (k < 0 || k > n) {
        return 0;
    }
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

ExactRational hyp2f1_terminating(std::int64_t c, std::int64_t i, const ExactRational &z) {
    if (i < 1 || c < 1) {
        throw std::invalid_argument("hyp2f1_terminating: requires i >= 1 and c >= 1");
    }
    // term_{k+1} = term_k * (1 + k)(1 - i + k) / ((c + k)(1 + k)) * z; the (1)_k and k! factors cancel.
    ExactRational sum = 0;
    ExactRational term = 1;
    for (std::int64_t k = 0; k < i; ++k) {
        sum += term;
        term *= ExactRational(to_big(1 - i + k), to_big(c + k));
        term *= z;
    }
    return sum;
}

}  // namespace ame
