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

#include "ame/enumerator.hpp"

#include <stdexcept>
#include <string>

namespace ame {

namespace {

void require_offset(const SystemParams &params, std::int64_t i, const char *what) {
    if (i < 1 || i > params.max_i()) {
        throw std::out_of_range(std::string(what) + ": weight offset i=" + std::to_string(i) + " outside [1, " +
                                std::to_string(params.max_i()) + "] for n=" + std::to_string(params.n()));
    }
}

ExactRational sign_power(std::int64_t exponent) { return exponent % 2 == 0 ? 1 : -1; }

// (-1)^i C(i+m, 1+m) [1 + m - d^(2(1+m)-n) (i+m) 2F1(1, 1-i; 2+m; d^2)] / (i+m)
ExactRational hypergeometric_bracket(const SystemParams &params, std::int64_t i) {
    const std::int64_t d = params.d();
    const std::int64_t m = params.m();
    ExactRational series = hyp2f1_terminating(2 + m, i, ExactRational(d * d));
    ExactRational inner = ExactRational(1 + m) - ExactRational::power(d, 2 * (1 + m) - params.n()) * (i + m) * series;
    return sign_power(i) * ExactRational(binomial(i + m, 1 + m)) * inner / (i + m);
}

}  // namespace

SystemParams::SystemParams(std::int64_t n, std::int64_t d) : n_(n), d_(d) {
    if (n < 2 || d < 2) {
        throw std::invalid_argument("SystemParams: need n >= 2 and d >= 2, got n=" + std::to_string(n) +
                                    ", d=" + std::to_string(d));
    }
}

RationalMatrix multiply(const RationalMatrix &lhs, const RationalMatrix &rhs) {
    const std::size_t rows = lhs.size();
    const std::size_t inner = rhs.size();
    const std::size_t cols = inner == 0 ? 0 : rhs.front().size();
    RationalMatrix out(rows, std::vector<ExactRational>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        if (lhs[r].size() != inner) {
            throw std::invalid_argument("multiply: dimension mismatch");
        }
        for (std::size_t k = 0; k < inner; ++k) {
            if (lhs[r][k].is_zero()) {
                continue;
            }
            for (std::size_t c = 0; c < cols; ++c) {
                out[r][c] += lhs[r][k] * rhs[k][c];
            }
        }
    }
    return out;
}

RationalMatrix identity_matrix(std::size_t size) {
    RationalMatrix out(size, std::vector<ExactRational>(size));
    for (std::size_t k = 0; k < size; ++k) {
        out[k][k] = 1;
    }
    return out;
}

TriangularSystem build_system(const SystemParams &params, std::int64_t i, SystemFlavor flavor) {
    require_offset(params, i, "build_system");
    const std::int64_t n = params.n();
    const std::int64_t d = params.d();
    const std::int64_t m = params.m();
    const auto size = static_cast<std::size_t>(i);

    TriangularSystem system{params, flavor, RationalMatrix(size, std::vector<ExactRational>(size)), {}};
    system.rhs.reserve(size);
    for (std::int64_t l = 1; l <= i; ++l) {
        for (std::int64_t j = 1; j <= l; ++j) {
            const std::int64_t exponent = flavor == SystemFlavor::kTrace ? -2 * m - l - j : -m - l;
            system.matrix[l - 1][j - 1] = ExactRational::power(d, exponent) * ExactRational(binomial(m + l, m + j));
        }
        system.rhs.push_back(ExactRational::power(d, -(n - (m + l))) - ExactRational::power(d, -(m + l)));
    }
    return system;
}

RationalMatrix explicit_inverse(const TriangularSystem &system) {
    const auto size = static_cast<std::int64_t>(system.size());
    const std::int64_t d = system.params.d();
    const std::int64_t m = system.params.m();
    RationalMatrix out(system.size(), std::vector<ExactRational>(system.size()));
    for (std::int64_t l = 1; l <= size; ++l) {
        for (std::int64_t j = 1; j <= l; ++j) {
            const std::int64_t exponent = system.flavor == SystemFlavor::kTrace ? 2 * m + l + j : m + j;
            out[l - 1][j - 1] =
                sign_power(l + j) * ExactRational::power(d, exponent) * ExactRational(binomial(m + l, m + j));
        }
    }
    return out;
}

std::vector<ExactRational> forward_substitute(const TriangularSystem &system) {
    std::vector<ExactRational> x;
    x.reserve(system.size());
    for (std::size_t l = 0; l < system.size(); ++l) {
        ExactRational acc = system.rhs[l];
        for (std::size_t j = 0; j < l; ++j) {
            acc -= system.matrix[l][j] * x[j];
        }
        const ExactRational &pivot = system.matrix[l][l];
        if (pivot.is_zero()) {
            throw std::domain_error("forward_substitute: zero pivot in row " + std::to_string(l + 1));
        }
        x.push_back(acc / pivot);
    }
    return x;
}

WeightTraceProfile solve_traces(const SystemParams &params, std::int64_t i_max) {
    require_offset(params, i_max, "solve_traces");
    return WeightTraceProfile{
        params,
        forward_substitute(build_system(params, i_max, SystemFlavor::kTrace)),
        forward_substitute(build_system(params, i_max, SystemFlavor::kEigenvalue)),
    };
}

ExactRational trace_closed_form(const SystemParams &params, std::int64_t i) {
    require_offset(params, i, "trace_closed_form");
    return ExactRational::power(params.d(), i + params.m()) * hypergeometric_bracket(params, i);
}

ExactRational eigenvalue_closed_form(const SystemParams &params, std::int64_t i) {
    require_offset(params, i, "eigenvalue_closed_form");
    return hypergeometric_bracket(params, i);
}

ExactRational trace_i2_specialization(const SystemParams &params) {
    require_offset(params, 2, "trace_i2_specialization");
    const std::int64_t n = params.n();
    const std::int64_t d = params.d();
    const ExactRational half(1, 2);
    if (n % 2 == 1) {
        return half * (d - 1) * ExactRational::power(d, (3 + n) / 2) * (-1 + 2 * d + 2 * d * d - n);
    }
    return half * (d * d - 1) * ExactRational::power(d, 2 + n / 2) * (-2 + 2 * d * d - n);
}

ExactRational purity_identity_residual(const SystemParams &params) {
    const std::int64_t n = params.n();
    const std::int64_t d = params.d();
    const std::int64_t m = params.m();
    const WeightTraceProfile profile = solve_traces(params);
    ExactRational total = ExactRational::power(d, n);
    for (std::int64_t i = 1; i <= profile.size(); ++i) {
        total += ExactRational(binomial(n, m + i)) * ExactRational::power(d, n - (m + i)) * profile.trace(i);
    }
    return ExactRational::power(d, -2 * n) * total - 1;
}

}  // namespace ame
