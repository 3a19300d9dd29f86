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

#ifndef AME_ENUMERATOR_HPP
#define AME_ENUMERATOR_HPP

#include <cstdint>
#include <vector>

#include "ame/exact.hpp"

namespace ame {

/// Party count n and local dimension d of a candidate AME(n, d) state.
/// The half-size m = floor(n / 2) is always derived, never stored.
class SystemParams {
   public:
    /// Throws std::invalid_argument unless n >= 2 and d >= 2.
    SystemParams(std::int64_t n, std::int64_t d);

    std::int64_t n() const { return n_; }
    std::int64_t d() const { return d_; }
    std::int64_t m() const { return n_ / 2; }
    /// Largest admissible weight offset i; weight m + i then covers the full state.
    std::int64_t max_i() const { return n_ - m(); }

    friend bool operator==(const SystemParams &, const SystemParams &) = default;

   private:
    std::int64_t n_;
    std::int64_t d_;
};

/// Dense square matrix of exact rationals, row-major, 0-based storage.
using RationalMatrix = std::vector<std::vector<ExactRational>>;

RationalMatrix multiply(const RationalMatrix &lhs, const RationalMatrix &rhs);
RationalMatrix identity_matrix(std::size_t size);

enum class SystemFlavor {
    /// Purity system: unknowns are the weight traces tr(P_{m+j}^2).
    kTrace,
    /// Eigenvalue system: unknowns are the eigenvalues lambda_{m+j}.
    kEigenvalue,
};

/// Lower-triangular linear system linking weight invariants to reduced-state purities.
///
/// Row l (1-based) of the trace flavor reads
///   sum_{j<=l} d^(-2m-l-j) C(m+l, m+j) x_j = d^(-(n-m-l)) - d^(-(m+l)),
/// and the eigenvalue flavor replaces the coefficient power by d^(-m-l).
struct TriangularSystem {
    SystemParams params;
    SystemFlavor flavor;
    RationalMatrix matrix;
    std::vector<ExactRational> rhs;

    std::size_t size() const { return rhs.size(); }
};

/// Throws std::out_of_range unless 1 <= i <= params.max_i().
TriangularSystem build_system(const SystemParams &params, std::int64_t i, SystemFlavor flavor);

/// Inverse from the closed-form entries (-1)^(l+j) d^(2m+l+j) C(m+l, m+j) (trace flavor) or
/// (-1)^(l+j) d^(m+j) C(m+l, m+j) (eigenvalue flavor). Not computed by elimination; callers
/// that need certainty multiply it back against the system matrix.
RationalMatrix explicit_inverse(const TriangularSystem &system);

/// Exact forward substitution. Throws std::domain_error on a zero pivot.
std::vector<ExactRational> forward_substitute(const TriangularSystem &system);

/// Weight invariants for i = 1..size(): traces[i-1] = tr(P_{m+i}^2), eigenvalues[i-1] = lambda_{m+i}.
struct WeightTraceProfile {
    SystemParams params;
    std::vector<ExactRational> traces;
    std::vector<ExactRational> eigenvalues;

    std::int64_t size() const { return static_cast<std::int64_t>(traces.size()); }
    const ExactRational &trace(std::int64_t i) const { return traces.at(static_cast<std::size_t>(i - 1)); }
    const ExactRational &eigenvalue(std::int64_t i) const {
        return eigenvalues.at(static_cast<std::size_t>(i - 1));
    }
};

/// Solves both triangular systems by forward substitution (never via the closed forms).
WeightTraceProfile solve_traces(const SystemParams &params, std::int64_t i_max);
inline WeightTraceProfile solve_traces(const SystemParams &params) { return solve_traces(params, params.max_i()); }

/// Hypergeometric closed form for tr(P_{m+i}^2).
ExactRational trace_closed_form(const SystemParams &params, std::int64_t i);

/// Hypergeometric closed form for lambda_{m+i}.
ExactRational eigenvalue_closed_form(const SystemParams &params, std::int64_t i);

/// Piecewise polynomial form of tr(P_{m+2}^2); its sign reproduces the Scott bound.
/// Throws std::out_of_range when m + 2 > n.
ExactRational trace_i2_specialization(const SystemParams &params);

/// d^(-2n) [d^n + sum_i C(n, m+i) d^(n-m-i) tr(P_{m+i}^2)] - 1, using solved traces.
ExactRational purity_identity_residual(const SystemParams &params);

}  // namespace ame

#endif  // AME_ENUMERATOR_HPP
