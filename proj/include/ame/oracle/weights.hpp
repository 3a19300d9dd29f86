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

#ifndef AME_ORACLE_WEIGHTS_HPP
#define AME_ORACLE_WEIGHTS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "ame/oracle/state.hpp"

namespace ame::oracle {

/// Largest party count for which the full per-subset distribution is tabulated.
inline constexpr int kMaxDistributionParties = 20;

/// tr(P_S^2) for the Bloch component supported exactly on S, obtained by Moebius
/// inversion of subsystem purities:
///   tr(P_S^2) = d^|S| sum_{T subset S} (-1)^(|S|-|T|) d^|T| tr(rho_T^2).
double subset_weight_trace(const StateVector &state, std::span<const int> sites);

/// Per-support weight traces of a pure state, indexed by site bitmask.
class WeightDistribution {
   public:
    WeightDistribution(int n, int d, std::vector<double> by_mask);

    int n() const { return n_; }
    int d() const { return d_; }
    double at(std::uint32_t mask) const { return by_mask_.at(mask); }
    double at(std::span<const int> sites) const { return at(sites_to_mask(sites)); }
    /// Values for every support of size w, in lexicographic subset order.
    std::vector<double> of_weight(int w) const;
    /// Sum over all supports of size w.
    double total_of_weight(int w) const;
    /// Largest |difference| between this and `other` over all supports.
    double max_difference(const WeightDistribution &other) const;

   private:
    int n_;
    int d_;
    std::vector<double> by_mask_;
};

/// Moebius path over all 2^n subsystem purities. Throws std::length_error when n exceeds
/// kMaxDistributionParties (the state itself already caps d^n).
WeightDistribution weight_distribution(const StateVector &state);

/// One-site operator with few nonzero entries.
struct SparseOperator {
    struct Entry {
        int row;
        int col;
        Complex value;
    };
    std::vector<Entry> entries;
};

/// Traceless Hermitian generators (generalised Gell-Mann, rescaled) with tr(g_a g_b) = d delta_ab.
/// For d = 2 these are X, Y, Z.
std::vector<SparseOperator> hermitian_generator_basis(int d);

/// Cross-check path: expands every reduction in the generator basis and sums the squared
/// coefficients of operators supported exactly on S.
WeightDistribution basis_weight_distribution(const StateVector &state);

}  // namespace ame::oracle

#endif  // AME_ORACLE_WEIGHTS_HPP
