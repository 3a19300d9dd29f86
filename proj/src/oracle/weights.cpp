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

#include "ame/oracle/weights.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ame::oracle {

namespace {

void require_distribution_size(const StateVector &state) {
    if (state.n() > kMaxDistributionParties) {
        throw std::length_error("weight distribution limited to n <= " + std::to_string(kMaxDistributionParties));
    }
}

}  // namespace

double subset_weight_trace(const StateVector &state, std::span<const int> sites) {
    if (sites.empty()) {
        throw std::invalid_argument("subset_weight_trace: support must be nonempty");
    }
    const SiteSet support(sites.begin(), sites.end());
    const auto size = static_cast<int>(support.size());
    const double d = state.d();
    // Validates the sites as a side effect.
    (void)subsystem_purity(state, support);

    double sum = 0.0;
    for (std::uint32_t sub = 0; sub < (1U << size); ++sub) {
        SiteSet part;
        for (int bit = 0; bit < size; ++bit) {
            if (sub & (1U << bit)) {
                part.push_back(support[static_cast<std::size_t>(bit)]);
            }
        }
        const int part_size = static_cast<int>(part.size());
        const double sign = (size - part_size) % 2 == 0 ? 1.0 : -1.0;
        sum += sign * std::pow(d, part_size) * subsystem_purity(state, part);
    }
    return std::pow(d, size) * sum;
}

WeightDistribution::WeightDistribution(int n, int d, std::vector<double> by_mask)
    : n_(n), d_(d), by_mask_(std::move(by_mask)) {
    if (by_mask_.size() != (std::size_t{1} << n)) {
        throw std::invalid_argument("WeightDistribution: table size must be 2^n");
    }
}

std::vector<double> WeightDistribution::of_weight(int w) const {
    std::vector<double> out;
    for (const auto &subset : subsets_of_size(n_, w)) {
        out.push_back(at(subset));
    }
    return out;
}

double WeightDistribution::total_of_weight(int w) const {
    double total = 0.0;
    for (double value : of_weight(w)) {
        total += value;
    }
    return total;
}

double WeightDistribution::max_difference(const WeightDistribution &other) const {
    if (other.n_ != n_) {
        throw std::invalid_argument("WeightDistribution: party counts differ");
    }
    double worst = 0.0;
    for (std::size_t mask = 1; mask < by_mask_.size(); ++mask) {
        worst = std::max(worst, std::abs(by_mask_[mask] - other.by_mask_[mask]));
    }
    return worst;
}

WeightDistribution weight_distribution(const StateVector &state) {
    require_distribution_size(state);
    const int n = state.n();
    const double d = state.d();
    const std::uint32_t count = 1U << n;

    // f(T) = d^|T| tr(rho_T^2), then an in-place subset Moebius transform.
    std::vector<double> table(count);
    for (std::uint32_t mask = 0; mask < count; ++mask) {
        table[mask] = std::pow(d, std::popcount(mask)) * subsystem_purity(state, mask_to_sites(mask));
    }
    for (int bit = 0; bit < n; ++bit) {
        for (std::uint32_t mask = 0; mask < count; ++mask) {
            if (mask & (1U << bit)) {
                table[mask] -= table[mask ^ (1U << bit)];
            }
        }
    }
    for (std::uint32_t mask = 0; mask < count; ++mask) {
        table[mask] *= std::pow(d, std::popcount(mask));
    }
    return WeightDistribution(n, state.d(), std::move(table));
}

std::vector<SparseOperator> hermitian_generator_basis(int d) {
    if (d < 2) {
        throw std::invalid_argument("hermitian_generator_basis: d must be >= 2");
    }
    const double scale = std::sqrt(d / 2.0);
    const Complex i_unit(0.0, 1.0);
    std::vector<SparseOperator> basis;
    basis.reserve(static_cast<std::size_t>(d * d - 1));
    for (int j = 0; j < d; ++j) {
        for (int k = j + 1; k < d; ++k) {
            basis.push_back({{{j, k, scale}, {k, j, scale}}});
            basis.push_back({{{j, k, -i_unit * scale}, {k, j, i_unit * scale}}});
        }
    }
    for (int l = 1; l < d; ++l) {
        const double norm = scale * std::sqrt(2.0 / (l * (l + 1.0)));
        SparseOperator diag;
        for (int j = 0; j < l; ++j) {
            diag.entries.push_back({j, j, norm});
        }
        diag.entries.push_back({l, l, -l * norm});
        basis.push_back(std::move(diag));
    }
    return basis;
}

WeightDistribution basis_weight_distribution(const StateVector &state) {
    require_distribution_size(state);
    const int n = state.n();
    const int d = state.d();
    const auto basis = hermitian_generator_basis(d);
    const auto generators = static_cast<int>(basis.size());
    const std::uint32_t count = 1U << n;

    std::vector<double> table(count, 0.0);
    table[0] = 1.0;
    for (std::uint32_t mask = 1; mask < count; ++mask) {
        const SiteSet support = mask_to_sites(mask);
        const auto size = static_cast<int>(support.size());
        const DensityMatrix rho = partial_trace(state, support);

        // Odometer over generator labels, one per site of the support.
        std::vector<int> labels(static_cast<std::size_t>(size), 0);
        double squared = 0.0;
        while (true) {
            // tr(rho sigma) = sum over nonzeros (r, c) of sigma: rho(c, r) sigma(r, c).
            Complex expectation = 0.0;
            std::vector<std::size_t> cursor(static_cast<std::size_t>(size), 0);
            while (true) {
                std::int64_t row = 0;
                std::int64_t col = 0;
                std::int64_t stride = 1;
                Complex value = 1.0;
                for (int t = 0; t < size; ++t) {
                    const auto &entry = basis[static_cast<std::size_t>(labels[static_cast<std::size_t>(t)])]
                                            .entries[cursor[static_cast<std::size_t>(t)]];
                    row += entry.row * stride;
                    col += entry.col * stride;
                    value *= entry.value;
                    stride *= d;
                }
                expectation += rho.entries(col, row) * value;

                int t = 0;
                for (; t < size; ++t) {
                    const auto &ops =
                        basis[static_cast<std::size_t>(labels[static_cast<std::size_t>(t)])].entries;
                    if (++cursor[static_cast<std::size_t>(t)] < ops.size()) {
                        break;
                    }
                    cursor[static_cast<std::size_t>(t)] = 0;
                }
                if (t == size) {
                    break;
                }
            }
            squared += expectation.real() * expectation.real();

            int t = 0;
            for (; t < size; ++t) {
                if (++labels[static_cast<std::size_t>(t)] < generators) {
                    break;
                }
                labels[static_cast<std::size_t>(t)] = 0;
            }
            if (t == size) {
                break;
            }
        }
        table[mask] = std::pow(static_cast<double>(d), size) * squared;
    }
    return WeightDistribution(n, d, std::move(table));
}

}  // namespace ame::oracle
