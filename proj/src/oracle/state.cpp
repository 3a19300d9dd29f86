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

#include "ame/oracle/state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

namespace ame::oracle {

namespace {

void validate_sites(int n, std::span<const int> sites) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int site : sites) {
        if (site < 0 || site >= n) {
            throw std::out_of_range("site " + std::to_string(site) + " outside [0, " + std::to_string(n) + ")");
        }
        if (seen[static_cast<std::size_t>(site)]) {
            throw std::invalid_argument("duplicate site " + std::to_string(site));
        }
        seen[static_cast<std::size_t>(site)] = true;
    }
}

// Amplitudes reshaped as (kept index) x (traced index); rho_keep = M M^dagger.
Eigen::MatrixXcd reshape_for(const StateVector &state, std::span<const int> keep) {
    const int n = state.n();
    const int d = state.d();
    std::vector<std::int64_t> kept_stride(static_cast<std::size_t>(n), 0);
    std::vector<std::int64_t> traced_stride(static_cast<std::size_t>(n), 0);
    std::int64_t kept_dim = 1;
    for (int site : keep) {
        kept_stride[static_cast<std::size_t>(site)] = kept_dim;
        kept_dim *= d;
    }
    std::int64_t traced_dim = 1;
    for (int site = 0; site < n; ++site) {
        if (std::find(keep.begin(), keep.end(), site) == keep.end()) {
            traced_stride[static_cast<std::size_t>(site)] = traced_dim;
            traced_dim *= d;
        }
    }

    Eigen::MatrixXcd reshaped(kept_dim, traced_dim);
    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    std::int64_t row = 0;
    std::int64_t col = 0;
    for (std::size_t index = 0; index < state.dimension(); ++index) {
        reshaped(row, col) = state[index];
        // Odometer increment over the digits, party 0 fastest.
        for (int site = 0; site < n; ++site) {
            auto &digit = digits[static_cast<std::size_t>(site)];
            const auto s = static_cast<std::size_t>(site);
            if (++digit < d) {
                row += kept_stride[s];
                col += traced_stride[s];
                break;
            }
            digit = 0;
            row -= kept_stride[s] * (d - 1);
            col -= traced_stride[s] * (d - 1);
        }
    }
    return reshaped;
}

}  // namespace

std::int64_t checked_power(int d, int n, std::int64_t cap) {
    std::int64_t out = 1;
    for (int k = 0; k < n; ++k) {
        out *= d;
        if (out > cap) {
            return -1;
        }
    }
    return out;
}

StateVector::StateVector(int n, int d, std::vector<Complex> amplitudes, double tolerance)
    : n_(n), d_(d), amplitudes_(std::move(amplitudes)) {
    if (n < 1 || d < 2) {
        throw std::invalid_argument("StateVector: need n >= 1 and d >= 2");
    }
    if (n > 31) {
        throw std::length_error("StateVector: too many parties");
    }
    const std::int64_t dim = checked_power(d, n);
    if (dim < 0) {
        throw std::length_error("StateVector: d^n exceeds " + std::to_string(kMaxStateDimension));
    }
    if (static_cast<std::int64_t>(amplitudes_.size()) != dim) {
        throw std::invalid_argument("StateVector: expected " + std::to_string(dim) + " amplitudes, got " +
                                    std::to_string(amplitudes_.size()));
    }
    double norm = 0.0;
    for (const auto &a : amplitudes_) {
        norm += std::norm(a);
    }
    if (!(std::abs(norm - 1.0) <= tolerance)) {
        throw NormalizationError("StateVector: squared norm " + std::to_string(norm) + " differs from 1");
    }
}

double DensityMatrix::purity() const { return entries.squaredNorm(); }

double DensityMatrix::hermiticity_deviation() const {
    return (entries - entries.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::trace_deviation() const { return std::abs(entries.trace() - Complex(1.0, 0.0)); }

double DensityMatrix::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(entries, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

bool DensityMatrix::satisfies_invariants() const {
    return hermiticity_deviation() <= 1e-12 && trace_deviation() <= 1e-12 && min_eigenvalue() >= -1e-9;
}

DensityMatrix partial_trace(const StateVector &state, std::span<const int> keep) {
    if (keep.empty()) {
        throw std::invalid_argument("partial_trace: keep-set is empty");
    }
    validate_sites(state.n(), keep);
    Eigen::MatrixXcd reshaped = reshape_for(state, keep);
    return DensityMatrix{SiteSet(keep.begin(), keep.end()), state.d(), reshaped * reshaped.adjoint()};
}

double subsystem_purity(const StateVector &state, std::span<const int> sites) {
    if (sites.empty()) {
        return 1.0;
    }
    validate_sites(state.n(), sites);
    Eigen::MatrixXcd reshaped = reshape_for(state, sites);
    // tr((M M^+)^2) = ||M^+ M||_F^2; pick the cheaper Gram matrix.
    if (reshaped.rows() <= reshaped.cols()) {
        return (reshaped * reshaped.adjoint()).squaredNorm();
    }
    return (reshaped.adjoint() * reshaped).squaredNorm();
}

std::vector<SiteSet> subsets_of_size(int n, int k) {
    std::vector<SiteSet> out;
    if (k < 0 || k > n) {
        return out;
    }
    SiteSet current(static_cast<std::size_t>(k));
    std::iota(current.begin(), current.end(), 0);
    while (true) {
        out.push_back(current);
        int pos = k - 1;
        while (pos >= 0 && current[static_cast<std::size_t>(pos)] == n - k + pos) {
            --pos;
        }
        if (pos < 0) {
            break;
        }
        ++current[static_cast<std::size_t>(pos)];
        for (int q = pos + 1; q < k; ++q) {
            current[static_cast<std::size_t>(q)] = current[static_cast<std::size_t>(q - 1)] + 1;
        }
    }
    return out;
}

SiteSet mask_to_sites(std::uint32_t mask) {
    SiteSet out;
    for (int site = 0; mask != 0; ++site, mask >>= 1) {
        if (mask & 1U) {
            out.push_back(site);
        }
    }
    return out;
}

std::uint32_t sites_to_mask(std::span<const int> sites) {
    std::uint32_t mask = 0;
    for (int site : sites) {
        mask |= 1U << site;
    }
    return mask;
}

UniformityReport k_uniformity(const StateVector &state, int k, double tolerance, bool stop_at_first_failure) {
    if (k < 1 || k > state.n() - 1) {
        throw std::invalid_argument("k_uniformity: k must lie in [1, n-1]");
    }
    UniformityReport report;
    const double level = std::pow(static_cast<double>(state.d()), -k);
    for (const auto &subset : subsets_of_size(state.n(), k)) {
        DensityMatrix rho = partial_trace(state, subset);
        rho.entries.diagonal().array() -= level;
        const double deviation = rho.entries.cwiseAbs().maxCoeff();
        report.max_deviation = std::max(report.max_deviation, deviation);
        if (deviation > tolerance) {
            report.uniform = false;
            if (stop_at_first_failure) {
                break;
            }
        }
    }
    return report;
}

double projector_property_residual(const StateVector &state, std::span<const int> keep) {
    const int n = state.n();
    const int keep_size = static_cast<int>(keep.size());
    if (keep_size < n - n / 2) {
        throw std::invalid_argument("projector_property_residual: keep-set smaller than n - floor(n/2)");
    }
    const DensityMatrix rho = partial_trace(state, keep);
    const double scale = std::pow(static_cast<double>(state.d()), -(n - keep_size));
    return (rho.entries * rho.entries - scale * rho.entries).cwiseAbs().maxCoeff();
}

}  // namespace ame::oracle
