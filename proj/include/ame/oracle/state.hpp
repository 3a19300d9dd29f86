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

#ifndef AME_ORACLE_STATE_HPP
#define AME_ORACLE_STATE_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace ame::oracle {

using Complex = std::complex<double>;

/// Ordered list of site indices; the first entry is the least significant digit of a reduced index.
using SiteSet = std::vector<int>;

/// Largest Hilbert-space dimension d^n accepted anywhere in the oracle.
inline constexpr std::int64_t kMaxStateDimension = 1'000'000;

class NormalizationError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// d^n, or -1 when it exceeds `cap`.
std::int64_t checked_power(int d, int n, std::int64_t cap = kMaxStateDimension);

/// Dense pure state of n qudits. Basis label (s_0, ..., s_{n-1}) lives at index sum_j s_j d^j.
class StateVector {
   public:
    /// Throws std::invalid_argument on bad n, d or length, std::length_error beyond
    /// kMaxStateDimension, and NormalizationError when |sum |a|^2 - 1| > tolerance.
    StateVector(int n, int d, std::vector<Complex> amplitudes, double tolerance = 1e-12);

    int n() const { return n_; }
    int d() const { return d_; }
    std::size_t dimension() const { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    const Complex &operator[](std::size_t index) const { return amplitudes_[index]; }

   private:
    int n_;
    int d_;
    std::vector<Complex> amplitudes_;
};

struct DensityMatrix {
    SiteSet parties;
    int d = 2;
    Eigen::MatrixXcd entries;

    Eigen::Index dimension() const { return entries.rows(); }
    double purity() const;
    double hermiticity_deviation() const;
    double trace_deviation() const;
    double min_eigenvalue() const;
    /// Hermitian and unit trace within 1e-12, positive semidefinite within 1e-9.
    bool satisfies_invariants() const;
};

/// Reduced state on `keep`, tracing out every other site.
/// Throws std::out_of_range for sites outside [0, n) and std::invalid_argument for
/// duplicates or an empty keep-set.
DensityMatrix partial_trace(const StateVector &state, std::span<const int> keep);

/// tr(rho_T^2) without materialising a validated DensityMatrix; the empty set gives 1.
double subsystem_purity(const StateVector &state, std::span<const int> sites);

/// All k-element subsets of {0, ..., n-1} in lexicographic order.
std::vector<SiteSet> subsets_of_size(int n, int k);

SiteSet mask_to_sites(std::uint32_t mask);
std::uint32_t sites_to_mask(std::span<const int> sites);

struct UniformityReport {
    bool uniform = true;
    /// Largest |rho_T - d^-k I| entry seen over the examined k-subsets.
    double max_deviation = 0.0;
};

/// Checks that every k-party reduction is maximally mixed within `tolerance`.
/// With stop_at_first_failure the scan ends at the first offending subset.
UniformityReport k_uniformity(const StateVector &state, int k, double tolerance = 1e-9,
                              bool stop_at_first_failure = false);

/// Max-entry deviation of rho_A^2 - d^-k rho_A with k = n - |keep|.
/// Throws std::invalid_argument when |keep| < n - floor(n/2).
double projector_property_residual(const StateVector &state, std::span<const int> keep);

}  // namespace ame::oracle

#endif  // AME_ORACLE_STATE_HPP
