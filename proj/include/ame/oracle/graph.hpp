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

#ifndef AME_ORACLE_GRAPH_HPP
#define AME_ORACLE_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ame/oracle/state.hpp"

namespace ame::oracle {

/// Weighted undirected graph on n qudits; edge weights live in {0, ..., d-1}.
struct GraphSpec {
    int n = 0;
    int d = 2;
    std::vector<std::vector<int>> adjacency;

    /// Throws std::invalid_argument unless the matrix is n x n, symmetric, zero on the
    /// diagonal and has entries in [0, d).
    void validate() const;

    static GraphSpec empty(int n, int d);
    /// Cycle 0-1-...-(n-1)-0 with unit weights.
    static GraphSpec ring(int n, int d);

    friend bool operator==(const GraphSpec &, const GraphSpec &) = default;
};

/// Uniform superposition followed by the phase exp(2 pi i A_uv s_u s_v / d) on every edge.
StateVector graph_state(const GraphSpec &spec);

inline constexpr std::int64_t kMaxSearchStateDimension = 10'000;
inline constexpr std::int64_t kMaxSearchCandidates = 10'000'000;

/// Exhaustive search over all weighted adjacency matrices whose graph state is
/// floor(n/2)-uniform. Candidate t assigns edge e (pairs (u, v), u < v, in lexicographic
/// order) the e-th base-d digit of t, least significant first; results keep that order.
/// Throws std::length_error when d^n or d^(n(n-1)/2) exceeds the search limits.
std::vector<GraphSpec> find_ame_graph(int n, int d, std::optional<std::size_t> limit = std::nullopt);

}  // namespace ame::oracle

#endif  // AME_ORACLE_GRAPH_HPP
