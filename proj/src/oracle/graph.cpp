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

#include "ame/oracle/graph.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace ame::oracle {

void GraphSpec::validate() const {
    if (n < 1 || d < 2) {
        throw std::invalid_argument("GraphSpec: need n >= 1 and d >= 2");
    }
    if (adjacency.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("GraphSpec: adjacency must have n rows");
    }
    for (int u = 0; u < n; ++u) {
        const auto &row = adjacency[static_cast<std::size_t>(u)];
        if (row.size() != static_cast<std::size_t>(n)) {
            throw std::invalid_argument("GraphSpec: adjacency must be square");
        }
        if (row[static_cast<std::size_t>(u)] != 0) {
            throw std::invalid_argument("GraphSpec: nonzero diagonal at vertex " + std::to_string(u));
        }
        for (int v = 0; v < n; ++v) {
            const int w = row[static_cast<std::size_t>(v)];
            if (w < 0 || w >= d) {
                throw std::invalid_argument("GraphSpec: edge weight outside [0, d)");
            }
            if (w != adjacency[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]) {
                throw std::invalid_argument("GraphSpec: adjacency is not symmetric");
            }
        }
    }
}

GraphSpec GraphSpec::empty(int n, int d) {
    if (n < 1) {
        throw std::invalid_argument("GraphSpec: need n >= 1");
    }
    return GraphSpec{n, d, std::vector<std::vector<int>>(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0))};
}

GraphSpec GraphSpec::ring(int n, int d) {
    if (n < 3) {
        throw std::invalid_argument("GraphSpec::ring: need n >= 3");
    }
    GraphSpec spec = empty(n, d);
    for (int u = 0; u < n; ++u) {
        const int v = (u + 1) % n;
        spec.adjacency[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
        spec.adjacency[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
    }
    return spec;
}

StateVector graph_state(const GraphSpec &spec) {
    spec.validate();
    const int n = spec.n;
    const int d = spec.d;
    const std::int64_t dim = checked_power(d, n);
    if (dim < 0) {
        throw std::length_error("graph_state: d^n exceeds the state size limit");
    }

    std::vector<Complex> roots(static_cast<std::size_t>(d));
    for (int t = 0; t < d; ++t) {
        roots[static_cast<std::size_t>(t)] = std::polar(1.0, 2.0 * std::numbers::pi * t / d);
    }
    std::vector<std::pair<std::pair<int, int>, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const int w = spec.adjacency[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
            if (w > 0) {
                edges.push_back({{u, v}, w});
            }
        }
    }

    const double amplitude = std::pow(static_cast<double>(d), -0.5 * n);
    std::vector<Complex> amplitudes(static_cast<std::size_t>(dim));
    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    for (std::int64_t index = 0; index < dim; ++index) {
        std::int64_t rest = index;
        for (int site = 0; site < n; ++site) {
            digits[static_cast<std::size_t>(site)] = static_cast<int>(rest % d);
            rest /= d;
        }
        int phase = 0;
        for (const auto &[pair, w] : edges) {
            phase = (phase + w * digits[static_cast<std::size_t>(pair.first)] *
                                 digits[static_cast<std::size_t>(pair.second)]) %
                    d;
        }
        amplitudes[static_cast<std::size_t>(index)] = amplitude * roots[static_cast<std::size_t>(phase)];
    }
    return StateVector(n, d, std::move(amplitudes), 1e-12);
}

std::vector<GraphSpec> find_ame_graph(int n, int d, std::optional<std::size_t> limit) {
    if (n < 2 || d < 2) {
        throw std::invalid_argument("find_ame_graph: need n >= 2 and d >= 2");
    }
    if (checked_power(d, n, kMaxSearchStateDimension) < 0) {
        throw std::length_error("find_ame_graph: d^n exceeds " + std::to_string(kMaxSearchStateDimension));
    }
    const int edge_count = n * (n - 1) / 2;
    const std::int64_t candidates = checked_power(d, edge_count, kMaxSearchCandidates);
    if (candidates < 0) {
        throw std::length_error("find_ame_graph: d^(n(n-1)/2) exceeds " + std::to_string(kMaxSearchCandidates));
    }

    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            edges.emplace_back(u, v);
        }
    }

    const int k = n / 2;
    std::vector<GraphSpec> found;
    for (std::int64_t t = 0; t < candidates; ++t) {
        if (limit && found.size() >= *limit) {
            break;
        }
        GraphSpec spec = GraphSpec::empty(n, d);
        std::int64_t rest = t;
        for (const auto &[u, v] : edges) {
            const int w = static_cast<int>(rest % d);
            rest /= d;
            spec.adjacency[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = w;
            spec.adjacency[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = w;
        }
        if (k_uniformity(graph_state(spec), k, 1e-9, true).uniform) {
            found.push_back(std::move(spec));
        }
    }
    return found;
}

}  // namespace ame::oracle
