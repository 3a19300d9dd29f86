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

#include "ame/oracle/builtin.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace ame::oracle {

namespace {

// Parses "prefix(D)" or a bare "prefix" (D = 2). Returns -1 if `name` has a different shape.
int parse_dimension_suffix(std::string_view name, std::string_view prefix) {
    if (name.substr(0, prefix.size()) != prefix) {
        return -1;
    }
    std::string_view rest = name.substr(prefix.size());
    if (rest.empty()) {
        return 2;
    }
    if (rest.size() < 3 || rest.front() != '(' || rest.back() != ')') {
        return -1;
    }
    rest = rest.substr(1, rest.size() - 2);
    int d = -1;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), d);
    if (ec != std::errc() || ptr != rest.data() + rest.size()) {
        return -1;
    }
    return d;
}

}  // namespace

StateVector bell_state(int d) { return ghz_state(2, d); }

StateVector ghz_state(int n, int d) {
    const std::int64_t dim = checked_power(d, n);
    if (n < 2 || d < 2 || dim < 0) {
        throw std::invalid_argument("ghz_state: need n >= 2, d >= 2 and d^n within the size limit");
    }
    std::vector<Complex> amplitudes(static_cast<std::size_t>(dim));
    // |i...i> sits at i * (1 + d + ... + d^(n-1)).
    std::int64_t step = 0;
    for (std::int64_t p = 1, k = 0; k < n; ++k, p *= d) {
        step += p;
    }
    const double a = 1.0 / std::sqrt(static_cast<double>(d));
    for (int i = 0; i < d; ++i) {
        amplitudes[static_cast<std::size_t>(i * step)] = a;
    }
    return StateVector(n, d, std::move(amplitudes));
}

StateVector ame43_state() {
    constexpr int d = 3;
    std::vector<Complex> amplitudes(81);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            const int digits[4] = {i, j, (i + j) % d, (i + 2 * j) % d};
            const int index = digits[0] + d * (digits[1] + d * (digits[2] + d * digits[3]));
            amplitudes[static_cast<std::size_t>(index)] = 1.0 / 3.0;
        }
    }
    return StateVector(4, d, std::move(amplitudes));
}

StateVector ring5_state() { return graph_state(GraphSpec::ring(5, 2)); }

const GraphSpec &ame62_graph() {
    static const GraphSpec graph = [] {
        auto found = find_ame_graph(6, 2, 1);
        if (found.empty()) {
            throw std::logic_error("ame62_graph: exhaustive search found no six-qubit AME graph state");
        }
        return found.front();
    }();
    return graph;
}

StateVector ame62_state() { return graph_state(ame62_graph()); }

StateVector builtin_state(std::string_view name) {
    if (name == "ame43") {
        return ame43_state();
    }
    if (name == "ring5") {
        return ring5_state();
    }
    if (name == "ame62") {
        return ame62_state();
    }
    if (int d = parse_dimension_suffix(name, "bell"); d >= 2) {
        return bell_state(d);
    }
    if (int d = parse_dimension_suffix(name, "ghz3"); d >= 2) {
        return ghz_state(3, d);
    }
    throw std::invalid_argument("unknown builtin state '" + std::string(name) + "'");
}

std::vector<std::string> builtin_ame_names() {
    return {"bell(2)", "bell(3)", "ghz3(2)", "ghz3(3)", "ring5", "ame43", "ame62"};
}

}  // namespace ame::oracle
