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

#ifndef AME_ORACLE_BUILTIN_HPP
#define AME_ORACLE_BUILTIN_HPP

#include <string>
#include <string_view>
#include <vector>

#include "ame/oracle/graph.hpp"
#include "ame/oracle/state.hpp"

namespace ame::oracle {

/// sum_i |ii> / sqrt(d)
StateVector bell_state(int d);
/// sum_i |i...i> / sqrt(d) on n parties
StateVector ghz_state(int n, int d);
/// (1/3) sum_{i,j in GF(3)} |i, j, i+j, i+2j>
StateVector ame43_state();
/// Graph state of the five-cycle, d = 2.
StateVector ring5_state();
/// First six-qubit graph found by find_ame_graph(6, 2).
const GraphSpec &ame62_graph();
StateVector ame62_state();

/// Accepts bell(D), ghz3(D), ame43, ring5, ame62; bare "bell" and "ghz3" mean D = 2.
/// Throws std::invalid_argument for unknown names.
StateVector builtin_state(std::string_view name);

/// Canonical names of the builtin AME fixtures.
std::vector<std::string> builtin_ame_names();

}  // namespace ame::oracle

#endif  // AME_ORACLE_BUILTIN_HPP
