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

#ifndef AME_EXISTENCE_HPP
#define AME_EXISTENCE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ame/enumerator.hpp"

namespace ame {

/// n <= 2(d^2 - 1) for even n, n <= 2d(d + 1) - 1 for odd n.
bool scott_bound_satisfied(const SystemParams &params);

/// Outcome of the negativity test for one (n, d). A state is ruled out only by a
/// strictly negative weight trace; zero traces never rule anything out.
struct ExistenceVerdict {
    SystemParams params;
    bool ruled_out = false;
    /// Smallest i with tr(P_{m+i}^2) < 0; present iff ruled_out.
    std::optional<std::int64_t> witness_i;
    WeightTraceProfile profile;
    bool scott_satisfied = true;
};

ExistenceVerdict check(const SystemParams &params);

/// Closed integer interval [lo, hi]; empty when lo > hi.
struct IntRange {
    std::int64_t lo = 0;
    std::int64_t hi = -1;

    bool empty() const { return lo > hi; }
};

/// One verdict per grid point, d-major then n ascending. Empty when either range is empty.
/// Throws std::invalid_argument if a nonempty range starts below 2.
std::vector<ExistenceVerdict> scan(IntRange d_range, IntRange n_range);

struct FirstNegativeCounterexample {
    SystemParams params;
    std::int64_t first_negative_i;
};

struct FirstNegativeReport {
    bool holds = true;
    std::int64_t points_examined = 0;
    std::int64_t points_with_negative = 0;
    std::vector<FirstNegativeCounterexample> counterexamples;
};

/// Tests, over a grid, that whenever any weight trace is negative the i = 2 trace is negative too.
FirstNegativeReport first_negative_claim_holds(IntRange d_range, IntRange n_range);
FirstNegativeReport first_negative_claim_holds(const std::vector<ExistenceVerdict> &verdicts);

}  // namespace ame

#endif  // AME_EXISTENCE_HPP
