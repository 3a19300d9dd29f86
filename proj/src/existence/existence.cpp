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

#include "ame/existence.hpp"

#include <stdexcept>

namespace ame {

bool scott_bound_satisfied(const SystemParams &params) {
    const std::int64_t n = params.n();
    const std::int64_t d = params.d();
    if (n % 2 == 0) {
        return n <= 2 * (d * d - 1);
    }
    return n <= 2 * d * (d + 1) - 1;
}

ExistenceVerdict check(const SystemParams &params) {
    ExistenceVerdict verdict{params, false, std::nullopt, solve_traces(params), scott_bound_satisfied(params)};
    for (std::int64_t i = 1; i <= verdict.profile.size(); ++i) {
        if (verdict.profile.trace(i).sign() < 0) {
            verdict.ruled_out = true;
            verdict.witness_i = i;
            break;
        }
    }
    return verdict;
}

std::vector<ExistenceVerdict> scan(IntRange d_range, IntRange n_range) {
    std::vector<ExistenceVerdict> out;
    if (d_range.empty() || n_range.empty()) {
        return out;
    }
    if (d_range.lo < 2 || n_range.lo < 2) {
        throw std::invalid_argument("scan: ranges must start at d >= 2 and n >= 2");
    }
    out.reserve(static_cast<std::size_t>((d_range.hi - d_range.lo + 1) * (n_range.hi - n_range.lo + 1)));
    for (std::int64_t d = d_range.lo; d <= d_range.hi; ++d) {
        for (std::int64_t n = n_range.lo; n <= n_range.hi; ++n) {
            out.push_back(check(SystemParams(n, d)));
        }
    }
    return out;
}

FirstNegativeReport first_negative_claim_holds(const std::vector<ExistenceVerdict> &verdicts) {
    FirstNegativeReport report;
    for (const auto &verdict : verdicts) {
        ++report.points_examined;
        if (!verdict.witness_i) {
            continue;
        }
        ++report.points_with_negative;
        const bool i2_negative = verdict.profile.size() >= 2 && verdict.profile.trace(2).sign() < 0;
        if (!i2_negative) {
            report.holds = false;
            report.counterexamples.push_back({verdict.params, *verdict.witness_i});
        }
    }
    return report;
}

FirstNegativeReport first_negative_claim_holds(IntRange d_range, IntRange n_range) {
    return first_negative_claim_holds(scan(d_range, n_range));
}

}  // namespace ame
