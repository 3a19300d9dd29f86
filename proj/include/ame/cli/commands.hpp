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

#ifndef AME_CLI_COMMANDS_HPP
#define AME_CLI_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ame::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNegative = 2;

enum class OutputFormat { kMarkdown, kCsv, kJson };

class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// "md", "csv" or "json"; throws UsageError otherwise.
OutputFormat parse_format(const std::string &text);

// Each command writes its report to `out` and returns the process exit code.
// Usage problems surface as UsageError; `run` maps them to kExitUsage.

int cmd_table(std::int64_t d, std::int64_t n_min, std::int64_t n_max, OutputFormat format, std::ostream &out);
int cmd_check(std::int64_t n, std::int64_t d, OutputFormat format, std::ostream &out);
/// Exit 0 when the first-negative-at-i=2 claim holds on the grid, 2 when it has counterexamples.
int cmd_scan(std::int64_t d_max, std::int64_t n_max, OutputFormat format, std::ostream &out);
int cmd_solve(std::int64_t n, std::int64_t d, bool show_inverse, OutputFormat format, std::ostream &out);
/// `source` is "builtin:NAME" or a state-file path.
int cmd_verify(const std::string &source, double tolerance, std::ostream &out);
int cmd_find_graph(int n, int d, std::optional<std::size_t> limit, std::ostream &out);

/// Full command-line entry point: parses argv, dispatches, maps errors to exit codes.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace ame::cli

#endif  // AME_CLI_COMMANDS_HPP
