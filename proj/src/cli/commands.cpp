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

#include "ame/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ame/enumerator.hpp"
#include "ame/existence.hpp"
#include "ame/oracle/builtin.hpp"
#include "ame/oracle/graph.hpp"
#include "ame/oracle/state.hpp"
#include "ame/oracle/state_file.hpp"
#include "ame/oracle/weights.hpp"

namespace ame::cli {

using nlohmann::json;

namespace {

json rational_json(const ExactRational &value) {
    return json{{"num", value.numerator().get_str()}, {"den", value.denominator().get_str()}};
}

json rational_row_json(const std::vector<ExactRational> &values) {
    json out = json::array();
    for (const auto &v : values) {
        out.push_back(rational_json(v));
    }
    return out;
}

json rational_matrix_json(const RationalMatrix &matrix) {
    json out = json::array();
    for (const auto &row : matrix) {
        out.push_back(rational_row_json(row));
    }
    return out;
}

SystemParams make_params(std::int64_t n, std::int64_t d) {
    if (n < 2 || d < 2) {
        throw UsageError("need n >= 2 and d >= 2 (got n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")");
    }
    return SystemParams(n, d);
}

std::string scientific(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.3e", value);
    return buffer;
}

std::string yes_no(bool value) { return value ? "yes" : "no"; }

std::string bool_text(bool value) { return value ? "true" : "false"; }

json witness_json(const ExistenceVerdict &verdict) {
    return verdict.witness_i ? json(*verdict.witness_i) : json(nullptr);
}

json verdict_json(const ExistenceVerdict &verdict) {
    json traces = json::array();
    for (std::int64_t i = 1; i <= verdict.profile.size(); ++i) {
        traces.push_back({{"i", i},
                          {"weight", verdict.params.m() + i},
                          {"trace", rational_json(verdict.profile.trace(i))},
                          {"eigenvalue", rational_json(verdict.profile.eigenvalue(i))}});
    }
    return json{{"n", verdict.params.n()},
                {"d", verdict.params.d()},
                {"m", verdict.params.m()},
                {"scott_satisfied", verdict.scott_satisfied},
                {"ruled_out", verdict.ruled_out},
                {"witness_i", witness_json(verdict)},
                {"traces", std::move(traces)}};
}

void print_matrix_text(std::ostream &out, const RationalMatrix &matrix) {
    for (const auto &row : matrix) {
        out << "  [";
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << (c ? ", " : "") << row[c];
        }
        out << "]\n";
    }
}

void print_vector_text(std::ostream &out, const std::vector<ExactRational> &values) {
    out << "[";
    for (std::size_t k = 0; k < values.size(); ++k) {
        out << (k ? ", " : "") << values[k];
    }
    out << "]\n";
}

void print_matrix_csv(std::ostream &out, std::string_view name, const RationalMatrix &matrix) {
    for (std::size_t r = 0; r < matrix.size(); ++r) {
        for (std::size_t c = 0; c < matrix[r].size(); ++c) {
            out << name << ',' << r + 1 << ',' << c + 1 << ',' << matrix[r][c] << '\n';
        }
    }
}

void print_vector_csv(std::ostream &out, std::string_view name, const std::vector<ExactRational> &values) {
    for (std::size_t k = 0; k < values.size(); ++k) {
        out << name << ',' << k + 1 << ",," << values[k] << '\n';
    }
}

struct CheckLine {
    bool pass;
    std::string text;
};

}  // namespace

OutputFormat parse_format(const std::string &text) {
    if (text == "md" || text == "markdown") {
        return OutputFormat::kMarkdown;
    }
    if (text == "csv") {
        return OutputFormat::kCsv;
    }
    if (text == "json") {
        return OutputFormat::kJson;
    }
    throw UsageError("unknown format '" + text + "' (expected md, csv or json)");
}

int cmd_table(std::int64_t d, std::int64_t n_min, std::int64_t n_max, OutputFormat format, std::ostream &out) {
    if (d < 2 || n_min < 2 || n_min > n_max) {
        throw UsageError("table: need d >= 2 and 2 <= n-min <= n-max");
    }
    const std::int64_t columns = n_max - n_max / 2;
    std::vector<WeightTraceProfile> rows;
    for (std::int64_t n = n_min; n <= n_max; ++n) {
        rows.push_back(solve_traces(SystemParams(n, d)));
    }

    switch (format) {
        case OutputFormat::kMarkdown: {
            out << "| n |";
            for (std::int64_t i = 1; i <= columns; ++i) {
                out << " i=" << i << " |";
            }
            out << "\n|---|";
            for (std::int64_t i = 1; i <= columns; ++i) {
                out << "---|";
            }
            out << '\n';
            for (const auto &row : rows) {
                out << "| " << row.params.n() << " |";
                for (std::int64_t i = 1; i <= columns; ++i) {
                    out << ' ' << (i <= row.size() ? row.trace(i).to_string() : "") << " |";
                }
                out << '\n';
            }
            break;
        }
        case OutputFormat::kCsv: {
            out << 'n';
            for (std::int64_t i = 1; i <= columns; ++i) {
                out << ",i=" << i;
            }
            out << '\n';
            for (const auto &row : rows) {
                out << row.params.n();
                for (std::int64_t i = 1; i <= columns; ++i) {
                    out << ',' << (i <= row.size() ? row.trace(i).to_string() : "");
                }
                out << '\n';
            }
            break;
        }
        case OutputFormat::kJson: {
            json body = json::array();
            for (const auto &row : rows) {
                body.push_back({{"n", row.params.n()}, {"traces", rational_row_json(row.traces)}});
            }
            json doc = {{"d", d}, {"n_min", n_min}, {"n_max", n_max}, {"columns", columns}, {"rows", std::move(body)}};
            out << doc.dump(2) << '\n';
            break;
        }
    }
    return kExitOk;
}

int cmd_check(std::int64_t n, std::int64_t d, OutputFormat format, std::ostream &out) {
    const ExistenceVerdict verdict = check(make_params(n, d));
    const auto &profile = verdict.profile;
    switch (format) {
        case OutputFormat::kMarkdown:
            out << "AME(n=" << n << ", d=" << d << "), m=" << verdict.params.m() << "\n\n";
            out << "| i | weight | tr(P^2) | lambda |\n|---|---|---|---|\n";
            for (std::int64_t i = 1; i <= profile.size(); ++i) {
                out << "| " << i << " | " << verdict.params.m() + i << " | " << profile.trace(i) << " | "
                    << profile.eigenvalue(i) << " |\n";
            }
            out << "\nscott bound: " << (verdict.scott_satisfied ? "satisfied" : "violated") << '\n';
            out << "ruled out: " << yes_no(verdict.ruled_out);
            if (verdict.witness_i) {
                out << " (witness i=" << *verdict.witness_i << ")";
            }
            out << '\n';
            break;
        case OutputFormat::kCsv:
            out << "n,d,i,weight,trace,eigenvalue,scott_satisfied,ruled_out,witness_i\n";
            for (std::int64_t i = 1; i <= profile.size(); ++i) {
                out << n << ',' << d << ',' << i << ',' << verdict.params.m() + i << ',' << profile.trace(i) << ','
                    << profile.eigenvalue(i) << ',' << bool_text(verdict.scott_satisfied) << ','
                    << bool_text(verdict.ruled_out) << ','
                    << (verdict.witness_i ? std::to_string(*verdict.witness_i) : "") << '\n';
            }
            break;
        case OutputFormat::kJson:
            out << verdict_json(verdict).dump(2) << '\n';
            break;
    }
    return verdict.ruled_out ? kExitNegative : kExitOk;
}

int cmd_scan(std::int64_t d_max, std::int64_t n_max, OutputFormat format, std::ostream &out) {
    if (d_max < 2 || n_max < 2) {
        throw UsageError("scan: need d-max >= 2 and n-max >= 2");
    }
    const auto verdicts = scan(IntRange{2, d_max}, IntRange{2, n_max});
    const FirstNegativeReport claim = first_negative_claim_holds(verdicts);
    const auto rule_outs = std::count_if(verdicts.begin(), verdicts.end(), [](const auto &v) { return v.ruled_out; });

    auto witness_trace = [](const ExistenceVerdict &v) {
        return v.witness_i ? v.profile.trace(*v.witness_i).to_string() : std::string();
    };
    std::string summary = "first-negative-at-i=2 claim: " + std::string(claim.holds ? "holds" : "FAILS") + " (" +
                          std::to_string(claim.points_examined) + " points, " +
                          std::to_string(claim.points_with_negative) + " with a negative trace, " +
                          std::to_string(claim.counterexamples.size()) + " counterexamples)";

    switch (format) {
        case OutputFormat::kMarkdown:
            out << "| d | n | scott | ruled out | witness i | witness trace |\n|---|---|---|---|---|---|\n";
            for (const auto &v : verdicts) {
                out << "| " << v.params.d() << " | " << v.params.n() << " | "
                    << (v.scott_satisfied ? "satisfied" : "violated") << " | " << yes_no(v.ruled_out) << " | "
                    << (v.witness_i ? std::to_string(*v.witness_i) : "") << " | " << witness_trace(v) << " |\n";
            }
            out << "\nrule-outs: " << rule_outs << '\n' << summary << '\n';
            for (const auto &c : claim.counterexamples) {
                out << "counterexample: n=" << c.params.n() << " d=" << c.params.d()
                    << " first negative at i=" << c.first_negative_i << '\n';
            }
            break;
        case OutputFormat::kCsv:
            out << "d,n,scott_satisfied,ruled_out,witness_i,witness_trace\n";
            for (const auto &v : verdicts) {
                out << v.params.d() << ',' << v.params.n() << ',' << bool_text(v.scott_satisfied) << ','
                    << bool_text(v.ruled_out) << ',' << (v.witness_i ? std::to_string(*v.witness_i) : "") << ','
                    << witness_trace(v) << '\n';
            }
            out << "# " << summary << '\n';
            break;
        case OutputFormat::kJson: {
            json rows = json::array();
            for (const auto &v : verdicts) {
                rows.push_back(verdict_json(v));
            }
            json counterexamples = json::array();
            for (const auto &c : claim.counterexamples) {
                counterexamples.push_back(
                    {{"n", c.params.n()}, {"d", c.params.d()}, {"first_negative_i", c.first_negative_i}});
            }
            json doc = {{"d_max", d_max},
                        {"n_max", n_max},
                        {"rule_outs", rule_outs},
                        {"verdicts", std::move(rows)},
                        {"claim",
                         {{"holds", claim.holds},
                          {"points_examined", claim.points_examined},
                          {"points_with_negative", claim.points_with_negative},
                          {"counterexamples", std::move(counterexamples)}}}};
            out << doc.dump(2) << '\n';
            break;
        }
    }
    return claim.holds ? kExitOk : kExitNegative;
}

int cmd_solve(std::int64_t n, std::int64_t d, bool show_inverse, OutputFormat format, std::ostream &out) {
    const SystemParams params = make_params(n, d);
    const TriangularSystem system = build_system(params, params.max_i(), SystemFlavor::kTrace);
    const std::vector<ExactRational> x = forward_substitute(system);
    RationalMatrix inverse;
    RationalMatrix residual;
    if (show_inverse) {
        inverse = explicit_inverse(system);
        residual = multiply(system.matrix, inverse);
        const RationalMatrix id = identity_matrix(system.size());
        for (std::size_t r = 0; r < residual.size(); ++r) {
            for (std::size_t c = 0; c < residual.size(); ++c) {
                residual[r][c] -= id[r][c];
            }
        }
    }

    switch (format) {
        case OutputFormat::kMarkdown:
            out << "trace system for n=" << n << ", d=" << d << ", m=" << params.m() << " (" << system.size()
                << " rows)\n";
            out << "A =\n";
            print_matrix_text(out, system.matrix);
            out << "T = ";
            print_vector_text(out, system.rhs);
            out << "x = ";
            print_vector_text(out, x);
            if (show_inverse) {
                out << "A^-1 =\n";
                print_matrix_text(out, inverse);
                out << "A*A^-1 - I =\n";
                print_matrix_text(out, residual);
            }
            break;
        case OutputFormat::kCsv:
            out << "name,row,col,value\n";
            print_matrix_csv(out, "A", system.matrix);
            print_vector_csv(out, "T", system.rhs);
            print_vector_csv(out, "x", x);
            if (show_inverse) {
                print_matrix_csv(out, "A_inverse", inverse);
                print_matrix_csv(out, "residual", residual);
            }
            break;
        case OutputFormat::kJson: {
            json doc = {{"n", n},
                        {"d", d},
                        {"m", params.m()},
                        {"A", rational_matrix_json(system.matrix)},
                        {"T", rational_row_json(system.rhs)},
                        {"x", rational_row_json(x)}};
            if (show_inverse) {
                doc["A_inverse"] = rational_matrix_json(inverse);
                doc["residual"] = rational_matrix_json(residual);
            }
            out << doc.dump(2) << '\n';
            break;
        }
    }
    return kExitOk;
}

int cmd_verify(const std::string &source, double tolerance, std::ostream &out) {
    constexpr std::string_view kBuiltinPrefix = "builtin:";
    if (!(tolerance > 0.0)) {
        throw UsageError("verify: tolerance must be positive");
    }
    std::optional<oracle::StateVector> loaded;
    if (source.starts_with(kBuiltinPrefix)) {
        try {
            loaded.emplace(oracle::builtin_state(std::string_view(source).substr(kBuiltinPrefix.size())));
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
    } else {
        loaded.emplace(oracle::load_state_file(source));
    }
    const oracle::StateVector &state = *loaded;
    if (state.n() < 2) {
        throw UsageError("verify: need at least two parties");
    }
    const SystemParams params(state.n(), state.d());
    const int n = state.n();
    const int m = n / 2;

    std::vector<CheckLine> lines;
    const auto uniformity = oracle::k_uniformity(state, m, tolerance);
    lines.push_back({uniformity.uniform, std::to_string(m) + "-uniformity: max deviation " +
                                             scientific(uniformity.max_deviation)});

    const auto moebius = oracle::weight_distribution(state);
    const auto basis = oracle::basis_weight_distribution(state);
    const double disagreement = moebius.max_difference(basis);
    lines.push_back({disagreement <= tolerance,
                     "purity-inversion vs generator-basis weights: max difference " + scientific(disagreement)});

    for (int w = 1; w <= n; ++w) {
        const auto values = moebius.of_weight(w);
        const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
        const double spread = *hi - *lo;
        if (w <= m) {
            double worst = 0.0;
            for (double v : values) {
                worst = std::max(worst, std::abs(v));
            }
            lines.push_back({worst <= tolerance, "weight " + std::to_string(w) + ": " + std::to_string(values.size()) +
                                                     " supports vanish, max |tr(P_S^2)| " + scientific(worst)});
            continue;
        }
        const ExactRational expected = trace_closed_form(params, w - m);
        double worst = 0.0;
        for (double v : values) {
            worst = std::max(worst, std::abs(v - expected.to_double()));
        }
        lines.push_back({worst <= tolerance && spread <= tolerance,
                         "weight " + std::to_string(w) + ": closed form " + expected.to_string() + ", " +
                             std::to_string(values.size()) + " supports, max deviation " + scientific(worst) +
                             ", spread " + scientific(spread)});
    }

    double worst_residual = 0.0;
    std::size_t reductions = 0;
    for (int size = n - m; size <= n; ++size) {
        for (const auto &keep : oracle::subsets_of_size(n, size)) {
            worst_residual = std::max(worst_residual, oracle::projector_property_residual(state, keep));
            ++reductions;
        }
    }
    lines.push_back({worst_residual <= tolerance, "projector property: " + std::to_string(reductions) +
                                                      " reductions, max residual " + scientific(worst_residual)});

    out << "state: " << source << " (n=" << n << ", d=" << state.d() << ", m=" << m << ")\n";
    bool all_pass = true;
    for (const auto &line : lines) {
        out << (line.pass ? "[PASS] " : "[FAIL] ") << line.text << '\n';
        all_pass = all_pass && line.pass;
    }
    out << "verdict: " << (all_pass ? "PASS" : "FAIL") << '\n';
    return all_pass ? kExitOk : kExitNegative;
}

int cmd_find_graph(int n, int d, std::optional<std::size_t> limit, std::ostream &out) {
    if (n < 2 || d < 2) {
        throw UsageError("find-graph: need n >= 2 and d >= 2");
    }
    if (limit && *limit == 0) {
        throw UsageError("find-graph: --limit must be positive");
    }
    std::vector<oracle::GraphSpec> found;
    try {
        found = oracle::find_ame_graph(n, d, limit);
    } catch (const std::length_error &e) {
        throw UsageError(e.what());
    }
    if (found.empty()) {
        out << "no AME graph state found for n=" << n << ", d=" << d << '\n';
        return kExitOk;
    }
    for (std::size_t k = 0; k < found.size(); ++k) {
        out << "graph " << k + 1 << " (n=" << n << ", d=" << d << "):\n";
        for (const auto &row : found[k].adjacency) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                out << (c ? " " : "") << row[c];
            }
            out << '\n';
        }
    }
    out << found.size() << " graph(s) found\n";
    return kExitOk;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Bloch-representation weight invariants of absolutely maximally entangled states"};
    app.require_subcommand(1);

    std::int64_t d = 0;
    std::int64_t n = 0;
    std::int64_t n_min = 0;
    std::int64_t n_max = 0;
    std::int64_t d_max = 0;
    std::string format_text = "md";
    bool show_inverse = false;
    std::string state_source;
    double tolerance = 1e-9;
    std::size_t limit = 0;

    auto *table = app.add_subcommand("table", "Weight traces tr(P_{m+i}^2) for a range of n");
    table->add_option("--d", d, "Local dimension")->required();
    table->add_option("--n-min", n_min, "Smallest party count")->required();
    table->add_option("--n-max", n_max, "Largest party count")->required();
    table->add_option("--format", format_text, "md, csv or json");

    auto *check_cmd = app.add_subcommand("check", "Existence verdict for one (n, d)");
    check_cmd->add_option("--n", n, "Party count")->required();
    check_cmd->add_option("--d", d, "Local dimension")->required();
    check_cmd->add_option("--format", format_text, "md, csv or json");

    auto *scan_cmd = app.add_subcommand("scan", "Verdict grid over 2..d-max x 2..n-max");
    scan_cmd->add_option("--d-max", d_max, "Largest local dimension")->required();
    scan_cmd->add_option("--n-max", n_max, "Largest party count")->required();
    scan_cmd->add_option("--format", format_text, "md, csv or json");

    auto *solve = app.add_subcommand("solve", "Exact triangular trace system");
    solve->add_option("--n", n, "Party count")->required();
    solve->add_option("--d", d, "Local dimension")->required();
    solve->add_flag("--show-inverse", show_inverse, "Also print the explicit inverse and A*A^-1 - I");
    solve->add_option("--format", format_text, "md, csv or json");

    auto *verify = app.add_subcommand("verify", "Brute-force checks on an explicit state");
    verify->add_option("--state", state_source, "builtin:NAME or a state-file path")->required();
    verify->add_option("--tol", tolerance, "Absolute tolerance");

    auto *find_graph = app.add_subcommand("find-graph", "Exhaustive search for AME graph states");
    find_graph->add_option("--n", n, "Party count")->required();
    find_graph->add_option("--d", d, "Local dimension")->required();
    auto *limit_opt = find_graph->add_option("--limit", limit, "Stop after this many graphs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (table->parsed()) {
            return cmd_table(d, n_min, n_max, parse_format(format_text), out);
        }
        if (check_cmd->parsed()) {
            return cmd_check(n, d, parse_format(format_text), out);
        }
        if (scan_cmd->parsed()) {
            return cmd_scan(d_max, n_max, parse_format(format_text), out);
        }
        if (solve->parsed()) {
            return cmd_solve(n, d, show_inverse, parse_format(format_text), out);
        }
        if (verify->parsed()) {
            return cmd_verify(state_source, tolerance, out);
        }
        if (find_graph->parsed()) {
            std::optional<std::size_t> max_results;
            if (limit_opt->count() > 0) {
                max_results = limit;
            }
            if (n > 31 || d > 1'000'000) {
                throw UsageError("find-graph: parameters out of range");
            }
            return cmd_find_graph(static_cast<int>(n), static_cast<int>(d), max_results, out);
        }
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const oracle::StateFileError &e) {
        const char *label = e.kind() == oracle::StateFileError::Kind::kNotNormalized ? "normalization error"
                            : e.kind() == oracle::StateFileError::Kind::kNotFound    ? "file not found"
                                                                                      : "malformed state file";
        err << label << ": " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace ame::cli
