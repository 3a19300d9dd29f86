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

#include "ame/oracle/state_file.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ame::oracle {

using nlohmann::json;

StateVector parse_state_json(const std::string &text, double tolerance) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw StateFileError(StateFileError::Kind::kMalformed, std::string("state file is not valid JSON: ") + e.what());
    }
    try {
        const int n = doc.at("n").get<int>();
        const int d = doc.at("d").get<int>();
        const auto &raw = doc.at("amplitudes");
        if (!raw.is_array()) {
            throw StateFileError(StateFileError::Kind::kMalformed, "state file: 'amplitudes' must be an array");
        }
        std::vector<Complex> amplitudes;
        amplitudes.reserve(raw.size());
        for (const auto &pair : raw) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
                throw StateFileError(StateFileError::Kind::kMalformed,
                                     "state file: each amplitude must be a [real, imaginary] pair");
            }
            amplitudes.emplace_back(pair[0].get<double>(), pair[1].get<double>());
        }
        return StateVector(n, d, std::move(amplitudes), tolerance);
    } catch (const NormalizationError &e) {
        throw StateFileError(StateFileError::Kind::kNotNormalized, e.what());
    } catch (const json::exception &e) {
        throw StateFileError(StateFileError::Kind::kMalformed, std::string("state file: ") + e.what());
    } catch (const std::invalid_argument &e) {
        throw StateFileError(StateFileError::Kind::kMalformed, e.what());
    } catch (const std::length_error &e) {
        throw StateFileError(StateFileError::Kind::kMalformed, e.what());
    }
}

StateVector load_state_file(const std::filesystem::path &path, double tolerance) {
    std::ifstream in(path);
    if (!in) {
        throw StateFileError(StateFileError::Kind::kNotFound, "cannot open state file '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_state_json(buffer.str(), tolerance);
}

std::string state_to_json(const StateVector &state) {
    json amplitudes = json::array();
    for (const auto &a : state.amplitudes()) {
        amplitudes.push_back({a.real(), a.imag()});
    }
    json doc = {{"n", state.n()}, {"d", state.d()}, {"amplitudes", std::move(amplitudes)}};
    return doc.dump() + "\n";
}

void save_state_file(const std::filesystem::path &path, const StateVector &state) {
    std::ofstream out(path);
    if (!out) {
        throw StateFileError(StateFileError::Kind::kNotFound, "cannot write state file '" + path.string() + "'");
    }
    out << state_to_json(state);
}

}  // namespace ame::oracle
