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

#ifndef AME_ORACLE_STATE_FILE_HPP
#define AME_ORACLE_STATE_FILE_HPP

#include <filesystem>
#include <stdexcept>
#include <string>

#include "ame/oracle/state.hpp"

namespace ame::oracle {

// State files are JSON documents:
//   {"n": 2, "d": 2, "amplitudes": [[0.7071067811865476, 0.0], [0.0, 0.0], ...]}
// with d^n [real, imaginary] pairs in party-0-least-significant order.

class StateFileError : public std::runtime_error {
   public:
    enum class Kind { kNotFound, kMalformed, kNotNormalized };

    StateFileError(Kind kind, const std::string &message) : std::runtime_error(message), kind_(kind) {}

    Kind kind() const { return kind_; }

   private:
    Kind kind_;
};

/// Normalization is checked against `tolerance`.
StateVector parse_state_json(const std::string &text, double tolerance = 1e-9);
StateVector load_state_file(const std::filesystem::path &path, double tolerance = 1e-9);

std::string state_to_json(const StateVector &state);
void save_state_file(const std::filesystem::path &path, const StateVector &state);

}  // namespace ame::oracle

#endif  // AME_ORACLE_STATE_FILE_HPP
