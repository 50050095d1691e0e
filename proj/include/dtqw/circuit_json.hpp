// Copyright 2026 The dtqw Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Circuit <-> JSON.
 *
 * Document layout:
 *
 *     {"n_qubits": 3, "label": "...",
 *      "gates": [{"kind": "cp", "qubits": [2, 1], "params": [1.5707963]}, ...]}
 *
 * `qubits` lists controls first and the target last. Angles are radians.
 * A "u" gate carries its matrix as eight doubles (re, im of m00, m01, m10,
 * m11). An "mcx" gate carries "polarity": one 0/1 entry per control.
 */
#pragma once

#include <string>

#include <json.hpp>

#include "dtqw/circuit.hpp"

namespace dtqw {

nlohmann::json to_json(const Circuit &circuit);

/// Throws std::invalid_argument on schema violations.
Circuit circuit_from_json(const nlohmann::json &doc);

} // namespace dtqw
