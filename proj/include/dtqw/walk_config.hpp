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
 * Walk parameters shared by the circuit builders and the reference oracle.
 */
#pragma once

#include <cstddef>
#include <string_view>

#include "dtqw/types.hpp"

namespace dtqw {

enum class Scheme {
    Present,
    QftScheme,
    IdLinearDepth,
    IdAncilla,
};

/// "present", "qft", "id-linear", "id-ancilla".
std::string_view to_string(Scheme scheme);

/// Inverse of to_string. Throws std::invalid_argument on unknown names.
Scheme parse_scheme(std::string_view name);

/// Smallest n for which the scheme's closed-form cost model is defined.
std::size_t min_cost_model_n(Scheme scheme);

/// Walk on the 2^n-cycle, starting from
/// (cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>) (x) |0_p>.
struct WalkConfig {
    std::size_t n = 2;
    std::size_t steps = 0;
    double theta = 0.0;
    double phi = 0.0;
    Mat2 coin = mat::hadamard();
    Scheme scheme = Scheme::Present;
    /// Present scheme only: open with a Hadamard layer instead of a QFT.
    bool localized_init = true;

    /// Throws std::invalid_argument if n is outside [1, 13], theta outside
    /// [0, pi], phi outside [0, 2 pi) or the coin is not unitary.
    void validate() const;
};

} // namespace dtqw
