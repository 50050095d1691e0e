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
#include "dtqw/walk_config.hpp"

#include <stdexcept>
#include <string>

namespace dtqw {

std::string_view to_string(Scheme scheme) {
    switch (scheme) {
    case Scheme::Present:
        return "present";
    case Scheme::QftScheme:
        return "qft";
    case Scheme::IdLinearDepth:
        return "id-linear";
    case Scheme::IdAncilla:
        return "id-ancilla";
    }
    return "?";
}

Scheme parse_scheme(std::string_view name) {
    for (Scheme s : {Scheme::Present, Scheme::QftScheme, Scheme::IdLinearDepth,
                     Scheme::IdAncilla}) {
        if (to_string(s) == name) {
            return s;
        }
    }
    throw std::invalid_argument("unknown scheme '" + std::string(name) +
                                "' (expected present, qft, id-linear or "
                                "id-ancilla)");
}

std::size_t min_cost_model_n(Scheme scheme) {
    switch (scheme) {
    case Scheme::IdLinearDepth:
        return 3;
    case Scheme::IdAncilla:
        return 4;
    default:
        return 1;
    }
}

void WalkConfig::validate() const {
    if (n < 1 || n > 13) {
        throw std::invalid_argument("walk.n must be in [1, 13], got " +
                                    std::to_string(n));
    }
    if (!(theta >= 0.0 && theta <= kPi + 1e-12)) {
        throw std::invalid_argument("walk.theta must be in [0, pi]");
    }
    if (!(phi >= 0.0 && phi < 2.0 * kPi)) {
        throw std::invalid_argument("walk.phi must be in [0, 2 pi)");
    }
    if (!is_unitary(coin)) {
        throw std::invalid_argument("walk.coin is not unitary");
    }
}

} // namespace dtqw
