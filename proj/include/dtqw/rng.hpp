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
#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "dtqw/types.hpp"

namespace dtqw {

using Rng = std::mt19937_64;

/// Independent seed for sub-stream `stream` of `seed` (splitmix64 finaliser).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// One categorical draw. `probs` need not be exactly normalised.
std::size_t sample_index(std::span<const double> probs, Rng &rng);

/// Multinomial counts over `probs` via a chain of binomial draws.
Histogram sample_multinomial(std::span<const double> probs,
                             std::uint64_t shots, Rng &rng);

} // namespace dtqw
