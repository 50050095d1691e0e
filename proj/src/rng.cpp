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
#include "dtqw/rng.hpp"

#include <algorithm>
#include <numeric>

namespace dtqw {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::size_t sample_index(std::span<const double> probs, Rng &rng) {
    const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
    double r = std::uniform_real_distribution<double>(0.0, total)(rng);
    for (std::size_t i = 0; i < probs.size(); ++i) {
        r -= probs[i];
        if (r < 0.0) {
            return i;
        }
    }
    // Rounding: land on the last outcome with nonzero mass.
    for (std::size_t i = probs.size(); i-- > 0;) {
        if (probs[i] > 0.0) {
            return i;
        }
    }
    return 0;
}

Histogram sample_multinomial(std::span<const double> probs,
                             std::uint64_t shots, Rng &rng) {
    Histogram counts(probs.size(), 0);
    std::size_t last = probs.size();
    while (last > 0 && !(probs[last - 1] > 0.0)) {
        --last;
    }
    if (last == 0) {
        return counts;
    }
    --last;
    double remaining_mass = std::accumulate(probs.begin(), probs.end(), 0.0);
    std::uint64_t remaining = shots;
    for (std::size_t i = 0; i < last && remaining > 0; ++i) {
        if (!(probs[i] > 0.0)) {
            continue;
        }
        const double p = remaining_mass > 0.0
                             ? std::clamp(probs[i] / remaining_mass, 0.0, 1.0)
                             : 1.0;
        const std::uint64_t k =
            std::binomial_distribution<std::uint64_t>(remaining, p)(rng);
        counts[i] = k;
        remaining -= k;
        remaining_mass -= probs[i];
    }
    counts[last] += remaining;
    return counts;
}

} // namespace dtqw
