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
#include "dtqw/prob_dist.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dtqw {

ProbDist::ProbDist(std::vector<double> p) : p_(std::move(p)) {
    if (p_.empty()) {
        throw std::invalid_argument("ProbDist: empty");
    }
    double sum = 0.0;
    for (double x : p_) {
        if (!(x >= 0.0)) {
            throw std::invalid_argument("ProbDist: negative or NaN entry");
        }
        sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw std::invalid_argument("ProbDist: entries sum to " +
                                    std::to_string(sum));
    }
}

ProbDist ProbDist::from_counts(std::span<const std::uint64_t> counts) {
    const std::uint64_t total =
        std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
    if (total == 0) {
        throw std::invalid_argument("ProbDist::from_counts: no counts");
    }
    std::vector<double> p(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
        p[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
    }
    return ProbDist(std::move(p));
}

Histogram marginal_low(std::span<const std::uint64_t> counts,
                       std::size_t n_position) {
    const std::size_t n = std::size_t{1} << n_position;
    Histogram out(n, 0);
    for (std::size_t i = 0; i < counts.size(); ++i) {
        out[i & (n - 1)] += counts[i];
    }
    return out;
}

} // namespace dtqw
