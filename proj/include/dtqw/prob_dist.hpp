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

#include <cstddef>
#include <span>
#include <vector>

#include "dtqw/types.hpp"

namespace dtqw {

/// Nonnegative weights summing to one (within 1e-9).
class ProbDist {
  public:
    /// Throws std::invalid_argument on empty input, negative entries or a
    /// sum off by more than 1e-9.
    explicit ProbDist(std::vector<double> p);

    /// Empirical distribution of a histogram. Throws if it is empty or all
    /// counts are zero.
    static ProbDist from_counts(std::span<const std::uint64_t> counts);

    std::size_t size() const { return p_.size(); }
    double operator[](std::size_t k) const { return p_[k]; }
    std::span<const double> values() const { return p_; }

  private:
    std::vector<double> p_;
};

/// Sums a histogram over `n_qubits` basis outcomes down to the low
/// `n_position` qubits (the coin, and anything above it, marginalised).
Histogram marginal_low(std::span<const std::uint64_t> counts,
                       std::size_t n_position);

} // namespace dtqw
