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
 * Figures of merit: Hellinger distance and fidelity between position
 * distributions, Renyi-2 entropies, and the closed-form resource counts of
 * the four walk schemes.
 */
#pragma once

#include <cstddef>

#include "dtqw/circuit.hpp"
#include "dtqw/prob_dist.hpp"
#include "dtqw/statevec.hpp"
#include "dtqw/walk_config.hpp"

namespace dtqw {

struct HellingerResult {
    double distance = 0.0;
    /// (1 - distance^2)^2
    double fidelity = 1.0;
};

/// Throws std::invalid_argument if the lengths differ.
HellingerResult hellinger(const ProbDist &p, const ProbDist &q);

/// -log2(purity). Throws std::invalid_argument outside (0, 1 + 1e-12].
double renyi2(double purity);

/// Entropies in bits.
struct EntropyReport {
    double s2_coin = 0.0;
    double s2_position = 0.0;
    double s2_total = 0.0;
};

EntropyReport entropies(const PurityReport &purity);

/// Gate counts, depth and ancillae of a t-step walk on the 2^n-cycle,
/// excluding coin-state preparation. Throws std::invalid_argument for
/// n < min_cost_model_n(scheme).
MetricsReport closed_form_metrics(Scheme scheme, std::size_t n, std::size_t t);

} // namespace dtqw
