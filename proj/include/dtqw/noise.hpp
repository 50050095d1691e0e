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
 * Stochastic Pauli noise by Monte-Carlo trajectories.
 *
 * After every gate each qubit it touches independently suffers, with
 * probability p1 (one-qubit gates) or p2 (all other gates), a uniformly
 * random X, Y or Z. Every measured bit is flipped with probability
 * p_readout.
 */
#pragma once

#include <cstddef>
#include <cstdint>

#include "dtqw/circuit.hpp"
#include "dtqw/rng.hpp"
#include "dtqw/statevec.hpp"

namespace dtqw {

struct NoiseModel {
    double p1 = 0.0;
    double p2 = 0.0;
    double p_readout = 0.0;

    /// Throws std::invalid_argument unless every rate is in [0, 1].
    void validate() const;
    bool is_noiseless() const {
        return p1 == 0.0 && p2 == 0.0 && p_readout == 0.0;
    }
};

/// One trajectory of `circuit` from |0...0>, gate errors only.
StateVector noisy_trajectory(const Circuit &circuit, const NoiseModel &model,
                             Rng &rng);

/// `shots` single-shot trajectories. Trajectories are taken in blocks of 256;
/// block b draws from derive_seed(seed, b), so the result does not depend on
/// the thread count. Counts over all 2^n_qubits outcomes.
/// Throws std::invalid_argument if shots == 0.
Histogram run_noisy(const Circuit &circuit, const NoiseModel &model,
                    std::uint64_t shots, std::uint64_t seed);

/// Flips each of the low `n_bits` bits of `outcome` with probability p.
std::size_t apply_readout_error(std::size_t outcome, std::size_t n_bits,
                                double p, Rng &rng);

/// Averages `trajectories` noisy final states into coin, position and full
/// density matrices. The register is at most 10 qubits.
EnsembleAccumulator noisy_ensemble(const Circuit &circuit,
                                   const NoiseModel &model,
                                   std::size_t n_position,
                                   std::size_t trajectories,
                                   std::uint64_t seed);

} // namespace dtqw
