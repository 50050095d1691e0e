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
 * Circuit builders for the DTQW on the 2^n-cycle.
 *
 * Every builder realizes the shift S|s, j> = |s, (j + 2s - 1) mod N>: coin 0
 * steps left, coin 1 steps right. Walk circuits act on n + 1 qubits with the
 * coin on qubit n. Barriers separate the blocks whose depths add up in the
 * cost model (transform, step, inverse transform).
 */
#pragma once

#include <cstddef>

#include "dtqw/circuit.hpp"
#include "dtqw/walk_config.hpp"

namespace dtqw {

/// QFT on n qubits. Without swaps the output is the bit-reversed transform
/// (tau F).
Circuit qft(std::size_t n, bool with_swaps);

/// n parallel phase gates. Untilded: qubit k gets R_{n-k}, so the layer is
/// diag(omega_N^j). Tilded: qubit k gets R_{k+1}.
Circuit omega_layer(std::size_t n, bool dagger, bool tilde);

/// One Fourier-frame step on n + 1 qubits: coin and the tilded
/// Omega-dagger layer in parallel, then coin-controlled R_k on qubit k for
/// k = n-1 down to 1.
Circuit build_present_step(std::size_t n, const Mat2 &coin);

/// |j> -> |(j + 1) mod 2^n> on n qubits.
Circuit increment_circuit(std::size_t n);

/// One-qubit circuit taking |0> to cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
Circuit prepare_coin_state(double theta, double phi);

/// Walk circuit without the coin-state preparation, for cost comparisons.
Circuit build_walk_evolution(const WalkConfig &config);

/// Coin-state preparation followed by build_walk_evolution.
Circuit build_walk(const WalkConfig &config);

enum class IdVariant {
    LinearDepth,
    Ancilla,
};

/// Closed-form cost of the increment/decrement walk with the
/// multi-controlled gates decomposed. Throws std::invalid_argument for
/// n < 3 (LinearDepth) or n < 4 (Ancilla).
MetricsReport id_cost_model(std::size_t n, std::size_t t, IdVariant variant);

} // namespace dtqw
