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
 * Purity estimation from randomized local measurements.
 *
 * Each round draws a Haar-random U(2) per qubit of the part, measures the
 * rotated part `shots` times and scores the histogram with
 * sum_{s,s'} (-2)^{-D(s,s')} P(s) P(s'), D the Hamming distance. Products are
 * estimated without bias from the counts, i.e. n_s n_s' / (M (M - 1)) off the
 * diagonal and n_s (n_s - 1) / (M (M - 1)) on it. The purity is 2^{n_A} times
 * the mean score.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "dtqw/rng.hpp"
#include "dtqw/statevec.hpp"
#include "dtqw/types.hpp"

namespace dtqw {

enum class Part {
    Coin,
    Position,
    Total,
};

/// Qubits of a part of an (n_position + 1)-qubit walk register.
std::vector<Qubit> part_qubits(Part part, std::size_t n_position);

/// Measures the part after applying unitaries[i] to its i-th qubit.
/// Returns counts over 2^size outcomes, bit i = qubit i of the part.
using MeasurementRunner = std::function<Histogram(
    std::span<const Mat2> unitaries, std::uint64_t shots, Rng &rng)>;

struct PurityEstimate {
    double purity = 0.0;
    double std_error = 0.0;
};

/// Throws std::invalid_argument if n_unitaries < 2, shots < 2 or
/// part_size == 0. Deterministic for a given seed.
PurityEstimate randomized_purity(const MeasurementRunner &run,
                                 std::size_t part_size,
                                 std::size_t n_unitaries, std::uint64_t shots,
                                 std::uint64_t seed);

/// Runner over a pure state; `part` lists the measured qubits.
MeasurementRunner state_runner(StateVector state, std::vector<Qubit> part);

/// Runner over a density matrix of the part itself (dimension 2^size).
MeasurementRunner density_runner(Eigen::MatrixXcd rho);

/// Haar-distributed element of U(2).
Mat2 haar_unitary(Rng &rng);

/// Hamming-kernel score of one histogram (the quantity averaged above).
double randomized_score(std::span<const std::uint64_t> counts,
                        std::size_t part_size);

} // namespace dtqw
