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
 * Dense state-vector simulation of the gate IR, plus the reduced-state
 * quantities (position marginal, subsystem purities) the walk analysis needs.
 *
 * For a walk on the 2^n-cycle the register has n+1 qubits and basis index
 * i = s * 2^n + j holds coin s and position j.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "dtqw/circuit.hpp"
#include "dtqw/prob_dist.hpp"
#include "dtqw/types.hpp"

namespace dtqw {

class StateVector {
  public:
    /// |0...0> on `n_qubits` qubits (1 <= n_qubits <= 24).
    explicit StateVector(std::size_t n_qubits);

    static StateVector basis(std::size_t n_qubits, std::size_t index);

    /// Length must be a power of two >= 2 and the vector normalised within
    /// 1e-10; throws std::invalid_argument otherwise.
    static StateVector from_amplitudes(std::vector<Complex> amps);

    std::size_t n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    std::span<const Complex> amplitudes() const { return amps_; }
    const Complex &operator[](std::size_t i) const { return amps_[i]; }

    double norm() const;
    std::vector<double> probabilities() const;

    /// Throws std::out_of_range for a qubit >= n_qubits() and
    /// std::invalid_argument for a non-unitary matrix.
    void apply(const Gate &gate);
    /// Throws std::invalid_argument if widths differ.
    void apply(const Circuit &circuit);

    /// Unchecked kernel: `u` on `target` where every control matches.
    void apply_controlled(std::span<const Control> controls, Qubit target,
                          const Mat2 &u);
    /// Unchecked kernel: `u` on `target` where (index & mask) == value.
    void apply_masked(std::size_t mask, std::size_t value, Qubit target,
                      const Mat2 &u);

  private:
    StateVector(std::size_t n_qubits, std::vector<Complex> amps);

    std::size_t n_qubits_;
    std::vector<Complex> amps_;
};

StateVector apply_gate(StateVector state, const Gate &gate);
StateVector run_circuit(StateVector state, const Circuit &circuit);

/// |<a|b>|; throws std::invalid_argument on a dimension mismatch.
double overlap(const StateVector &a, const StateVector &b);

/// Walker position marginal: p_j = sum_s |psi_{s,j}|^2, taking the top
/// qubit as the coin.
ProbDist position_distribution(const StateVector &state);

struct PurityReport {
    double coin = 1.0;
    double position = 1.0;
    double total = 1.0;
};

/// Tr rho^2 of the low `n_position` qubits, of the remaining high qubits
/// and of the whole register, by exact partial trace.
PurityReport purities(const StateVector &state, std::size_t n_position);

/// `shots` samples of the full register; deterministic for a given seed.
/// Throws std::invalid_argument if shots == 0.
Histogram sample_counts(const StateVector &state, std::uint64_t shots,
                        std::uint64_t seed);

/// Reduced density matrix on `keep`; bit i of its row index is the value of
/// qubit keep[i].
Eigen::MatrixXcd reduced_density_matrix(const StateVector &state,
                                        std::span<const Qubit> keep);

/// Tr rho^2.
double purity(const Eigen::MatrixXcd &rho);

/// Dense unitary of a circuit, column j = circuit |j>. Up to 12 qubits.
Eigen::MatrixXcd circuit_unitary(const Circuit &circuit);

/// Running average of coin, position and full density matrices over an
/// ensemble of pure states (trajectories), for mixed-state purities.
class EnsembleAccumulator {
  public:
    /// Register of `n_qubits` (at most 10) whose low `n_position` qubits
    /// are the position.
    EnsembleAccumulator(std::size_t n_qubits, std::size_t n_position);

    void add(const StateVector &state);
    std::size_t count() const { return count_; }

    PurityReport purities() const;
    /// Averaged density matrix of the given part.
    Eigen::MatrixXcd coin_density() const;
    Eigen::MatrixXcd position_density() const;
    Eigen::MatrixXcd total_density() const;

  private:
    std::size_t n_qubits_;
    std::size_t n_position_;
    std::size_t count_ = 0;
    Eigen::MatrixXcd coin_;
    Eigen::MatrixXcd position_;
    Eigen::MatrixXcd total_;
};

} // namespace dtqw
