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
 * Reference DTQW: amplitude arrays with modular shifts, and the dense
 * matrices of the Fourier-frame construction. Nothing here uses the gate IR.
 *
 * Dense operators on the walk space are 2N x 2N with row/column index
 * s * N + j (coin s, position j).
 */
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "dtqw/types.hpp"
#include "dtqw/walk_config.hpp"

namespace dtqw::oracle {

struct WalkAmplitudes {
    std::vector<Complex> psi0;
    std::vector<Complex> psi1;

    std::size_t size() const { return psi0.size(); }
    double norm() const;
    /// psi0 followed by psi1.
    std::vector<Complex> flatten() const;

    /// (cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>) (x) |0_p> on N sites.
    static WalkAmplitudes localized(std::size_t n_sites, double theta,
                                    double phi);
};

/// Coin on every site, then coin-0 amplitudes move to j - 1 and coin-1
/// amplitudes to j + 1 (mod N). Throws std::invalid_argument for a
/// non-unitary coin or mismatched psi0/psi1 lengths.
WalkAmplitudes step(const WalkAmplitudes &state, const Mat2 &coin);

/// `config.steps` steps from the localized initial state on 2^n sites.
WalkAmplitudes evolve(const WalkConfig &config);

/// |<a|b>| of two flattened states.
double overlap(const WalkAmplitudes &a, const WalkAmplitudes &b);

/// Position marginal p_j = |psi0_j|^2 + |psi1_j|^2.
std::vector<double> position_probabilities(const WalkAmplitudes &state);

/// P0|j> = |j - 1>, P1|j> = |j + 1> (mod N). Throws for N < 2.
struct ShiftPair {
    Eigen::MatrixXcd p0;
    Eigen::MatrixXcd p1;
};
ShiftPair shift_matrices(std::size_t n_sites);

/// Circulant matrix with first row c: C(j, k) = c[(k - j) mod N].
Eigen::MatrixXcd circulant(std::span<const Complex> c);

struct CirculantEig {
    /// lambda_m = sum_k c_k omega_N^{-m k}
    std::vector<Complex> eigenvalues;
    /// max |C - F^dagger Lambda F| entry.
    double residual = 0.0;
};
CirculantEig circulant_eig(std::span<const Complex> c);

/// F(j, k) = omega_N^{j k} / sqrt(N).
Eigen::MatrixXcd dft_matrix(std::size_t n_sites);

/// diag(1, omega_N, ..., omega_N^{N-1}).
Eigen::MatrixXcd omega_matrix(std::size_t n_sites);

/// Bit reversal on n qubits (2^n x 2^n permutation).
Eigen::MatrixXcd qubit_reversal(std::size_t n);

Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b);

Eigen::MatrixXcd to_matrix(const Mat2 &m);

/// Conditional shift, block-diagonal diag(P0, P1).
Eigen::MatrixXcd conditional_shift(std::size_t n_sites);

/// diag(Omega^dagger, Omega).
Eigen::MatrixXcd fourier_shift(std::size_t n_sites);

/// (|0><0| (x) I + |1><1| (x) Omega^2)(I_c (x) Omega^dagger).
Eigen::MatrixXcd factored_fourier_shift(std::size_t n_sites);

/// U = S (C (x) I_p).
Eigen::MatrixXcd step_matrix(const Mat2 &coin, std::size_t n_sites);

/// U^t by repeated multiplication.
Eigen::MatrixXcd walk_unitary_direct(const Mat2 &coin, std::size_t n,
                                     std::size_t t);

/// (I (x) F^dagger) [Sigma (C (x) I)]^t (I (x) F).
Eigen::MatrixXcd walk_unitary_fourier(const Mat2 &coin, std::size_t n,
                                      std::size_t t);

/// The same with F replaced by the swapless transform and Omega by its
/// bit-reversed counterpart.
Eigen::MatrixXcd walk_unitary_swapless(const Mat2 &coin, std::size_t n,
                                       std::size_t t);

double max_abs_diff(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b);

} // namespace dtqw::oracle
