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
 * Scalar and small-matrix vocabulary shared by every module.
 */
#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <vector>

namespace dtqw {

using Complex = std::complex<double>;
using Qubit = std::size_t;

/// Counts per computational-basis outcome; index = outcome bitstring.
using Histogram = std::vector<std::uint64_t>;

/// Row-major 2x2 complex matrix: {m00, m01, m10, m11}.
using Mat2 = std::array<Complex, 4>;

inline constexpr double kPi = std::numbers::pi;

/// Tolerance for unitarity and norm checks.
inline constexpr double kUnitaryTol = 1e-10;

Mat2 multiply(const Mat2 &a, const Mat2 &b);
Mat2 adjoint(const Mat2 &m);

/// max_ij |(U^dagger U - I)_ij|
double unitarity_error(const Mat2 &m);

inline bool is_unitary(const Mat2 &m, double tol = kUnitaryTol) {
    return unitarity_error(m) <= tol;
}

namespace mat {
Mat2 identity();
Mat2 pauli_x();
Mat2 pauli_y();
Mat2 pauli_z();
Mat2 hadamard();
Mat2 sqrt_x();
/// diag(1, e^{i phi})
Mat2 phase(double phi);
/// diag(e^{-i lambda/2}, e^{i lambda/2})
Mat2 rz(double lambda);
} // namespace mat

} // namespace dtqw
