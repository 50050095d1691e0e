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
#include "dtqw/types.hpp"

#include <algorithm>
#include <cmath>

namespace dtqw {

Mat2 multiply(const Mat2 &a, const Mat2 &b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat2 adjoint(const Mat2 &m) {
    return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]),
            std::conj(m[3])};
}

double unitarity_error(const Mat2 &m) {
    const Mat2 p = multiply(adjoint(m), m);
    const Mat2 id = mat::identity();
    double err = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        err = std::max(err, std::abs(p[i] - id[i]));
    }
    return err;
}

namespace mat {

Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
Mat2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
Mat2 pauli_y() { return {0.0, Complex{0.0, -1.0}, Complex{0.0, 1.0}, 0.0}; }
Mat2 pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }

Mat2 hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    return {s, s, s, -s};
}

Mat2 sqrt_x() {
    return {Complex{0.5, 0.5}, Complex{0.5, -0.5}, Complex{0.5, -0.5},
            Complex{0.5, 0.5}};
}

Mat2 phase(double phi) { return {1.0, 0.0, 0.0, std::polar(1.0, phi)}; }

Mat2 rz(double lambda) {
    return {std::polar(1.0, -lambda / 2), 0.0, 0.0, std::polar(1.0, lambda / 2)};
}

} // namespace mat
} // namespace dtqw
