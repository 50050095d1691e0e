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
 * Hand-rolled generators shared by the unit tests.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "dtqw/circuit.hpp"
#include "dtqw/statevec.hpp"
#include "dtqw/types.hpp"

namespace dtqw::testing {

using Gen = std::mt19937_64;

inline double uniform(Gen &g, double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline std::size_t index_below(Gen &g, std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(g);
}

/// Gaussian amplitudes, normalised: uniform on the unit sphere.
inline StateVector random_state(Gen &g, std::size_t n_qubits) {
    std::normal_distribution<double> nd;
    std::vector<Complex> a(std::size_t{1} << n_qubits);
    double n2 = 0.0;
    for (auto &x : a) {
        x = {nd(g), nd(g)};
        n2 += std::norm(x);
    }
    for (auto &x : a) {
        x /= std::sqrt(n2);
    }
    return StateVector::from_amplitudes(std::move(a));
}

/// Unitary from a random ZYZ angle triple and global phase.
inline Mat2 random_unitary(Gen &g) {
    const double a = uniform(g, 0, 2 * kPi);
    const double b = uniform(g, 0, 2 * kPi);
    const double c = uniform(g, 0, 2 * kPi);
    const double th = uniform(g, 0, kPi);
    const Complex ph = std::polar(1.0, a);
    const double cs = std::cos(th / 2);
    const double sn = std::sin(th / 2);
    return {ph * cs, -ph * std::polar(sn, c), ph * std::polar(sn, b),
            ph * std::polar(cs, b + c)};
}

/// `k` distinct qubits out of n.
inline std::vector<Qubit> distinct_qubits(Gen &g, std::size_t n, std::size_t k) {
    std::vector<Qubit> q(n);
    std::iota(q.begin(), q.end(), Qubit{0});
    std::shuffle(q.begin(), q.end(), g);
    q.resize(k);
    return q;
}

/// Random gate over the whole IR. `allow_mcx` admits multi-controlled X with
/// up to three mixed-polarity controls.
inline Gate random_gate(Gen &g, std::size_t n, bool allow_mcx) {
    const std::size_t kinds = (n >= 2 ? 8 : 6) + (allow_mcx && n >= 3 ? 1 : 0);
    const std::size_t k = index_below(g, kinds);
    const Qubit q = index_below(g, n);
    switch (k) {
    case 0:
        return Gate::x(q);
    case 1:
        return Gate::h(q);
    case 2:
        return Gate::sqrt_x(q);
    case 3:
        return Gate::rz(q, uniform(g, -kPi, kPi));
    case 4:
        return Gate::phase(q, uniform(g, -kPi, kPi));
    case 5:
        return Gate::unitary(q, random_unitary(g));
    case 6: {
        const auto p = distinct_qubits(g, n, 2);
        return Gate::cx(p[0], p[1]);
    }
    case 7: {
        const auto p = distinct_qubits(g, n, 2);
        return Gate::cphase(p[0], p[1], uniform(g, -kPi, kPi));
    }
    default: {
        const std::size_t nc = 1 + index_below(g, std::min<std::size_t>(3, n - 1));
        const auto p = distinct_qubits(g, n, nc + 1);
        std::vector<Control> ctl;
        for (std::size_t i = 0; i < nc; ++i) {
            ctl.push_back({p[i], index_below(g, 2) == 1});
        }
        return Gate::mcx(std::move(ctl), p[nc]);
    }
    }
}

inline Circuit random_circuit(Gen &g, std::size_t n, std::size_t length,
                              bool allow_mcx) {
    Circuit c(n);
    for (std::size_t i = 0; i < length; ++i) {
        c.add(random_gate(g, n, allow_mcx));
    }
    return c;
}

} // namespace dtqw::testing
