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
#include "dtqw/randomized.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dtqw {

std::vector<Qubit> part_qubits(Part part, std::size_t n_position) {
    std::vector<Qubit> q;
    switch (part) {
    case Part::Coin:
        q.push_back(n_position);
        break;
    case Part::Position:
        q.resize(n_position);
        std::iota(q.begin(), q.end(), Qubit{0});
        break;
    case Part::Total:
        q.resize(n_position + 1);
        std::iota(q.begin(), q.end(), Qubit{0});
        break;
    }
    return q;
}

Mat2 haar_unitary(Rng &rng) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const double two_pi = 2.0 * kPi;
    const double xi = u01(rng);
    const double psi = two_pi * u01(rng);
    const double chi = two_pi * u01(rng);
    const double alpha = two_pi * u01(rng);
    const double ang = std::asin(std::sqrt(xi));
    const Complex g = std::polar(1.0, alpha);
    const double c = std::cos(ang);
    const double s = std::sin(ang);
    return {g * std::polar(c, psi), g * std::polar(s, chi),
            -g * std::polar(s, -chi), g * std::polar(c, -psi)};
}

double randomized_score(std::span<const std::uint64_t> counts,
                        std::size_t part_size) {
    const std::size_t dim = std::size_t{1} << part_size;
    if (counts.size() != dim) {
        throw std::invalid_argument("randomized_score: histogram size");
    }
    const double m = static_cast<double>(
        std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}));
    if (m < 2.0) {
        throw std::invalid_argument("randomized_score: need >= 2 shots");
    }
    std::vector<double> v(counts.begin(), counts.end());
    // Per bit the kernel is [[1, -1/2], [-1/2, 1]].
    for (std::size_t b = 0; b < part_size; ++b) {
        const std::size_t stride = std::size_t{1} << b;
        for (std::size_t base = 0; base < dim; base += 2 * stride) {
            for (std::size_t k = 0; k < stride; ++k) {
                const double x = v[base + k];
                const double y = v[base + k + stride];
                v[base + k] = x - 0.5 * y;
                v[base + k + stride] = y - 0.5 * x;
            }
        }
    }
    double quad = 0.0;
    for (std::size_t s = 0; s < dim; ++s) {
        quad += static_cast<double>(counts[s]) * v[s];
    }
    return (quad - m) / (m * (m - 1.0));
}

PurityEstimate randomized_purity(const MeasurementRunner &run,
                                 std::size_t part_size,
                                 std::size_t n_unitaries, std::uint64_t shots,
                                 std::uint64_t seed) {
    if (n_unitaries < 2) {
        throw std::invalid_argument("randomized_purity: need >= 2 unitaries");
    }
    if (shots < 2) {
        throw std::invalid_argument("randomized_purity: need >= 2 shots");
    }
    if (part_size == 0) {
        throw std::invalid_argument("randomized_purity: empty part");
    }
    std::vector<double> scores(n_unitaries);
    std::vector<Mat2> us(part_size);
    for (std::size_t r = 0; r < n_unitaries; ++r) {
        Rng rng(derive_seed(seed, r));
        for (auto &u : us) {
            u = haar_unitary(rng);
        }
        const Histogram h = run(us, shots, rng);
        scores[r] = randomized_score(h, part_size);
    }
    const double n = static_cast<double>(n_unitaries);
    const double mean = std::accumulate(scores.begin(), scores.end(), 0.0) / n;
    double var = 0.0;
    for (double s : scores) {
        var += (s - mean) * (s - mean);
    }
    var /= n - 1.0;
    const double scale = std::ldexp(1.0, static_cast<int>(part_size));
    return {scale * mean, scale * std::sqrt(var / n)};
}

MeasurementRunner state_runner(StateVector state, std::vector<Qubit> part) {
    for (Qubit q : part) {
        if (q >= state.n_qubits()) {
            throw std::invalid_argument("state_runner: qubit out of range");
        }
    }
    return [state = std::move(state), part = std::move(part)](
               std::span<const Mat2> unitaries, std::uint64_t shots,
               Rng &rng) {
        if (unitaries.size() != part.size()) {
            throw std::invalid_argument("state_runner: one unitary per qubit");
        }
        StateVector s = state;
        for (std::size_t i = 0; i < part.size(); ++i) {
            s.apply_controlled({}, part[i], unitaries[i]);
        }
        std::vector<double> p(std::size_t{1} << part.size(), 0.0);
        for (std::size_t idx = 0; idx < s.dim(); ++idx) {
            std::size_t k = 0;
            for (std::size_t b = 0; b < part.size(); ++b) {
                k |= ((idx >> part[b]) & 1U) << b;
            }
            p[k] += std::norm(s[idx]);
        }
        return sample_multinomial(p, shots, rng);
    };
}

MeasurementRunner density_runner(Eigen::MatrixXcd rho) {
    const auto dim = static_cast<std::size_t>(rho.rows());
    if (rho.rows() != rho.cols() || dim < 2 || (dim & (dim - 1)) != 0) {
        throw std::invalid_argument("density_runner: bad density matrix");
    }
    std::size_t size = 0;
    while ((std::size_t{1} << size) < dim) {
        ++size;
    }
    return [rho = std::move(rho), size](std::span<const Mat2> unitaries,
                                        std::uint64_t shots, Rng &rng) {
        if (unitaries.size() != size) {
            throw std::invalid_argument(
                "density_runner: one unitary per qubit");
        }
        Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(1, 1);
        for (std::size_t i = size; i-- > 0;) {
            Eigen::MatrixXcd ui(2, 2);
            ui << unitaries[i][0], unitaries[i][1], unitaries[i][2],
                unitaries[i][3];
            Eigen::MatrixXcd next(u.rows() * 2, u.cols() * 2);
            for (Eigen::Index r = 0; r < u.rows(); ++r) {
                for (Eigen::Index c = 0; c < u.cols(); ++c) {
                    next.block(r * 2, c * 2, 2, 2) = u(r, c) * ui;
                }
            }
            u = std::move(next);
        }
        const Eigen::MatrixXcd r = u * rho * u.adjoint();
        std::vector<double> p(static_cast<std::size_t>(r.rows()));
        for (Eigen::Index k = 0; k < r.rows(); ++k) {
            p[static_cast<std::size_t>(k)] = std::max(0.0, r(k, k).real());
        }
        return sample_multinomial(p, shots, rng);
    };
}

} // namespace dtqw
