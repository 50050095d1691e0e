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
#include "dtqw/statevec.hpp"

#include <cmath>
#include <stdexcept>

#include "dtqw/rng.hpp"

namespace dtqw {

namespace {

constexpr std::size_t kMaxQubits = 24;

inline Complex mul(const Complex &a, const Complex &b) {
    return {a.real() * b.real() - a.imag() * b.imag(),
            a.real() * b.imag() + a.imag() * b.real()};
}

bool is_power_of_two(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }

std::size_t log2_exact(std::size_t x) {
    std::size_t n = 0;
    while ((std::size_t{1} << n) < x) {
        ++n;
    }
    return n;
}

} // namespace

StateVector::StateVector(std::size_t n_qubits)
    : n_qubits_(n_qubits) {
    if (n_qubits == 0 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("StateVector: unsupported qubit count " +
                                    std::to_string(n_qubits));
    }
    amps_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector::StateVector(std::size_t n_qubits, std::vector<Complex> amps)
    : n_qubits_(n_qubits), amps_(std::move(amps)) {}

StateVector StateVector::basis(std::size_t n_qubits, std::size_t index) {
    StateVector s(n_qubits);
    if (index >= s.dim()) {
        throw std::out_of_range("StateVector::basis: index out of range");
    }
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amps) {
    if (amps.size() < 2 || !is_power_of_two(amps.size())) {
        throw std::invalid_argument(
            "StateVector::from_amplitudes: length must be a power of two");
    }
    double n2 = 0.0;
    for (const auto &a : amps) {
        n2 += std::norm(a);
    }
    if (std::abs(std::sqrt(n2) - 1.0) > kUnitaryTol) {
        throw std::invalid_argument(
            "StateVector::from_amplitudes: state is not normalised");
    }
    const std::size_t n = log2_exact(amps.size());
    return StateVector(n, std::move(amps));
}

double StateVector::norm() const {
    double n2 = 0.0;
    for (const auto &a : amps_) {
        n2 += std::norm(a);
    }
    return std::sqrt(n2);
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        p[i] = std::norm(amps_[i]);
    }
    return p;
}

void StateVector::apply_controlled(std::span<const Control> controls,
                                   Qubit target, const Mat2 &u) {
    std::size_t mask = 0;
    std::size_t value = 0;
    for (const auto &c : controls) {
        mask |= std::size_t{1} << c.qubit;
        if (c.polarity) {
            value |= std::size_t{1} << c.qubit;
        }
    }
    apply_masked(mask, value, target, u);
}

void StateVector::apply_masked(std::size_t mask, std::size_t value,
                               Qubit target, const Mat2 &u) {
    const std::size_t stride = std::size_t{1} << target;
    const std::size_t dim = amps_.size();
    Complex *a = amps_.data();
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t k = 0; k < stride; ++k) {
            const std::size_t i0 = base + k;
            if ((i0 & mask) != value) {
                continue;
            }
            const std::size_t i1 = i0 + stride;
            const Complex x = a[i0];
            const Complex y = a[i1];
            a[i0] = mul(u[0], x) + mul(u[1], y);
            a[i1] = mul(u[2], x) + mul(u[3], y);
        }
    }
}

void StateVector::apply(const Gate &gate) {
    if (gate.is_directive()) {
        return;
    }
    for (Qubit q : gate.qubits()) {
        if (q >= n_qubits_) {
            throw std::out_of_range("apply_gate: qubit " + std::to_string(q) +
                                    " out of range for " +
                                    std::to_string(n_qubits_) + " qubits");
        }
    }
    const Mat2 u = gate.target_matrix();
    if (gate.kind() == GateKind::Unitary1q && !is_unitary(u)) {
        throw std::invalid_argument("apply_gate: matrix is not unitary");
    }
    apply_controlled(gate.controls(), gate.target(), u);
}

void StateVector::apply(const Circuit &circuit) {
    if (circuit.n_qubits() != n_qubits_) {
        throw std::invalid_argument(
            "run_circuit: circuit has " + std::to_string(circuit.n_qubits()) +
            " qubits, state has " + std::to_string(n_qubits_));
    }
    for (const Gate &g : circuit.gates()) {
        apply(g);
    }
}

StateVector apply_gate(StateVector state, const Gate &gate) {
    state.apply(gate);
    return state;
}

StateVector run_circuit(StateVector state, const Circuit &circuit) {
    state.apply(circuit);
    return state;
}

double overlap(const StateVector &a, const StateVector &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("overlap: dimension mismatch");
    }
    Complex ip{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        ip += std::conj(a[i]) * b[i];
    }
    return std::abs(ip);
}

ProbDist position_distribution(const StateVector &state) {
    if (state.n_qubits() < 2) {
        throw std::invalid_argument(
            "position_distribution: need a coin and at least one position "
            "qubit");
    }
    const std::size_t n_pos = std::size_t{1} << (state.n_qubits() - 1);
    std::vector<double> p(n_pos, 0.0);
    for (std::size_t i = 0; i < state.dim(); ++i) {
        p[i & (n_pos - 1)] += std::norm(state[i]);
    }
    // Renormalise away float drift so ProbDist's 1e-9 check is about
    // genuine errors.
    double sum = 0.0;
    for (double x : p) {
        sum += x;
    }
    for (double &x : p) {
        x /= sum;
    }
    return ProbDist(std::move(p));
}

PurityReport purities(const StateVector &state, std::size_t n_position) {
    if (n_position >= state.n_qubits()) {
        throw std::invalid_argument("purities: n_position must be below the "
                                    "register width");
    }
    const std::size_t dp = std::size_t{1} << n_position;
    const std::size_t dc = state.dim() / dp;
    // m(a, b) = psi_{a, b}; row = high (coin) index, column = position.
    const Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic,
                                         Eigen::Dynamic, Eigen::RowMajor>>
        m(state.amplitudes().data(), static_cast<Eigen::Index>(dc),
          static_cast<Eigen::Index>(dp));
    const Eigen::MatrixXcd rho_c = m * m.adjoint();
    const Eigen::MatrixXcd rho_p = m.transpose() * m.conjugate();
    const double n2 = state.norm() * state.norm();
    return {purity(rho_c), purity(rho_p), n2 * n2};
}

Histogram sample_counts(const StateVector &state, std::uint64_t shots,
                        std::uint64_t seed) {
    if (shots == 0) {
        throw std::invalid_argument("sample_counts: shots must be >= 1");
    }
    Rng rng(seed);
    const auto p = state.probabilities();
    return sample_multinomial(p, shots, rng);
}

Eigen::MatrixXcd reduced_density_matrix(const StateVector &state,
                                        std::span<const Qubit> keep) {
    std::size_t keep_mask = 0;
    for (Qubit q : keep) {
        if (q >= state.n_qubits() || (keep_mask >> q) & 1U) {
            throw std::invalid_argument(
                "reduced_density_matrix: bad or repeated qubit");
        }
        keep_mask |= std::size_t{1} << q;
    }
    const std::size_t dk = std::size_t{1} << keep.size();
    const std::size_t dr = state.dim() / dk;
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dk),
                                                static_cast<Eigen::Index>(dr));
    for (std::size_t i = 0; i < state.dim(); ++i) {
        std::size_t k = 0;
        for (std::size_t b = 0; b < keep.size(); ++b) {
            k |= ((i >> keep[b]) & 1U) << b;
        }
        std::size_t r = 0;
        std::size_t rb = 0;
        for (std::size_t q = 0; q < state.n_qubits(); ++q) {
            if (!((keep_mask >> q) & 1U)) {
                r |= ((i >> q) & 1U) << rb++;
            }
        }
        a(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(r)) =
            state[i];
    }
    return a * a.adjoint();
}

double purity(const Eigen::MatrixXcd &rho) {
    // Tr rho^2 = sum_ij |rho_ij|^2 for Hermitian rho.
    return rho.cwiseAbs2().sum();
}

Eigen::MatrixXcd circuit_unitary(const Circuit &circuit) {
    if (circuit.n_qubits() > 12) {
        throw std::invalid_argument("circuit_unitary: too many qubits");
    }
    const std::size_t dim = std::size_t{1} << circuit.n_qubits();
    Eigen::MatrixXcd u(static_cast<Eigen::Index>(dim),
                       static_cast<Eigen::Index>(dim));
    for (std::size_t j = 0; j < dim; ++j) {
        auto s = run_circuit(StateVector::basis(circuit.n_qubits(), j),
                             circuit);
        for (std::size_t i = 0; i < dim; ++i) {
            u(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                s[i];
        }
    }
    return u;
}

EnsembleAccumulator::EnsembleAccumulator(std::size_t n_qubits,
                                         std::size_t n_position)
    : n_qubits_(n_qubits), n_position_(n_position) {
    if (n_qubits == 0 || n_qubits > 10 || n_position >= n_qubits) {
        throw std::invalid_argument("EnsembleAccumulator: bad register");
    }
    const auto dp = static_cast<Eigen::Index>(std::size_t{1} << n_position);
    const auto d = static_cast<Eigen::Index>(std::size_t{1} << n_qubits);
    coin_ = Eigen::MatrixXcd::Zero(d / dp, d / dp);
    position_ = Eigen::MatrixXcd::Zero(dp, dp);
    total_ = Eigen::MatrixXcd::Zero(d, d);
}

void EnsembleAccumulator::add(const StateVector &state) {
    if (state.n_qubits() != n_qubits_) {
        throw std::invalid_argument("EnsembleAccumulator: width mismatch");
    }
    const auto dp = position_.rows();
    const auto dc = coin_.rows();
    const Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic,
                                         Eigen::Dynamic, Eigen::RowMajor>>
        m(state.amplitudes().data(), dc, dp);
    coin_ += m * m.adjoint();
    position_ += m.transpose() * m.conjugate();
    const Eigen::Map<const Eigen::VectorXcd> v(
        state.amplitudes().data(), static_cast<Eigen::Index>(state.dim()));
    total_ += v * v.adjoint();
    ++count_;
}

Eigen::MatrixXcd EnsembleAccumulator::coin_density() const {
    return count_ ? Eigen::MatrixXcd(coin_ / static_cast<double>(count_))
                  : coin_;
}

Eigen::MatrixXcd EnsembleAccumulator::position_density() const {
    return count_ ? Eigen::MatrixXcd(position_ / static_cast<double>(count_))
                  : position_;
}

Eigen::MatrixXcd EnsembleAccumulator::total_density() const {
    return count_ ? Eigen::MatrixXcd(total_ / static_cast<double>(count_))
                  : total_;
}

PurityReport EnsembleAccumulator::purities() const {
    if (count_ == 0) {
        throw std::logic_error("EnsembleAccumulator: no states added");
    }
    return {purity(coin_density()), purity(position_density()),
            purity(total_density())};
}

} // namespace dtqw
