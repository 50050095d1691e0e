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
#include "dtqw/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace dtqw::oracle {

namespace {

using Eigen::Index;

Index idx(std::size_t i) { return static_cast<Index>(i); }

Complex omega_pow(std::size_t n_sites, long long k) {
    const long long m = static_cast<long long>(n_sites);
    const long long r = ((k % m) + m) % m;
    return std::polar(1.0, 2.0 * kPi * static_cast<double>(r) /
                               static_cast<double>(n_sites));
}

Eigen::MatrixXcd projector(int s) {
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(2, 2);
    p(s, s) = 1.0;
    return p;
}

Eigen::MatrixXcd matrix_power(const Eigen::MatrixXcd &m, std::size_t t) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(m.rows(), m.cols());
    for (std::size_t i = 0; i < t; ++i) {
        out = m * out;
    }
    return out;
}

} // namespace

double WalkAmplitudes::norm() const {
    double n2 = 0.0;
    for (std::size_t j = 0; j < size(); ++j) {
        n2 += std::norm(psi0[j]) + std::norm(psi1[j]);
    }
    return std::sqrt(n2);
}

std::vector<Complex> WalkAmplitudes::flatten() const {
    std::vector<Complex> out(psi0);
    out.insert(out.end(), psi1.begin(), psi1.end());
    return out;
}

WalkAmplitudes WalkAmplitudes::localized(std::size_t n_sites, double theta,
                                         double phi) {
    if (n_sites < 1) {
        throw std::invalid_argument("WalkAmplitudes: need at least one site");
    }
    WalkAmplitudes w{std::vector<Complex>(n_sites), std::vector<Complex>(n_sites)};
    w.psi0[0] = std::cos(theta / 2.0);
    w.psi1[0] = std::polar(std::sin(theta / 2.0), phi);
    return w;
}

WalkAmplitudes step(const WalkAmplitudes &state, const Mat2 &coin) {
    if (!is_unitary(coin)) {
        throw std::invalid_argument("oracle::step: coin is not unitary");
    }
    if (state.psi0.size() != state.psi1.size() || state.psi0.empty()) {
        throw std::invalid_argument("oracle::step: malformed amplitudes");
    }
    const std::size_t n_sites = state.size();
    WalkAmplitudes out{std::vector<Complex>(n_sites),
                       std::vector<Complex>(n_sites)};
    for (std::size_t j = 0; j < n_sites; ++j) {
        const Complex a = coin[0] * state.psi0[j] + coin[1] * state.psi1[j];
        const Complex b = coin[2] * state.psi0[j] + coin[3] * state.psi1[j];
        out.psi0[(j + n_sites - 1) % n_sites] = a;
        out.psi1[(j + 1) % n_sites] = b;
    }
    return out;
}

WalkAmplitudes evolve(const WalkConfig &config) {
    config.validate();
    auto w = WalkAmplitudes::localized(std::size_t{1} << config.n,
                                       config.theta, config.phi);
    for (std::size_t s = 0; s < config.steps; ++s) {
        w = step(w, config.coin);
    }
    return w;
}

double overlap(const WalkAmplitudes &a, const WalkAmplitudes &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("oracle::overlap: size mismatch");
    }
    Complex ip{0.0, 0.0};
    for (std::size_t j = 0; j < a.size(); ++j) {
        ip += std::conj(a.psi0[j]) * b.psi0[j] +
              std::conj(a.psi1[j]) * b.psi1[j];
    }
    return std::abs(ip);
}

std::vector<double> position_probabilities(const WalkAmplitudes &state) {
    std::vector<double> p(state.size());
    for (std::size_t j = 0; j < state.size(); ++j) {
        p[j] = std::norm(state.psi0[j]) + std::norm(state.psi1[j]);
    }
    return p;
}

ShiftPair shift_matrices(std::size_t n_sites) {
    if (n_sites < 2) {
        throw std::invalid_argument("shift_matrices: N must be >= 2");
    }
    ShiftPair sp{Eigen::MatrixXcd::Zero(idx(n_sites), idx(n_sites)),
                 Eigen::MatrixXcd::Zero(idx(n_sites), idx(n_sites))};
    for (std::size_t j = 0; j < n_sites; ++j) {
        sp.p0(idx((j + n_sites - 1) % n_sites), idx(j)) = 1.0;
        sp.p1(idx((j + 1) % n_sites), idx(j)) = 1.0;
    }
    return sp;
}

Eigen::MatrixXcd circulant(std::span<const Complex> c) {
    const std::size_t n_sites = c.size();
    if (n_sites == 0) {
        throw std::invalid_argument("circulant: empty first row");
    }
    Eigen::MatrixXcd m(idx(n_sites), idx(n_sites));
    for (std::size_t j = 0; j < n_sites; ++j) {
        for (std::size_t k = 0; k < n_sites; ++k) {
            m(idx(j), idx(k)) = c[(k + n_sites - j) % n_sites];
        }
    }
    return m;
}

CirculantEig circulant_eig(std::span<const Complex> c) {
    const std::size_t n_sites = c.size();
    if (n_sites == 0) {
        throw std::invalid_argument("circulant_eig: empty first row");
    }
    CirculantEig out;
    out.eigenvalues.assign(n_sites, Complex{0.0, 0.0});
    for (std::size_t m = 0; m < n_sites; ++m) {
        for (std::size_t k = 0; k < n_sites; ++k) {
            out.eigenvalues[m] +=
                c[k] * omega_pow(n_sites, -static_cast<long long>(m * k));
        }
    }
    const Eigen::MatrixXcd f = dft_matrix(n_sites);
    Eigen::MatrixXcd lambda = Eigen::MatrixXcd::Zero(idx(n_sites), idx(n_sites));
    for (std::size_t m = 0; m < n_sites; ++m) {
        lambda(idx(m), idx(m)) = out.eigenvalues[m];
    }
    out.residual = max_abs_diff(circulant(c), f.adjoint() * lambda * f);
    return out;
}

Eigen::MatrixXcd dft_matrix(std::size_t n_sites) {
    Eigen::MatrixXcd f(idx(n_sites), idx(n_sites));
    const double scale = 1.0 / std::sqrt(static_cast<double>(n_sites));
    for (std::size_t j = 0; j < n_sites; ++j) {
        for (std::size_t k = 0; k < n_sites; ++k) {
            f(idx(j), idx(k)) =
                scale * omega_pow(n_sites, static_cast<long long>(j * k));
        }
    }
    return f;
}

Eigen::MatrixXcd omega_matrix(std::size_t n_sites) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(idx(n_sites), idx(n_sites));
    for (std::size_t j = 0; j < n_sites; ++j) {
        m(idx(j), idx(j)) = omega_pow(n_sites, static_cast<long long>(j));
    }
    return m;
}

Eigen::MatrixXcd qubit_reversal(std::size_t n) {
    const std::size_t dim = std::size_t{1} << n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(idx(dim), idx(dim));
    for (std::size_t j = 0; j < dim; ++j) {
        std::size_t r = 0;
        for (std::size_t b = 0; b < n; ++b) {
            r |= ((j >> b) & 1U) << (n - 1 - b);
        }
        m(idx(r), idx(j)) = 1.0;
    }
    return m;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
        }
    }
    return out;
}

Eigen::MatrixXcd to_matrix(const Mat2 &m) {
    Eigen::MatrixXcd out(2, 2);
    out << m[0], m[1], m[2], m[3];
    return out;
}

Eigen::MatrixXcd conditional_shift(std::size_t n_sites) {
    const auto sp = shift_matrices(n_sites);
    return kron(projector(0), sp.p0) + kron(projector(1), sp.p1);
}

Eigen::MatrixXcd fourier_shift(std::size_t n_sites) {
    const Eigen::MatrixXcd om = omega_matrix(n_sites);
    return kron(projector(0), om.adjoint()) + kron(projector(1), om);
}

Eigen::MatrixXcd factored_fourier_shift(std::size_t n_sites) {
    const Eigen::MatrixXcd om = omega_matrix(n_sites);
    const Eigen::MatrixXcd id =
        Eigen::MatrixXcd::Identity(idx(n_sites), idx(n_sites));
    const Eigen::MatrixXcd ctrl =
        kron(projector(0), id) + kron(projector(1), om * om);
    return ctrl * kron(Eigen::MatrixXcd::Identity(2, 2), om.adjoint());
}

Eigen::MatrixXcd step_matrix(const Mat2 &coin, std::size_t n_sites) {
    const Eigen::MatrixXcd id =
        Eigen::MatrixXcd::Identity(idx(n_sites), idx(n_sites));
    return conditional_shift(n_sites) * kron(to_matrix(coin), id);
}

Eigen::MatrixXcd walk_unitary_direct(const Mat2 &coin, std::size_t n,
                                     std::size_t t) {
    return matrix_power(step_matrix(coin, std::size_t{1} << n), t);
}

Eigen::MatrixXcd walk_unitary_fourier(const Mat2 &coin, std::size_t n,
                                      std::size_t t) {
    const std::size_t n_sites = std::size_t{1} << n;
    const Eigen::MatrixXcd i2 = Eigen::MatrixXcd::Identity(2, 2);
    const Eigen::MatrixXcd id =
        Eigen::MatrixXcd::Identity(idx(n_sites), idx(n_sites));
    const Eigen::MatrixXcd f = kron(i2, dft_matrix(n_sites));
    const Eigen::MatrixXcd body =
        fourier_shift(n_sites) * kron(to_matrix(coin), id);
    return f.adjoint() * matrix_power(body, t) * f;
}

Eigen::MatrixXcd walk_unitary_swapless(const Mat2 &coin, std::size_t n,
                                       std::size_t t) {
    const std::size_t n_sites = std::size_t{1} << n;
    const Eigen::MatrixXcd i2 = Eigen::MatrixXcd::Identity(2, 2);
    const Eigen::MatrixXcd id =
        Eigen::MatrixXcd::Identity(idx(n_sites), idx(n_sites));
    const Eigen::MatrixXcd tau = qubit_reversal(n);
    const Eigen::MatrixXcd f_tilde = tau * dft_matrix(n_sites);
    const Eigen::MatrixXcd om_tilde = tau * omega_matrix(n_sites) * tau;
    const Eigen::MatrixXcd ctrl =
        kron(projector(0), id) + kron(projector(1), om_tilde * om_tilde);
    const Eigen::MatrixXcd body =
        ctrl * kron(to_matrix(coin), om_tilde.adjoint());
    const Eigen::MatrixXcd f = kron(i2, f_tilde);
    return f.adjoint() * matrix_power(body, t) * f;
}

double max_abs_diff(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    }
    return (a - b).cwiseAbs().maxCoeff();
}

} // namespace dtqw::oracle
