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
 * Acceptance run: one PASS/FAIL line per criterion. Exit status is the
 * number of failures.
 */
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dtqw/circuit.hpp"
#include "dtqw/metrics.hpp"
#include "dtqw/noise.hpp"
#include "dtqw/oracle.hpp"
#include "dtqw/randomized.hpp"
#include "dtqw/statevec.hpp"
#include "dtqw/walks.hpp"

using namespace dtqw;
using Eigen::MatrixXcd;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    std::string name;
    double time_limit_s = 0.0; // 0: none
    std::function<Outcome()> check;
};

std::string fmt(const char *f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

WalkConfig hadamard_walk(std::size_t n, std::size_t t,
                         Scheme scheme = Scheme::Present) {
    WalkConfig cfg;
    cfg.n = n;
    cfg.steps = t;
    cfg.theta = kPi / 6;
    cfg.phi = kPi / 2;
    cfg.scheme = scheme;
    return cfg;
}

StateVector simulate(const WalkConfig &cfg) {
    return run_circuit(StateVector(cfg.n + 1), build_walk(cfg));
}

StateVector two_term_state(std::size_t n, std::size_t i0, Complex a0,
                           std::size_t i1, Complex a1) {
    std::vector<Complex> v(std::size_t{2} << n, 0.0);
    v[i0] = a0;
    v[i1] = a1;
    return StateVector::from_amplitudes(std::move(v));
}

Outcome diagonalization() {
    double worst = 0.0;
    for (std::size_t n_sites : {4u, 8u, 16u, 32u}) {
        const auto sp = oracle::shift_matrices(n_sites);
        const MatrixXcd f = oracle::dft_matrix(n_sites);
        const MatrixXcd om = oracle::omega_matrix(n_sites);
        worst = std::max(worst, oracle::max_abs_diff(
                                    sp.p0, f.adjoint() * om.adjoint() * f));
        worst = std::max(worst,
                         oracle::max_abs_diff(sp.p1, f.adjoint() * om * f));
    }
    return {worst < 1e-12, "max deviation " + fmt("%.2e", worst)};
}

Outcome sigma_block() {
    double block = 0.0;
    double factored = 0.0;
    for (std::size_t n = 1; n <= 4; ++n) {
        const std::size_t n_sites = std::size_t{1} << n;
        const MatrixXcd f = oracle::dft_matrix(n_sites);
        const MatrixXcd i2 = MatrixXcd::Identity(2, 2);
        const MatrixXcd sigma = oracle::kron(i2, f) *
                                oracle::conditional_shift(n_sites) *
                                oracle::kron(i2, f.adjoint());
        const MatrixXcd om = oracle::omega_matrix(n_sites);
        MatrixXcd want = MatrixXcd::Zero(2 * n_sites, 2 * n_sites);
        const auto d = static_cast<Eigen::Index>(n_sites);
        want.topLeftCorner(d, d) = om.adjoint();
        want.bottomRightCorner(d, d) = om;
        block = std::max(block, oracle::max_abs_diff(sigma, want));
        factored = std::max(factored,
                            oracle::max_abs_diff(
                                want, oracle::factored_fourier_shift(n_sites)));
    }
    return {block < 1e-12 && factored < 1e-12,
            "block " + fmt("%.2e", block) + ", factored " + fmt("%.2e", factored)};
}

Outcome circuit_oracle() {
    std::mt19937_64 g(20260101);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    double worst_overlap = 1.0;
    double worst_dist = 0.0;
    for (std::size_t n = 2; n <= 4; ++n) {
        for (int draw = 0; draw < 25; ++draw) {
            WalkConfig cfg = hadamard_walk(n, 0);
            cfg.theta = kPi * u01(g);
            cfg.phi = 2 * kPi * u01(g);
            for (std::size_t t = 0; t <= 30; ++t) {
                cfg.steps = t;
                cfg.scheme = Scheme::Present;
                const StateVector present = simulate(cfg);
                const auto ref = oracle::evolve(cfg);
                worst_overlap = std::min(
                    worst_overlap,
                    overlap(present, StateVector::from_amplitudes(ref.flatten())));
                const ProbDist p = position_distribution(present);
                for (Scheme s : {Scheme::QftScheme, Scheme::IdLinearDepth,
                                 Scheme::IdAncilla}) {
                    cfg.scheme = s;
                    const ProbDist q = position_distribution(simulate(cfg));
                    for (std::size_t j = 0; j < p.size(); ++j) {
                        worst_dist = std::max(worst_dist, std::abs(p[j] - q[j]));
                    }
                }
            }
        }
    }
    return {worst_overlap >= 1 - 1e-10 && worst_dist <= 1e-10,
            "min overlap 1-" + fmt("%.1e", 1 - worst_overlap) +
                ", max cross-scheme deviation " + fmt("%.1e", worst_dist)};
}

Outcome table_one() {
    std::size_t checked = 0;
    std::size_t bad = 0;
    for (std::int64_t n = 2; n <= 8; ++n) {
        for (std::int64_t t = 1; t <= 20; ++t) {
            WalkConfig cfg = hadamard_walk(static_cast<std::size_t>(n),
                                           static_cast<std::size_t>(t));
            cfg.localized_init = false;
            const MetricsReport present = gate_counts(build_walk_evolution(cfg));
            bad += !(present == MetricsReport{t * (n + 1) + 2 * n,
                                              t * (n - 1) + n * (n - 1),
                                              t * n + 2 * (2 * n - 1), 0});
            cfg.scheme = Scheme::QftScheme;
            const MetricsReport qft = gate_counts(build_walk_evolution(cfg));
            bad += !(qft == MetricsReport{t * (3 * n + 1), t * n * (n + 1),
                                          6 * t * n, 0});
            checked += 2;
            if (n >= 3) {
                const MetricsReport lin = id_cost_model(
                    static_cast<std::size_t>(n), static_cast<std::size_t>(t),
                    IdVariant::LinearDepth);
                const std::int64_t cubic = 2 * n * n * n - 6 * n * n + 13 * n - 3;
                bad += !(cubic % 3 == 0 &&
                         lin == MetricsReport{2 * t, t * cubic / 3,
                                              t * (4 * n * n - 14 * n + 19), 0});
                ++checked;
            }
            if (n >= 4) {
                const MetricsReport anc = id_cost_model(
                    static_cast<std::size_t>(n), static_cast<std::size_t>(t),
                    IdVariant::Ancilla);
                bad += !(anc == MetricsReport{2 * t, t * (10 * n * n - 48 * n + 66),
                                              t * (8 * n * n - 38 * n + 55),
                                              n - 3});
                ++checked;
            }
        }
    }
    return {bad == 0, std::to_string(checked - bad) + "/" +
                          std::to_string(checked) + " (scheme, n, t) rows exact"};
}

Outcome hadamard_layer() {
    double worst = 0.0;
    for (std::size_t n = 1; n <= 6; ++n) {
        Circuit layer(n);
        for (Qubit q = 0; q < n; ++q) {
            layer.add(Gate::h(q));
        }
        const StateVector h = run_circuit(StateVector(n), layer);
        for (bool swaps : {false, true}) {
            const StateVector f = run_circuit(StateVector(n), qft(n, swaps));
            for (std::size_t i = 0; i < f.dim(); ++i) {
                worst = std::max(worst, std::abs(f[i] - h[i]));
            }
        }
    }
    return {worst < 1e-12, "max amplitude deviation " + fmt("%.2e", worst)};
}

Outcome periodicity() {
    double worst4 = 1.0;
    for (std::size_t t = 0; t <= 20; ++t) {
        worst4 = std::min(worst4, overlap(simulate(hadamard_walk(2, t)),
                                          simulate(hadamard_walk(2, t + 8))));
    }
    const double o8 =
        overlap(simulate(hadamard_walk(3, 0)), simulate(hadamard_walk(3, 24)));
    const StateVector psi4 =
        two_term_state(2, 2, std::cos(kPi / 12), 4 + 2, Complex{0, std::sin(kPi / 12)});
    const double transfer = overlap(simulate(hadamard_walk(2, 4)), psi4);
    // Global phase picked up over one period.
    const auto phase = [](const StateVector &a, const StateVector &b) {
        Complex ip = 0.0;
        for (std::size_t i = 0; i < a.dim(); ++i) {
            ip += std::conj(a[i]) * b[i];
        }
        return std::arg(ip) / kPi;
    };
    const double ph4 =
        phase(simulate(hadamard_walk(2, 0)), simulate(hadamard_walk(2, 8)));
    const double ph8 =
        phase(simulate(hadamard_walk(3, 0)), simulate(hadamard_walk(3, 24)));
    return {1 - worst4 < 1e-10 && 1 - o8 < 1e-10 && transfer >= 1 - 1e-10,
            "4-cycle 1-" + fmt("%.1e", 1 - worst4) + ", 8-cycle 1-" +
                fmt("%.1e", 1 - o8) + ", transfer 1-" + fmt("%.1e", 1 - transfer) +
                ", period phases " + fmt("%.4f", ph4) + "pi " + fmt("%.4f", ph8) +
                "pi"};
}

Outcome entanglement() {
    double worst = 0.0;
    for (std::size_t t : {1u, 5u, 9u, 13u}) {
        const auto e = entropies(purities(simulate(hadamard_walk(2, t)), 2));
        worst = std::max(worst, std::abs(e.s2_coin - 1.0));
    }
    for (std::size_t t : {0u, 4u, 8u, 12u}) {
        const auto e = entropies(purities(simulate(hadamard_walk(2, t)), 2));
        worst = std::max(worst, std::abs(e.s2_coin));
    }
    const double r = 1 / std::sqrt(2.0);
    const StateVector psi1 = two_term_state(2, 3, std::polar(r, kPi / 12), 4 + 1,
                                            std::polar(r, -kPi / 12));
    const StateVector psi5 = two_term_state(2, 1, std::polar(r, kPi / 12), 4 + 3,
                                            std::polar(r, -kPi / 12));
    const double o1 = overlap(simulate(hadamard_walk(2, 1)), psi1);
    const double o5 = overlap(simulate(hadamard_walk(2, 5)), psi5);
    return {worst < 1e-9 && o1 >= 1 - 1e-10 && o5 >= 1 - 1e-10,
            "entropy deviation " + fmt("%.1e", worst) + ", psi1 1-" +
                fmt("%.1e", 1 - o1) + ", psi5 1-" + fmt("%.1e", 1 - o5)};
}

Outcome hellinger_checks() {
    const ProbDist p({0.2, 0.3, 0.5});
    const bool same = hellinger(p, p).fidelity == 1.0;
    const double disjoint =
        hellinger(ProbDist({1.0, 0.0}), ProbDist({0.0, 1.0})).fidelity;
    const double half =
        hellinger(ProbDist({1.0, 0.0}), ProbDist({0.5, 0.5})).fidelity;
    std::mt19937_64 g(7);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::size_t bad = 0;
    for (int k = 0; k < 10000; ++k) {
        const std::size_t n = 1 + g() % 16;
        auto draw = [&] {
            std::vector<double> v(n);
            double s = 0.0;
            for (auto &x : v) {
                x = g() % 4 == 0 ? 0.0 : u01(g);
                s += x;
            }
            if (s == 0.0) {
                v[0] = s = 1.0;
            }
            for (auto &x : v) {
                x /= s;
            }
            return ProbDist(std::move(v));
        };
        const ProbDist a = draw();
        const ProbDist b = draw();
        const auto ab = hellinger(a, b);
        const auto ba = hellinger(b, a);
        bad += !(ab.distance == ba.distance && ab.distance >= 0.0 &&
                 ab.distance <= 1.0 && ab.fidelity >= 0.0 && ab.fidelity <= 1.0);
    }
    return {same && std::abs(disjoint) < 1e-15 && std::abs(half - 0.5) < 1e-15 &&
                bad == 0,
            "disjoint " + fmt("%.1e", disjoint) + ", point-vs-uniform " +
                fmt("%.17g", half) + ", property failures " + std::to_string(bad) +
                "/10000"};
}

Outcome randomized_estimator() {
    const double r = 1 / std::sqrt(2.0);
    const StateVector psi1 = two_term_state(2, 3, std::polar(r, kPi / 12), 4 + 1,
                                            std::polar(r, -kPi / 12));
    const auto runner = state_runner(psi1, part_qubits(Part::Coin, 2));
    double worst = 0.0;
    std::ostringstream est;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const double e = randomized_purity(runner, 1, 300, 100000, seed).purity;
        worst = std::max(worst, std::abs(e - 0.5));
        est << (seed > 1 ? " " : "") << fmt("%.6f", e);
    }
    return {worst < 0.05, "max |estimate - 0.5| " + fmt("%.2e", worst) +
                              " over 10 seeds [" + est.str() + "]"};
}

Outcome noise_shape() {
    const NoiseModel model{0.0, 0.01, 0.0};
    const std::size_t seeds = 3;
    std::vector<double> present(20, 0.0);
    std::vector<double> qft(20, 0.0);
    for (std::size_t t = 0; t < 20; ++t) {
        const ProbDist ideal(
            oracle::position_probabilities(oracle::evolve(hadamard_walk(2, t))));
        for (std::uint64_t s = 0; s < seeds; ++s) {
            for (Scheme scheme : {Scheme::Present, Scheme::QftScheme}) {
                const Histogram h = run_noisy(build_walk(hadamard_walk(2, t, scheme)),
                                              model, 100000, derive_seed(s, t));
                const double f =
                    hellinger(ideal, ProbDist::from_counts(marginal_low(h, 2)))
                        .fidelity;
                (scheme == Scheme::Present ? present : qft)[t] += f / seeds;
            }
        }
    }
    bool minima = true;
    for (std::size_t t : {4u, 8u, 12u, 16u}) {
        minima = minima && present[t] < present[t - 1] && present[t] < present[t + 1];
    }
    bool dominates = true;
    for (std::size_t t = 3; t < 20; ++t) {
        dominates = dominates && present[t] > qft[t];
    }
    std::ostringstream d;
    d << "minima at 4,8,12,16: " << (minima ? "yes" : "no")
      << ", present > qft for t>=3: " << (dominates ? "yes" : "no")
      << "; present F(t=4,8,12,16) = " << fmt("%.3f", present[4]) << " "
      << fmt("%.3f", present[8]) << " " << fmt("%.3f", present[12]) << " "
      << fmt("%.3f", present[16]) << ", qft F(19) = " << fmt("%.3f", qft[19]);
    return {minima && dominates, d.str()};
}

Outcome layout() {
    const CouplingMap cairo = CouplingMap::ibm_cairo();
    // Logical order: position qubits 0..n-1, then the coin.
    const std::vector<Qubit> place2{3, 8, 5};
    const std::vector<Qubit> place3{10, 13, 15, 12};
    std::size_t step_violations = 0;
    std::size_t coin_violations = 0;
    std::size_t position_only = 0;
    for (const auto &[n, place] : {std::pair{std::size_t{2}, place2},
                                   std::pair{std::size_t{3}, place3}}) {
        step_violations +=
            validate_layout(build_present_step(n, mat::hadamard()), cairo, place)
                .size();
        for (const auto &v :
             validate_layout(build_walk(hadamard_walk(n, 3)), cairo, place)) {
            const bool touches_coin =
                std::find(v.logical.begin(), v.logical.end(), n) != v.logical.end();
            (touches_coin ? coin_violations : position_only) += 1;
        }
    }
    return {step_violations == 0 && coin_violations == 0,
            "step circuits: " + std::to_string(step_violations) +
                " violations; full walks: " + std::to_string(coin_violations) +
                " coin-position, " + std::to_string(position_only) +
                " position-position (inverse transform, needs routing)"};
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"diagonalization identities", 1.0, diagonalization},
        {"Fourier-frame shift block form", 0.0, sigma_block},
        {"circuit/oracle equivalence", 60.0, circuit_oracle},
        {"closed-form metrics exactness", 0.0, table_one},
        {"Hadamard-layer opening", 0.0, hadamard_layer},
        {"periodicity and perfect transfer", 0.0, periodicity},
        {"entanglement recurrence", 0.0, entanglement},
        {"Hellinger fidelity", 0.0, hellinger_checks},
        {"randomized-measurement estimator", 120.0, randomized_estimator},
        {"noise qualitative shape", 0.0, noise_shape},
        {"coupling-map layout", 0.0, layout},
    };
    int failures = 0;
    for (const auto &c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        if (c.time_limit_s > 0.0 && secs >= c.time_limit_s) {
            o.pass = false;
            o.detail += "; over the " + fmt("%.0f", c.time_limit_s) + " s budget";
        }
        failures += !o.pass;
        std::printf("%s  %-34s %s (%.2f s)\n", o.pass ? "PASS" : "FAIL",
                    c.name.c_str(), o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures;
}
