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
#include <catch_amalgamated.hpp>

#include <bit>
#include <cmath>
#include <numeric>

#include "dtqw/randomized.hpp"
#include "dtqw/statevec.hpp"
#include "support.hpp"

using namespace dtqw;
using dtqw::testing::Gen;

namespace {

StateVector one_step_state() {
    const double r = 1.0 / std::sqrt(2.0);
    std::vector<Complex> a(8, 0.0);
    a[3] = std::polar(r, kPi / 12);
    a[5] = std::polar(r, -kPi / 12);
    return StateVector::from_amplitudes(std::move(a));
}

// Direct double sum over outcome pairs.
double brute_score(const std::vector<std::uint64_t> &counts) {
    const double m = std::accumulate(counts.begin(), counts.end(), 0.0);
    double total = 0.0;
    for (std::size_t s = 0; s < counts.size(); ++s) {
        for (std::size_t t = 0; t < counts.size(); ++t) {
            const double ns = static_cast<double>(counts[s]);
            const double nt = static_cast<double>(counts[t]);
            const double pair = s == t ? ns * (ns - 1) : ns * nt;
            const int d = std::popcount(s ^ t);
            total += std::pow(-2.0, -d) * pair / (m * (m - 1));
        }
    }
    return total;
}

} // namespace

TEST_CASE("part_qubits", "[randomized]") {
    CHECK(part_qubits(Part::Coin, 2) == std::vector<Qubit>{2});
    CHECK(part_qubits(Part::Position, 3) == std::vector<Qubit>{0, 1, 2});
    CHECK(part_qubits(Part::Total, 1) == std::vector<Qubit>{0, 1});
}

TEST_CASE("score equals the pairwise Hamming sum", "[randomized][property]") {
    Gen g(71);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t k = 1 + dtqw::testing::index_below(g, 4);
        std::vector<std::uint64_t> counts(std::size_t{1} << k);
        for (auto &c : counts) {
            c = dtqw::testing::index_below(g, 50);
        }
        counts[0] += 2;
        REQUIRE(randomized_score(counts, k) ==
                Catch::Approx(brute_score(counts)).margin(1e-12));
    }
    const std::vector<std::uint64_t> one{1, 0};
    CHECK_THROWS_AS(randomized_score(one, 1), std::invalid_argument);
    const std::vector<std::uint64_t> wrong{5, 5, 5};
    CHECK_THROWS_AS(randomized_score(wrong, 1), std::invalid_argument);
}

TEST_CASE("haar_unitary is unitary with Haar moments", "[randomized]") {
    Rng rng(72);
    double m1 = 0.0;
    double m2 = 0.0;
    Complex phase_mean = 0.0;
    const int samples = 200000;
    for (int i = 0; i < samples; ++i) {
        const Mat2 u = haar_unitary(rng);
        REQUIRE(is_unitary(u));
        const double a = std::norm(u[0]);
        m1 += a;
        m2 += a * a;
        phase_mean += u[0] / std::abs(u[0]);
    }
    // |U_00|^2 is uniform on [0, 1] under the Haar measure.
    CHECK(std::abs(m1 / samples - 0.5) < 0.005);
    CHECK(std::abs(m2 / samples - 1.0 / 3.0) < 0.005);
    CHECK(std::abs(phase_mean / double(samples)) < 0.01);
}

TEST_CASE("estimator examples", "[randomized]") {
    SECTION("pure single-qubit product part") {
        const auto s = run_circuit(StateVector(2), [] {
            Circuit c(2);
            c.add(Gate::h(0));
            c.add(Gate::rz(1, 0.4));
            return c;
        }());
        const auto e = randomized_purity(state_runner(s, {1}), 1, 300, 100000, 5);
        CHECK(std::abs(e.purity - 1.0) < 0.05);
    }
    SECTION("coin of the maximally entangled one-step state") {
        const auto e = randomized_purity(
            state_runner(one_step_state(), part_qubits(Part::Coin, 2)), 1, 300,
            100000, 6);
        CHECK(std::abs(e.purity - 0.5) < 0.05);
    }
    SECTION("maximally mixed qubit") {
        const Eigen::MatrixXcd rho = Eigen::MatrixXcd::Identity(2, 2) * 0.5;
        const auto e = randomized_purity(density_runner(rho), 1, 300, 100000, 7);
        CHECK(std::abs(e.purity - 0.5) < 0.05);
    }
}

TEST_CASE("estimator is deterministic per seed", "[randomized]") {
    const auto run = state_runner(one_step_state(), part_qubits(Part::Position, 2));
    const auto a = randomized_purity(run, 2, 20, 1000, 3);
    const auto b = randomized_purity(run, 2, 20, 1000, 3);
    const auto c = randomized_purity(run, 2, 20, 1000, 4);
    CHECK(a.purity == b.purity);
    CHECK(a.purity != c.purity);
}

TEST_CASE("estimator errors", "[randomized]") {
    const auto run = state_runner(StateVector(2), {0});
    CHECK_THROWS_AS(randomized_purity(run, 1, 1, 100, 0), std::invalid_argument);
    CHECK_THROWS_AS(randomized_purity(run, 1, 10, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(randomized_purity(run, 0, 10, 100, 0), std::invalid_argument);
    CHECK_THROWS_AS(state_runner(StateVector(2), {2}), std::invalid_argument);
    CHECK_THROWS_AS(density_runner(Eigen::MatrixXcd::Identity(3, 3)),
                    std::invalid_argument);
}

TEST_CASE("state and density runners agree in distribution", "[randomized]") {
    Gen g(73);
    const auto s = dtqw::testing::random_state(g, 3);
    const std::vector<Qubit> part{0, 2};
    const auto rho = reduced_density_matrix(s, part);
    const auto a = randomized_purity(state_runner(s, part), 2, 200, 20000, 8);
    const auto b = randomized_purity(density_runner(rho), 2, 200, 20000, 8);
    // Same unitaries and RNG stream: only the sampler input differs.
    CHECK(std::abs(a.purity - b.purity) < 4 * (a.std_error + b.std_error));
}

TEST_CASE("mean over seeds is within two standard errors of the exact purity",
          "[randomized][property]") {
    Gen g(74);
    struct Case {
        StateVector state;
        std::vector<Qubit> part;
    };
    const std::vector<Case> cases{
        {one_step_state(), part_qubits(Part::Coin, 2)},
        {one_step_state(), part_qubits(Part::Position, 2)},
        {dtqw::testing::random_state(g, 3), {0, 1}},
        {dtqw::testing::random_state(g, 3), {2}},
    };
    for (const auto &c : cases) {
        const double exact = purity(reduced_density_matrix(c.state, c.part));
        const auto run = state_runner(c.state, c.part);
        std::vector<double> est;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            est.push_back(
                randomized_purity(run, c.part.size(), 100, 10000, 2000 + seed)
                    .purity);
        }
        const double n = static_cast<double>(est.size());
        const double mean = std::accumulate(est.begin(), est.end(), 0.0) / n;
        double var = 0.0;
        for (double e : est) {
            var += (e - mean) * (e - mean);
        }
        const double se = std::sqrt(var / (n - 1) / n);
        CAPTURE(exact, mean, se);
        CHECK(std::abs(mean - exact) < 2 * se);
    }
}

TEST_CASE("estimator shows no bias over many seeds", "[randomized][property]") {
    Gen g(74);
    const auto a = dtqw::testing::random_state(g, 3);
    const auto b = dtqw::testing::random_state(g, 3);
    struct Case {
        StateVector state;
        std::vector<Qubit> part;
    };
    const std::vector<Case> cases{
        {one_step_state(), part_qubits(Part::Coin, 2)},
        {a, {0, 1}},
        {b, {2}},
    };
    for (const auto &c : cases) {
        const double exact = purity(reduced_density_matrix(c.state, c.part));
        const auto run = state_runner(c.state, c.part);
        const int seeds = 4000;
        double sum = 0.0;
        double sq = 0.0;
        for (int k = 0; k < seeds; ++k) {
            const double e =
                randomized_purity(run, c.part.size(), 100, 10000, 90000 + k)
                    .purity;
            sum += e;
            sq += e * e;
        }
        const double mean = sum / seeds;
        const double se = std::sqrt((sq - seeds * mean * mean) / (seeds - 1) / seeds);
        CAPTURE(exact, mean, se);
        CHECK(std::abs(mean - exact) < 3 * se);
    }
}
