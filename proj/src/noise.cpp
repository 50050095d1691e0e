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
#include "dtqw/noise.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <thread>
#include <vector>

namespace dtqw {

namespace {

constexpr std::uint64_t kBlock = 256;

bool valid_rate(double p) { return p >= 0.0 && p <= 1.0; }

std::size_t worker_count(std::uint64_t jobs) {
    const std::size_t hw = std::max(1U, std::thread::hardware_concurrency());
    return static_cast<std::size_t>(
        std::min<std::uint64_t>(hw, std::max<std::uint64_t>(1, jobs)));
}

/// A gate flattened for the trajectory loop.
struct Op {
    std::size_t mask = 0;
    std::size_t value = 0;
    Qubit target = 0;
    Mat2 u{};
    std::vector<Qubit> touched;
    double p = 0.0;
};

std::vector<Op> compile(const Circuit &circuit, const NoiseModel &model) {
    std::vector<Op> ops;
    for (const Gate &g : circuit.gates()) {
        if (g.is_directive()) {
            continue;
        }
        Op op;
        for (const auto &c : g.controls()) {
            op.mask |= std::size_t{1} << c.qubit;
            if (c.polarity) {
                op.value |= std::size_t{1} << c.qubit;
            }
        }
        op.target = g.target();
        op.u = g.target_matrix();
        op.touched = g.qubits();
        op.p = g.arity() == 1 ? model.p1 : model.p2;
        ops.push_back(std::move(op));
    }
    return ops;
}

StateVector run_ops(std::size_t n_qubits, const std::vector<Op> &ops,
                    Rng &rng) {
    static const std::array<Mat2, 3> paulis{mat::pauli_x(), mat::pauli_y(),
                                            mat::pauli_z()};
    StateVector s(n_qubits);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::uniform_int_distribution<int> which(0, 2);
    for (const Op &op : ops) {
        s.apply_masked(op.mask, op.value, op.target, op.u);
        if (op.p <= 0.0) {
            continue;
        }
        for (Qubit q : op.touched) {
            if (u01(rng) < op.p) {
                s.apply_masked(0, 0, q, paulis[which(rng)]);
            }
        }
    }
    return s;
}

} // namespace

void NoiseModel::validate() const {
    if (!valid_rate(p1) || !valid_rate(p2) || !valid_rate(p_readout)) {
        throw std::invalid_argument(
            "noise: p1, p2 and p_readout must lie in [0, 1]");
    }
}

StateVector noisy_trajectory(const Circuit &circuit, const NoiseModel &model,
                             Rng &rng) {
    model.validate();
    for (const Gate &g : circuit.gates()) {
        for (Qubit q : g.qubits()) {
            if (q >= circuit.n_qubits()) {
                throw std::out_of_range("noisy_trajectory: qubit out of range");
            }
        }
    }
    return run_ops(circuit.n_qubits(), compile(circuit, model), rng);
}

std::size_t apply_readout_error(std::size_t outcome, std::size_t n_bits,
                                double p, Rng &rng) {
    if (p <= 0.0) {
        return outcome;
    }
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (std::size_t b = 0; b < n_bits; ++b) {
        if (u01(rng) < p) {
            outcome ^= std::size_t{1} << b;
        }
    }
    return outcome;
}

Histogram run_noisy(const Circuit &circuit, const NoiseModel &model,
                    std::uint64_t shots, std::uint64_t seed) {
    model.validate();
    if (shots == 0) {
        throw std::invalid_argument("run_noisy: shots must be >= 1");
    }
    const std::size_t dim = std::size_t{1} << circuit.n_qubits();
    const std::vector<Op> ops = compile(circuit, model);
    const std::uint64_t blocks = (shots + kBlock - 1) / kBlock;
    const std::size_t workers = worker_count(blocks);
    std::vector<Histogram> partial(workers, Histogram(dim, 0));
    std::vector<std::exception_ptr> errors(workers);

    auto work = [&](std::size_t w) {
        try {
            for (std::uint64_t b = w; b < blocks; b += workers) {
                Rng rng(derive_seed(seed, b));
                const std::uint64_t end = std::min(shots, (b + 1) * kBlock);
                for (std::uint64_t shot = b * kBlock; shot < end; ++shot) {
                    const StateVector s = run_ops(circuit.n_qubits(), ops, rng);
                    const auto p = s.probabilities();
                    std::size_t k = sample_index(p, rng);
                    k = apply_readout_error(k, circuit.n_qubits(),
                                            model.p_readout, rng);
                    ++partial[w][k];
                }
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };

    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) {
        pool.emplace_back(work, w);
    }
    work(0);
    for (auto &t : pool) {
        t.join();
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    Histogram out(dim, 0);
    for (const auto &h : partial) {
        for (std::size_t i = 0; i < dim; ++i) {
            out[i] += h[i];
        }
    }
    return out;
}

EnsembleAccumulator noisy_ensemble(const Circuit &circuit,
                                   const NoiseModel &model,
                                   std::size_t n_position,
                                   std::size_t trajectories,
                                   std::uint64_t seed) {
    model.validate();
    if (trajectories == 0) {
        throw std::invalid_argument("noisy_ensemble: need >= 1 trajectory");
    }
    EnsembleAccumulator acc(circuit.n_qubits(), n_position);
    const std::vector<Op> ops = compile(circuit, model);
    Rng rng(derive_seed(seed, 0));
    for (std::size_t i = 0; i < trajectories; ++i) {
        if (i % kBlock == 0) {
            rng.seed(derive_seed(seed, i / kBlock));
        }
        acc.add(run_ops(circuit.n_qubits(), ops, rng));
    }
    return acc;
}

} // namespace dtqw
