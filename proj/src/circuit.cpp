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
#include "dtqw/circuit.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

namespace dtqw {

std::string_view to_string(GateKind kind) {
    switch (kind) {
    case GateKind::X:
        return "x";
    case GateKind::H:
        return "h";
    case GateKind::SqrtX:
        return "sx";
    case GateKind::Rz:
        return "rz";
    case GateKind::Phase:
        return "p";
    case GateKind::Unitary1q:
        return "u";
    case GateKind::CX:
        return "cx";
    case GateKind::ControlledPhase:
        return "cp";
    case GateKind::MultiControlledX:
        return "mcx";
    case GateKind::Barrier:
        return "barrier";
    }
    return "?";
}

Gate Gate::x(Qubit q) {
    Gate g;
    g.kind_ = GateKind::X;
    g.target_ = q;
    return g;
}

Gate Gate::h(Qubit q) {
    Gate g;
    g.kind_ = GateKind::H;
    g.target_ = q;
    return g;
}

Gate Gate::sqrt_x(Qubit q) {
    Gate g;
    g.kind_ = GateKind::SqrtX;
    g.target_ = q;
    return g;
}

Gate Gate::rz(Qubit q, double lambda) {
    Gate g;
    g.kind_ = GateKind::Rz;
    g.target_ = q;
    g.angle_ = lambda;
    return g;
}

Gate Gate::phase(Qubit q, double phi) {
    Gate g;
    g.kind_ = GateKind::Phase;
    g.target_ = q;
    g.angle_ = phi;
    return g;
}

Gate Gate::unitary(Qubit q, const Mat2 &u) {
    if (!is_unitary(u)) {
        throw std::invalid_argument("Gate::unitary: matrix is not unitary");
    }
    Gate g;
    g.kind_ = GateKind::Unitary1q;
    g.target_ = q;
    g.matrix_ = u;
    return g;
}

Gate Gate::cx(Qubit control, Qubit target) {
    if (control == target) {
        throw std::invalid_argument("Gate::cx: control equals target");
    }
    Gate g;
    g.kind_ = GateKind::CX;
    g.target_ = target;
    g.controls_ = {Control{control, true}};
    return g;
}

Gate Gate::cphase(Qubit a, Qubit b, double phi) {
    if (a == b) {
        throw std::invalid_argument("Gate::cphase: qubits must differ");
    }
    Gate g;
    g.kind_ = GateKind::ControlledPhase;
    g.target_ = b;
    g.controls_ = {Control{a, true}};
    g.angle_ = phi;
    return g;
}

Gate Gate::mcx(std::vector<Control> controls, Qubit target) {
    std::unordered_set<Qubit> seen{target};
    for (const auto &c : controls) {
        if (!seen.insert(c.qubit).second) {
            throw std::invalid_argument(
                "Gate::mcx: controls must be distinct from each other and "
                "from the target");
        }
    }
    Gate g;
    g.kind_ = GateKind::MultiControlledX;
    g.target_ = target;
    g.controls_ = std::move(controls);
    return g;
}

Gate Gate::barrier(std::vector<Qubit> qubits) {
    Gate g;
    g.kind_ = GateKind::Barrier;
    g.span_ = std::move(qubits);
    return g;
}

std::vector<Qubit> Gate::qubits() const {
    if (kind_ == GateKind::Barrier) {
        return span_;
    }
    std::vector<Qubit> out;
    out.reserve(controls_.size() + 1);
    for (const auto &c : controls_) {
        out.push_back(c.qubit);
    }
    out.push_back(target_);
    return out;
}

std::size_t Gate::arity() const {
    return kind_ == GateKind::Barrier ? span_.size() : controls_.size() + 1;
}

Mat2 Gate::target_matrix() const {
    switch (kind_) {
    case GateKind::X:
    case GateKind::CX:
    case GateKind::MultiControlledX:
        return mat::pauli_x();
    case GateKind::H:
        return mat::hadamard();
    case GateKind::SqrtX:
        return mat::sqrt_x();
    case GateKind::Rz:
        return mat::rz(angle_);
    case GateKind::Phase:
    case GateKind::ControlledPhase:
        return mat::phase(angle_);
    case GateKind::Unitary1q:
        return matrix_;
    case GateKind::Barrier:
        break;
    }
    return mat::identity();
}

Gate Gate::adjoint() const {
    Gate g = *this;
    switch (kind_) {
    case GateKind::SqrtX:
        g.kind_ = GateKind::Unitary1q;
        g.matrix_ = dtqw::adjoint(mat::sqrt_x());
        break;
    case GateKind::Rz:
    case GateKind::Phase:
    case GateKind::ControlledPhase:
        g.angle_ = -angle_;
        break;
    case GateKind::Unitary1q:
        g.matrix_ = dtqw::adjoint(matrix_);
        break;
    default:
        break;
    }
    return g;
}

Circuit::Circuit(std::size_t n_qubits, std::string label)
    : n_qubits_(n_qubits), label_(std::move(label)) {}

Circuit &Circuit::add(Gate gate) {
    for (Qubit q : gate.qubits()) {
        if (q >= n_qubits_) {
            throw std::out_of_range("Circuit::add: " +
                                    std::string(to_string(gate.kind())) +
                                    " touches qubit " + std::to_string(q) +
                                    " of a " + std::to_string(n_qubits_) +
                                    "-qubit circuit");
        }
    }
    gates_.push_back(std::move(gate));
    return *this;
}

Circuit &Circuit::append(const Circuit &other) {
    if (other.n_qubits_ != n_qubits_) {
        throw std::invalid_argument("Circuit::append: width mismatch");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    return *this;
}

namespace {

Gate relabel(const Gate &g, std::span<const Qubit> wires) {
    const auto w = [&](Qubit q) {
        if (q >= wires.size()) {
            throw std::out_of_range("append_mapped: no wire for qubit " +
                                    std::to_string(q));
        }
        return wires[q];
    };
    switch (g.kind()) {
    case GateKind::X:
        return Gate::x(w(g.target()));
    case GateKind::H:
        return Gate::h(w(g.target()));
    case GateKind::SqrtX:
        return Gate::sqrt_x(w(g.target()));
    case GateKind::Rz:
        return Gate::rz(w(g.target()), g.angle());
    case GateKind::Phase:
        return Gate::phase(w(g.target()), g.angle());
    case GateKind::Unitary1q:
        return Gate::unitary(w(g.target()), g.target_matrix());
    case GateKind::CX:
        return Gate::cx(w(g.controls()[0].qubit), w(g.target()));
    case GateKind::ControlledPhase:
        return Gate::cphase(w(g.controls()[0].qubit), w(g.target()),
                            g.angle());
    case GateKind::MultiControlledX: {
        std::vector<Control> cs;
        for (const auto &c : g.controls()) {
            cs.push_back({w(c.qubit), c.polarity});
        }
        return Gate::mcx(std::move(cs), w(g.target()));
    }
    case GateKind::Barrier: {
        std::vector<Qubit> qs;
        for (Qubit q : g.qubits()) {
            qs.push_back(w(q));
        }
        return Gate::barrier(std::move(qs));
    }
    }
    return g;
}

} // namespace

Circuit &Circuit::append_mapped(const Circuit &sub,
                                std::span<const Qubit> wires) {
    if (wires.size() != sub.n_qubits()) {
        throw std::invalid_argument("append_mapped: need one wire per qubit");
    }
    for (const auto &g : sub.gates()) {
        add(relabel(g, wires));
    }
    return *this;
}

Circuit &Circuit::barrier() {
    std::vector<Qubit> all(n_qubits_);
    for (Qubit q = 0; q < n_qubits_; ++q) {
        all[q] = q;
    }
    gates_.push_back(Gate::barrier(std::move(all)));
    return *this;
}

namespace {

UnloweredGateError unlowered(std::size_t index, const Gate &g) {
    return UnloweredGateError(
        index, "gate " + std::to_string(index) + " (" +
                   std::string(to_string(g.kind())) + " with " +
                   std::to_string(g.controls().size()) +
                   " controls) must be lowered before counting");
}

} // namespace

std::int64_t depth(const Circuit &circuit) {
    std::vector<std::int64_t> level(circuit.n_qubits(), 0);
    const auto &gates = circuit.gates();
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const Gate &g = gates[i];
        const auto qs = g.qubits();
        if (g.is_directive()) {
            std::int64_t top = 0;
            for (Qubit q : qs) {
                top = std::max(top, level[q]);
            }
            for (Qubit q : qs) {
                level[q] = top;
            }
            continue;
        }
        if (g.arity() > 2) {
            throw unlowered(i, g);
        }
        std::int64_t top = 0;
        for (Qubit q : qs) {
            top = std::max(top, level[q]);
        }
        for (Qubit q : qs) {
            level[q] = top + 1;
        }
    }
    return level.empty() ? 0 : *std::max_element(level.begin(), level.end());
}

MetricsReport gate_counts(const Circuit &circuit) {
    MetricsReport r;
    const auto &gates = circuit.gates();
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const Gate &g = gates[i];
        if (g.is_directive()) {
            continue;
        }
        switch (g.arity()) {
        case 1:
            ++r.n1;
            break;
        case 2:
            ++r.n2;
            break;
        default:
            throw unlowered(i, g);
        }
    }
    r.depth = depth(circuit);
    return r;
}

Circuit inverse(const Circuit &circuit) {
    Circuit out(circuit.n_qubits(), circuit.label().empty()
                                        ? std::string{}
                                        : circuit.label() + "^dagger");
    const auto &gates = circuit.gates();
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        out.add(it->adjoint());
    }
    return out;
}

CouplingMap::CouplingMap(std::size_t device_size,
                         std::span<const std::pair<Qubit, Qubit>> edges)
    : device_size_(device_size) {
    for (auto [a, b] : edges) {
        if (a >= device_size || b >= device_size || a == b) {
            throw std::invalid_argument("CouplingMap: bad edge (" +
                                        std::to_string(a) + ", " +
                                        std::to_string(b) + ")");
        }
        edges_.insert(std::minmax(a, b));
    }
}

bool CouplingMap::adjacent(Qubit a, Qubit b) const {
    return edges_.count(std::minmax(a, b)) != 0;
}

CouplingMap CouplingMap::ibm_cairo() {
    static constexpr std::array<std::pair<Qubit, Qubit>, 28> kEdges{{
        {0, 1},   {1, 2},   {1, 4},   {2, 3},   {3, 5},   {4, 7},   {5, 8},
        {6, 7},   {7, 10},  {8, 9},   {8, 11},  {10, 12}, {11, 14}, {12, 13},
        {12, 15}, {13, 14}, {14, 16}, {15, 18}, {16, 19}, {17, 18}, {18, 21},
        {19, 20}, {19, 22}, {21, 23}, {22, 25}, {23, 24}, {24, 25}, {25, 26},
    }};
    return CouplingMap(27, kEdges);
}

std::vector<LayoutViolation> validate_layout(const Circuit &circuit,
                                             const CouplingMap &map,
                                             std::span<const Qubit> placement) {
    if (placement.size() < circuit.n_qubits()) {
        throw std::invalid_argument("validate_layout: placement covers " +
                                    std::to_string(placement.size()) + " of " +
                                    std::to_string(circuit.n_qubits()) +
                                    " qubits");
    }
    std::unordered_set<Qubit> used;
    for (std::size_t i = 0; i < circuit.n_qubits(); ++i) {
        if (placement[i] >= map.device_size()) {
            throw std::invalid_argument(
                "validate_layout: logical qubit " + std::to_string(i) +
                " placed outside the device");
        }
        if (!used.insert(placement[i]).second) {
            throw std::invalid_argument(
                "validate_layout: placement is not injective");
        }
    }

    std::vector<LayoutViolation> out;
    const auto &gates = circuit.gates();
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const Gate &g = gates[i];
        if (g.is_directive() || g.arity() < 2) {
            continue;
        }
        LayoutViolation v{i, g.qubits(), {}, {}};
        for (Qubit q : v.logical) {
            v.physical.push_back(placement[q]);
        }
        if (g.arity() > 2) {
            v.reason = "gate spans " + std::to_string(g.arity()) + " qubits";
            out.push_back(std::move(v));
        } else if (!map.adjacent(v.physical[0], v.physical[1])) {
            v.reason = "physical qubits " + std::to_string(v.physical[0]) +
                       " and " + std::to_string(v.physical[1]) +
                       " are not adjacent";
            out.push_back(std::move(v));
        }
    }
    return out;
}

} // namespace dtqw
