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
#include <cmath>

#include "dtqw/circuit.hpp"

namespace dtqw {
namespace {

constexpr double kTiny = 1e-12;

struct Euler {
    double theta;
    double phi;
    double lambda;
};

// U = e^{i gamma} U3(theta, phi, lambda) with
// U3 = [[c, -e^{i lambda} s], [e^{i phi} s, e^{i(phi+lambda)} c]].
Euler u3_angles(const Mat2 &u) {
    const double c = std::abs(u[0]);
    const double s = std::abs(u[2]);
    Euler e{2.0 * std::atan2(s, c), 0.0, 0.0};
    if (s < kTiny) {
        e.lambda = std::arg(u[3]) - std::arg(u[0]);
    } else if (c < kTiny) {
        e.lambda = std::arg(-u[1]) - std::arg(u[2]);
    } else {
        const double gamma = std::arg(u[0]);
        e.phi = std::arg(u[2]) - gamma;
        e.lambda = std::arg(-u[1]) - gamma;
    }
    return e;
}

// U3(t, p, l) ~ Rz(p + pi) SX Rz(t + pi) SX Rz(l), rightmost first.
void emit_1q(Circuit &out, Qubit q, const Mat2 &u) {
    const Euler e = u3_angles(u);
    if (std::sin(e.theta / 2) < kTiny) {
        out.add(Gate::rz(q, e.phi + e.lambda));
        return;
    }
    out.add(Gate::rz(q, e.lambda));
    out.add(Gate::sqrt_x(q));
    out.add(Gate::rz(q, e.theta + kPi));
    out.add(Gate::sqrt_x(q));
    out.add(Gate::rz(q, e.phi + kPi));
}

Mat2 mat_sqrt(const Mat2 &m) {
    const Complex tr = m[0] + m[3];
    Complex s = std::sqrt(m[0] * m[3] - m[1] * m[2]);
    if (std::abs(tr + 2.0 * s) < 1e-8) {
        s = -s;
    }
    const Complex t = std::sqrt(tr + 2.0 * s);
    return {(m[0] + s) / t, m[1] / t, m[2] / t, (m[3] + s) / t};
}

Mat2 ry(double a) {
    return {std::cos(a / 2), -std::sin(a / 2), std::sin(a / 2),
            std::cos(a / 2)};
}

// Single-control U via U = e^{i alpha} A X B X C with ABC = I.
void emit_controlled_1(Circuit &out, Qubit c, Qubit t, const Mat2 &u) {
    const Complex det = u[0] * u[3] - u[1] * u[2];
    const double alpha = std::arg(det) / 2;
    const Complex g = std::polar(1.0, -alpha);
    const Mat2 su{u[0] * g, u[1] * g, u[2] * g, u[3] * g};

    // su = Rz(beta) Ry(gamma) Rz(delta)
    const double gamma = 2.0 * std::atan2(std::abs(su[2]), std::abs(su[0]));
    double beta = 0.0;
    double delta = 0.0;
    if (std::abs(su[2]) < kTiny) {
        beta = 2.0 * std::arg(su[3]);
    } else if (std::abs(su[0]) < kTiny) {
        beta = 2.0 * std::arg(su[2]);
    } else {
        const double sum = 2.0 * std::arg(su[3]);  // beta + delta
        const double diff = 2.0 * std::arg(su[2]); // beta - delta
        beta = (sum + diff) / 2;
        delta = (sum - diff) / 2;
    }
    const Mat2 a = multiply(mat::rz(beta), ry(gamma / 2));
    const Mat2 b = multiply(ry(-gamma / 2), mat::rz(-(delta + beta) / 2));
    const Mat2 cc = mat::rz((delta - beta) / 2);

    emit_1q(out, t, cc);
    out.add(Gate::cx(c, t));
    emit_1q(out, t, b);
    out.add(Gate::cx(c, t));
    emit_1q(out, t, a);
    out.add(Gate::rz(c, alpha));
}

void emit_controlled(Circuit &out, std::vector<Qubit> controls, Qubit t,
                     const Mat2 &u) {
    if (controls.empty()) {
        emit_1q(out, t, u);
        return;
    }
    if (controls.size() == 1) {
        if (u == mat::pauli_x()) {
            out.add(Gate::cx(controls[0], t));
        } else {
            emit_controlled_1(out, controls[0], t, u);
        }
        return;
    }
    const Qubit last = controls.back();
    controls.pop_back();
    const Mat2 v = mat_sqrt(u);
    emit_controlled_1(out, last, t, v);
    emit_controlled(out, controls, last, mat::pauli_x());
    emit_controlled_1(out, last, t, adjoint(v));
    emit_controlled(out, controls, last, mat::pauli_x());
    emit_controlled(out, controls, t, v);
}

} // namespace

Circuit rewrite_to_native(const Circuit &circuit) {
    Circuit out(circuit.n_qubits(), circuit.label());
    for (const Gate &g : circuit.gates()) {
        const Qubit t = g.target();
        switch (g.kind()) {
        case GateKind::X:
        case GateKind::SqrtX:
        case GateKind::Rz:
        case GateKind::CX:
            out.add(g);
            break;
        case GateKind::H:
            out.add(Gate::rz(t, kPi / 2));
            out.add(Gate::sqrt_x(t));
            out.add(Gate::rz(t, kPi / 2));
            break;
        case GateKind::Phase:
            out.add(Gate::rz(t, g.angle()));
            break;
        case GateKind::Unitary1q:
            emit_1q(out, t, g.target_matrix());
            break;
        case GateKind::ControlledPhase: {
            const Qubit a = g.controls()[0].qubit;
            const double phi = g.angle();
            out.add(Gate::rz(a, phi / 2));
            out.add(Gate::cx(a, t));
            out.add(Gate::rz(t, -phi / 2));
            out.add(Gate::cx(a, t));
            out.add(Gate::rz(t, phi / 2));
            break;
        }
        case GateKind::MultiControlledX: {
            std::vector<Qubit> cs;
            for (const auto &c : g.controls()) {
                if (!c.polarity) {
                    out.add(Gate::x(c.qubit));
                }
                cs.push_back(c.qubit);
            }
            emit_controlled(out, cs, t, mat::pauli_x());
            for (const auto &c : g.controls()) {
                if (!c.polarity) {
                    out.add(Gate::x(c.qubit));
                }
            }
            break;
        }
        case GateKind::Barrier:
            out.add(g);
            break;
        }
    }
    return out;
}

} // namespace dtqw
