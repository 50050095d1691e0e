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
#include "dtqw/circuit_json.hpp"

#include <stdexcept>

namespace dtqw {

using nlohmann::json;

json to_json(const Circuit &circuit) {
    json gates = json::array();
    for (const Gate &g : circuit.gates()) {
        json jg;
        jg["kind"] = to_string(g.kind());
        jg["qubits"] = g.qubits();
        json params = json::array();
        switch (g.kind()) {
        case GateKind::Rz:
        case GateKind::Phase:
        case GateKind::ControlledPhase:
            params.push_back(g.angle());
            break;
        case GateKind::Unitary1q:
            for (const Complex &z : g.target_matrix()) {
                params.push_back(z.real());
                params.push_back(z.imag());
            }
            break;
        default:
            break;
        }
        jg["params"] = std::move(params);
        if (g.kind() == GateKind::MultiControlledX) {
            json pol = json::array();
            for (const auto &c : g.controls()) {
                pol.push_back(c.polarity ? 1 : 0);
            }
            jg["polarity"] = std::move(pol);
        }
        gates.push_back(std::move(jg));
    }
    json doc;
    doc["n_qubits"] = circuit.n_qubits();
    doc["label"] = circuit.label();
    doc["gates"] = std::move(gates);
    return doc;
}

namespace {

[[noreturn]] void fail(std::size_t index, const std::string &msg) {
    throw std::invalid_argument("gates[" + std::to_string(index) +
                                "]: " + msg);
}

Gate gate_from_json(const json &jg, std::size_t index) {
    if (!jg.is_object() || !jg.contains("kind") || !jg.contains("qubits")) {
        fail(index, "expected an object with \"kind\" and \"qubits\"");
    }
    const auto kind = jg.at("kind").get<std::string>();
    const auto qs = jg.at("qubits").get<std::vector<Qubit>>();
    const auto params = jg.value("params", std::vector<double>{});

    const auto need = [&](std::size_t nq, std::size_t np) {
        if (qs.size() != nq) {
            fail(index, kind + " takes " + std::to_string(nq) + " qubit(s)");
        }
        if (params.size() != np) {
            fail(index,
                 kind + " takes " + std::to_string(np) + " parameter(s)");
        }
    };

    if (kind == "x") {
        need(1, 0);
        return Gate::x(qs[0]);
    }
    if (kind == "h") {
        need(1, 0);
        return Gate::h(qs[0]);
    }
    if (kind == "sx") {
        need(1, 0);
        return Gate::sqrt_x(qs[0]);
    }
    if (kind == "rz") {
        need(1, 1);
        return Gate::rz(qs[0], params[0]);
    }
    if (kind == "p") {
        need(1, 1);
        return Gate::phase(qs[0], params[0]);
    }
    if (kind == "u") {
        need(1, 8);
        Mat2 m;
        for (std::size_t i = 0; i < 4; ++i) {
            m[i] = Complex{params[2 * i], params[2 * i + 1]};
        }
        return Gate::unitary(qs[0], m);
    }
    if (kind == "cx") {
        need(2, 0);
        return Gate::cx(qs[0], qs[1]);
    }
    if (kind == "cp") {
        need(2, 1);
        return Gate::cphase(qs[0], qs[1], params[0]);
    }
    if (kind == "mcx") {
        if (qs.empty()) {
            fail(index, "mcx needs a target");
        }
        const auto pol =
            jg.value("polarity", std::vector<int>(qs.size() - 1, 1));
        if (pol.size() != qs.size() - 1) {
            fail(index, "mcx polarity needs one entry per control");
        }
        std::vector<Control> cs;
        for (std::size_t i = 0; i + 1 < qs.size(); ++i) {
            cs.push_back({qs[i], pol[i] != 0});
        }
        return Gate::mcx(std::move(cs), qs.back());
    }
    if (kind == "barrier") {
        return Gate::barrier(qs);
    }
    fail(index, "unknown gate kind \"" + kind + "\"");
}

} // namespace

Circuit circuit_from_json(const json &doc) {
    if (!doc.is_object() || !doc.contains("n_qubits") ||
        !doc.contains("gates")) {
        throw std::invalid_argument(
            "circuit document needs \"n_qubits\" and \"gates\"");
    }
    try {
        Circuit c(doc.at("n_qubits").get<std::size_t>(),
                  doc.value("label", std::string{}));
        const auto &gates = doc.at("gates");
        for (std::size_t i = 0; i < gates.size(); ++i) {
            c.add(gate_from_json(gates[i], i));
        }
        return c;
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("circuit document: ") +
                                    e.what());
    } catch (const std::out_of_range &e) {
        throw std::invalid_argument(e.what());
    }
}

} // namespace dtqw
