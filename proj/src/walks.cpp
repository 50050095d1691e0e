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
#include "dtqw/walks.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace dtqw {

namespace {

/// R_k phase angle, 2 pi / 2^k.
double r_angle(std::size_t k) { return 2.0 * kPi / std::ldexp(1.0, static_cast<int>(k)); }

std::vector<Qubit> position_wires(std::size_t n) {
    std::vector<Qubit> w(n);
    std::iota(w.begin(), w.end(), Qubit{0});
    return w;
}

/// CX from the coin onto every position qubit, firing on coin = 0.
void coin_cx_chain(Circuit &c, std::size_t n, bool descending) {
    for (std::size_t i = 0; i < n; ++i) {
        const Qubit k = descending ? n - 1 - i : i;
        c.add(Gate::mcx({Control{n, false}}, k));
    }
}

void append_position(Circuit &c, const Circuit &sub, std::size_t n) {
    const auto wires = position_wires(n);
    c.append_mapped(sub, wires);
}

void append_present(Circuit &c, const WalkConfig &cfg) {
    const std::size_t n = cfg.n;
    if (cfg.localized_init) {
        for (Qubit k = 0; k < n; ++k) {
            c.add(Gate::h(k));
        }
    } else {
        append_position(c, qft(n, false), n);
    }
    c.barrier();
    const Circuit step = build_present_step(n, cfg.coin);
    for (std::size_t s = 0; s < cfg.steps; ++s) {
        c.append(step);
        c.barrier();
    }
    append_position(c, inverse(qft(n, false)), n);
}

void append_qft_scheme(Circuit &c, const WalkConfig &cfg) {
    const std::size_t n = cfg.n;
    const Circuit f = qft(n, false);
    const Circuit fdag = inverse(f);
    const Circuit omega = omega_layer(n, false, true);
    for (std::size_t s = 0; s < cfg.steps; ++s) {
        c.add(Gate::unitary(n, cfg.coin));
        c.barrier();
        coin_cx_chain(c, n, false);
        c.barrier();
        append_position(c, f, n);
        c.barrier();
        append_position(c, omega, n);
        c.barrier();
        append_position(c, fdag, n);
        c.barrier();
        coin_cx_chain(c, n, true);
        c.barrier();
    }
}

void append_id_scheme(Circuit &c, const WalkConfig &cfg) {
    const std::size_t n = cfg.n;
    const Circuit inc = increment_circuit(n);
    for (std::size_t s = 0; s < cfg.steps; ++s) {
        c.add(Gate::unitary(n, cfg.coin));
        c.barrier();
        coin_cx_chain(c, n, false);
        c.barrier();
        append_position(c, inc, n);
        c.barrier();
        coin_cx_chain(c, n, true);
        c.barrier();
    }
}

} // namespace

Circuit qft(std::size_t n, bool with_swaps) {
    if (n < 1) {
        throw std::invalid_argument("qft: n must be >= 1");
    }
    Circuit c(n, with_swaps ? "qft" : "qft-noswap");
    for (std::size_t i = 0; i < n; ++i) {
        const Qubit tq = n - 1 - i;
        c.add(Gate::h(tq));
        for (std::size_t j = 0; j < tq; ++j) {
            const Qubit ctl = tq - 1 - j;
            c.add(Gate::cphase(ctl, tq, r_angle(tq - ctl + 1)));
        }
    }
    if (with_swaps) {
        for (Qubit a = 0; a < n / 2; ++a) {
            const Qubit b = n - 1 - a;
            c.add(Gate::cx(a, b));
            c.add(Gate::cx(b, a));
            c.add(Gate::cx(a, b));
        }
    }
    return c;
}

Circuit omega_layer(std::size_t n, bool dagger, bool tilde) {
    if (n < 1) {
        throw std::invalid_argument("omega_layer: n must be >= 1");
    }
    Circuit c(n, "omega");
    const double sign = dagger ? -1.0 : 1.0;
    for (Qubit k = 0; k < n; ++k) {
        const std::size_t r = tilde ? k + 1 : n - k;
        c.add(Gate::phase(k, sign * r_angle(r)));
    }
    return c;
}

Circuit build_present_step(std::size_t n, const Mat2 &coin) {
    if (n < 1) {
        throw std::invalid_argument("build_present_step: n must be >= 1");
    }
    Circuit c(n + 1, "present-step");
    c.add(Gate::unitary(n, coin));
    for (Qubit k = 0; k < n; ++k) {
        c.add(Gate::phase(k, -r_angle(k + 1)));
    }
    for (std::size_t i = 1; i < n; ++i) {
        const Qubit k = n - i;
        c.add(Gate::cphase(n, k, r_angle(k)));
    }
    return c;
}

Circuit increment_circuit(std::size_t n) {
    if (n < 1) {
        throw std::invalid_argument("increment_circuit: n must be >= 1");
    }
    Circuit c(n, "increment");
    for (std::size_t i = 1; i < n; ++i) {
        const Qubit k = n - i;
        if (k == 1) {
            c.add(Gate::cx(0, 1));
            continue;
        }
        std::vector<Control> ctl;
        for (Qubit q = 0; q < k; ++q) {
            ctl.push_back(Control{q, true});
        }
        c.add(Gate::mcx(std::move(ctl), k));
    }
    c.add(Gate::x(0));
    return c;
}

Circuit prepare_coin_state(double theta, double phi) {
    const double cs = std::cos(theta / 2.0);
    const double sn = std::sin(theta / 2.0);
    const Complex e = std::polar(1.0, phi);
    const Mat2 u{Complex{cs, 0.0}, -std::conj(e) * sn, e * sn, Complex{cs, 0.0}};
    Circuit c(1, "coin-prep");
    c.add(Gate::unitary(0, u));
    return c;
}

Circuit build_walk_evolution(const WalkConfig &config) {
    config.validate();
    Circuit c(config.n + 1, std::string(to_string(config.scheme)) + "-walk");
    switch (config.scheme) {
    case Scheme::Present:
        append_present(c, config);
        break;
    case Scheme::QftScheme:
        append_qft_scheme(c, config);
        break;
    case Scheme::IdLinearDepth:
    case Scheme::IdAncilla:
        append_id_scheme(c, config);
        break;
    }
    return c;
}

Circuit build_walk(const WalkConfig &config) {
    config.validate();
    Circuit c(config.n + 1, std::string(to_string(config.scheme)) + "-walk");
    const Qubit coin[] = {config.n};
    c.append_mapped(prepare_coin_state(config.theta, config.phi), coin);
    c.barrier();
    c.append(build_walk_evolution(config));
    return c;
}

MetricsReport id_cost_model(std::size_t n, std::size_t t, IdVariant variant) {
    const auto ni = static_cast<std::int64_t>(n);
    const auto ti = static_cast<std::int64_t>(t);
    MetricsReport m;
    m.n1 = 2 * ti;
    if (variant == IdVariant::LinearDepth) {
        if (n < 3) {
            throw std::invalid_argument(
                "id_cost_model: linear-depth variant needs n >= 3");
        }
        m.n2 = ti * (2 * ni * ni * ni - 6 * ni * ni + 13 * ni - 3) / 3;
        m.depth = ti * (4 * ni * ni - 14 * ni + 19);
        m.ancillae = 0;
    } else {
        if (n < 4) {
            throw std::invalid_argument(
                "id_cost_model: ancilla variant needs n >= 4");
        }
        m.n2 = ti * (10 * ni * ni - 48 * ni + 66);
        m.depth = ti * (8 * ni * ni - 38 * ni + 55);
        m.ancillae = ni - 3;
    }
    return m;
}

} // namespace dtqw
