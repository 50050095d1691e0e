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
#include "dtqw/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dtqw/walks.hpp"

namespace dtqw {

HellingerResult hellinger(const ProbDist &p, const ProbDist &q) {
    if (p.size() != q.size()) {
        throw std::invalid_argument("hellinger: lengths differ (" +
                                    std::to_string(p.size()) + " vs " +
                                    std::to_string(q.size()) + ")");
    }
    double sum = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        const double d = std::sqrt(p[k]) - std::sqrt(q[k]);
        sum += d * d;
    }
    const double h2 = std::clamp(sum / 2.0, 0.0, 1.0);
    const double f = 1.0 - h2;
    return {std::sqrt(h2), f * f};
}

double renyi2(double purity) {
    if (!(purity > 0.0) || purity > 1.0 + 1e-12) {
        throw std::invalid_argument("renyi2: purity must be in (0, 1], got " +
                                    std::to_string(purity));
    }
    return std::max(0.0, -std::log2(purity));
}

EntropyReport entropies(const PurityReport &purity) {
    return {renyi2(purity.coin), renyi2(purity.position),
            renyi2(purity.total)};
}

MetricsReport closed_form_metrics(Scheme scheme, std::size_t n,
                                  std::size_t t) {
    if (n < min_cost_model_n(scheme)) {
        throw std::invalid_argument(
            "closed_form_metrics: scheme " + std::string(to_string(scheme)) +
            " needs n >= " + std::to_string(min_cost_model_n(scheme)));
    }
    const auto ni = static_cast<std::int64_t>(n);
    const auto ti = static_cast<std::int64_t>(t);
    MetricsReport m;
    switch (scheme) {
    case Scheme::Present:
        m.n1 = ti * (ni + 1) + 2 * ni;
        m.n2 = ti * (ni - 1) + ni * (ni - 1);
        m.depth = ti * ni + 2 * (2 * ni - 1);
        break;
    case Scheme::QftScheme:
        m.n1 = ti * (3 * ni + 1);
        m.n2 = ti * ni * (ni + 1);
        m.depth = 6 * ti * ni;
        break;
    case Scheme::IdLinearDepth:
        return id_cost_model(n, t, IdVariant::LinearDepth);
    case Scheme::IdAncilla:
        return id_cost_model(n, t, IdVariant::Ancilla);
    }
    return m;
}

} // namespace dtqw
