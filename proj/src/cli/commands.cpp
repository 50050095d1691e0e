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
#include "cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "dtqw/metrics.hpp"
#include "dtqw/noise.hpp"
#include "dtqw/oracle.hpp"
#include "dtqw/randomized.hpp"
#include "dtqw/statevec.hpp"
#include "dtqw/walks.hpp"

namespace dtqw::cli {

namespace {

using nlohmann::json;

// Sub-streams of the user seed.
constexpr std::uint64_t kSampleStream = 0;
constexpr std::uint64_t kEnsembleStream = 1;
constexpr std::uint64_t kRandomizedStream = 2;

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream,
                          std::uint64_t t) {
    return derive_seed(derive_seed(seed, stream), t);
}

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::size_t parse_size(std::string_view s, std::string_view whole) {
    std::size_t v = 0;
    const auto *end = s.data() + s.size();
    const auto res = std::from_chars(s.data(), end, v);
    if (s.empty() || res.ec != std::errc{} || res.ptr != end) {
        throw UsageError("bad range '" + std::string(whole) +
                         "' (expected a..b or a single integer)");
    }
    return v;
}

WalkConfig at_step(const WalkConfig &w, std::size_t t) {
    WalkConfig c = w;
    c.steps = t;
    return c;
}

Cell metric_cell(std::int64_t v) { return Cell{v}; }

/// Purity estimate clipped into the domain of renyi2.
double clip_purity(double p) { return std::clamp(p, 1e-12, 1.0); }

struct PartPurities {
    PurityReport exact;
    PurityReport estimate;
};

/// Exact and (optionally randomized) purities of the walk state at step t.
PartPurities walk_purities(const ExperimentConfig &cfg, const Circuit &circuit,
                           const StateVector &ideal, std::size_t t) {
    const std::size_t n = cfg.walk.n;
    PartPurities out;
    const bool noisy = cfg.noise && !cfg.noise->is_noiseless();
    std::optional<EnsembleAccumulator> acc;
    if (noisy) {
        acc = noisy_ensemble(circuit, *cfg.noise, n, cfg.entropy.trajectories,
                             stream_seed(cfg.seed, kEnsembleStream, t));
        out.exact = acc->purities();
    } else {
        out.exact = purities(ideal, n);
    }
    if (cfg.entropy.mode == EntropyMode::Exact) {
        out.estimate = out.exact;
        return out;
    }
    const std::uint64_t base = stream_seed(cfg.seed, kRandomizedStream, t);
    auto estimate = [&](Part part, std::uint64_t part_index) {
        const auto qubits = part_qubits(part, n);
        MeasurementRunner runner;
        if (noisy) {
            const Eigen::MatrixXcd rho = part == Part::Coin ? acc->coin_density()
                                         : part == Part::Position
                                             ? acc->position_density()
                                             : acc->total_density();
            runner = density_runner(rho);
        } else {
            runner = state_runner(ideal, qubits);
        }
        return clip_purity(randomized_purity(runner, qubits.size(),
                                             cfg.entropy.n_unitaries,
                                             cfg.entropy.shots,
                                             derive_seed(base, part_index))
                               .purity);
    };
    out.estimate = {estimate(Part::Coin, 0), estimate(Part::Position, 1),
                    estimate(Part::Total, 2)};
    return out;
}

void push_entropies(std::vector<Cell> &row, const PurityReport &p) {
    const EntropyReport e = entropies(p);
    row.emplace_back(e.s2_coin);
    row.emplace_back(e.s2_position);
    row.emplace_back(e.s2_total);
}

std::string csv_cell(const Cell &c) {
    return std::visit(
        [](const auto &v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return "";
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
                return std::to_string(v);
            } else if constexpr (std::is_same_v<T, double>) {
                return format_double(v);
            } else {
                return v;
            }
        },
        c);
}

json json_cell(const Cell &c) {
    return std::visit(
        [](const auto &v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return nullptr;
            } else {
                return v;
            }
        },
        c);
}

} // namespace

Range parse_range(std::string_view text) {
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        const std::size_t v = parse_size(text, text);
        return {v, v};
    }
    return {parse_size(text.substr(0, dots), text),
            parse_size(text.substr(dots + 2), text)};
}

std::vector<Scheme> parse_scheme_list(std::string_view text) {
    if (text == "all") {
        return {Scheme::Present, Scheme::QftScheme, Scheme::IdLinearDepth,
                Scheme::IdAncilla};
    }
    std::vector<Scheme> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = std::min(text.find(',', start), text.size());
        const auto item = text.substr(start, comma - start);
        try {
            out.push_back(parse_scheme(item));
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
        start = comma + 1;
    }
    return out;
}

Table run_table(const ExperimentConfig &cfg) {
    const std::size_t n = cfg.walk.n;
    const std::size_t n_sites = std::size_t{1} << n;
    Table table{"run", "dtqw-run/1", {"t"}, {}};
    for (std::size_t j = 0; j < n_sites; ++j) {
        table.header.push_back("p_" + std::to_string(j));
    }
    for (std::size_t j = 0; j < n_sites; ++j) {
        table.header.push_back("phat_" + std::to_string(j));
    }
    for (const char *h :
         {"hellinger_fidelity", "s2_coin", "s2_position", "s2_total"}) {
        table.header.emplace_back(h);
    }

    for (std::size_t t = 0; t <= cfg.walk.steps; ++t) {
        const Circuit circuit = build_walk(at_step(cfg.walk, t));
        const StateVector ideal = run_circuit(StateVector(n + 1), circuit);
        const ProbDist p = position_distribution(ideal);
        std::vector<Cell> row{Cell{static_cast<std::int64_t>(t)}};
        for (double x : p.values()) {
            row.emplace_back(x);
        }
        std::optional<ProbDist> phat;
        if (cfg.wants("fidelity") || cfg.wants("distribution")) {
            if (cfg.noise) {
                const Histogram h =
                    run_noisy(circuit, *cfg.noise, cfg.shots,
                              stream_seed(cfg.seed, kSampleStream, t));
                phat = ProbDist::from_counts(marginal_low(h, n));
            } else {
                phat = p;
            }
        }
        for (std::size_t j = 0; j < n_sites; ++j) {
            row.push_back(phat ? Cell{(*phat)[j]} : Cell{});
        }
        row.push_back(phat && cfg.wants("fidelity")
                          ? Cell{hellinger(p, *phat).fidelity}
                          : Cell{});
        if (cfg.wants("entropy")) {
            push_entropies(row, walk_purities(cfg, circuit, ideal, t).estimate);
        } else {
            row.insert(row.end(), 3, Cell{});
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

Table metrics_table(Range n, Range t, const std::vector<Scheme> &schemes) {
    Table table{"metrics",
                "dtqw-metrics/1",
                {"scheme", "n", "t", "n1", "n2", "depth", "ancillae",
                 "counted_n1", "counted_n2", "counted_depth"},
                {}};
    for (Scheme s : schemes) {
        if (n.lo <= n.hi && n.lo < min_cost_model_n(s)) {
            throw UsageError("scheme " + std::string(to_string(s)) +
                             " needs n >= " +
                             std::to_string(min_cost_model_n(s)));
        }
    }
    if (n.hi > 13) {
        throw UsageError("n must be <= 13");
    }
    for (Scheme s : schemes) {
        for (std::size_t ni = n.lo; ni <= n.hi && n.lo <= n.hi; ++ni) {
            for (std::size_t ti = t.lo; ti <= t.hi && t.lo <= t.hi; ++ti) {
                const MetricsReport cf = closed_form_metrics(s, ni, ti);
                std::vector<Cell> row{std::string(to_string(s)),
                                      static_cast<std::int64_t>(ni),
                                      static_cast<std::int64_t>(ti),
                                      metric_cell(cf.n1),
                                      metric_cell(cf.n2),
                                      metric_cell(cf.depth),
                                      metric_cell(cf.ancillae)};
                if (s == Scheme::Present || s == Scheme::QftScheme) {
                    WalkConfig w;
                    w.n = ni;
                    w.steps = ti;
                    w.scheme = s;
                    w.localized_init = false;
                    const MetricsReport counted =
                        gate_counts(build_walk_evolution(w));
                    if (counted.n1 != cf.n1 || counted.n2 != cf.n2 ||
                        counted.depth != cf.depth) {
                        throw std::runtime_error(
                            "counted metrics disagree with the closed form "
                            "for " +
                            std::string(to_string(s)) + " n=" +
                            std::to_string(ni) + " t=" + std::to_string(ti));
                    }
                    row.push_back(metric_cell(counted.n1));
                    row.push_back(metric_cell(counted.n2));
                    row.push_back(metric_cell(counted.depth));
                } else {
                    row.insert(row.end(), 3, Cell{});
                }
                table.rows.push_back(std::move(row));
            }
        }
    }
    return table;
}

Table compare_table(const ExperimentConfig &cfg,
                    const std::vector<Scheme> &schemes) {
    Table table{"compare",
                "dtqw-compare/1",
                {"t", "scheme", "fidelity", "n1", "n2", "depth"},
                {}};
    const std::size_t n = cfg.walk.n;
    for (std::size_t t = 0; t <= cfg.walk.steps; ++t) {
        WalkConfig w = at_step(cfg.walk, t);
        const ProbDist ideal(
            oracle::position_probabilities(oracle::evolve(w)));
        for (Scheme s : schemes) {
            w.scheme = s;
            double fidelity = 1.0;
            if (cfg.noise) {
                const Histogram h =
                    run_noisy(build_walk(w), *cfg.noise, cfg.shots,
                              stream_seed(cfg.seed, kSampleStream, t));
                fidelity =
                    hellinger(ideal, ProbDist::from_counts(marginal_low(h, n)))
                        .fidelity;
            }
            std::vector<Cell> row{static_cast<std::int64_t>(t),
                                  std::string(to_string(s)), fidelity};
            if (n >= min_cost_model_n(s)) {
                const MetricsReport m = closed_form_metrics(s, n, t);
                row.push_back(metric_cell(m.n1));
                row.push_back(metric_cell(m.n2));
                row.push_back(metric_cell(m.depth));
            } else {
                row.insert(row.end(), 3, Cell{});
            }
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

Table entropy_table(const ExperimentConfig &cfg) {
    Table table{"entropy",
                "dtqw-entropy/1",
                {"t", "s2_coin", "s2_position", "s2_total", "s2_coin_exact",
                 "s2_position_exact", "s2_total_exact"},
                {}};
    const std::size_t n = cfg.walk.n;
    for (std::size_t t = 0; t <= cfg.walk.steps; ++t) {
        const Circuit circuit = build_walk(at_step(cfg.walk, t));
        const StateVector ideal = run_circuit(StateVector(n + 1), circuit);
        const PartPurities pp = walk_purities(cfg, circuit, ideal, t);
        std::vector<Cell> row{static_cast<std::int64_t>(t)};
        push_entropies(row, pp.estimate);
        push_entropies(row, pp.exact);
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::string to_csv(const Table &table) {
    std::ostringstream out;
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        out << (i ? "," : "") << table.header[i];
    }
    out << '\n';
    for (const auto &row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << csv_cell(row[i]);
        }
        out << '\n';
    }
    return out.str();
}

json to_json(const Table &table) {
    json rows = json::array();
    for (const auto &row : table.rows) {
        json obj = json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            obj[table.header[i]] = json_cell(row[i]);
        }
        rows.push_back(std::move(obj));
    }
    return json{{"schema", table.schema},
                {"columns", table.header},
                {"rows", std::move(rows)}};
}

json config_to_json(const ExperimentConfig &cfg) {
    json coin = json::array();
    for (int r = 0; r < 2; ++r) {
        json row = json::array();
        for (int c = 0; c < 2; ++c) {
            const Complex z = cfg.walk.coin[static_cast<std::size_t>(2 * r + c)];
            row.push_back(json::array({z.real(), z.imag()}));
        }
        coin.push_back(std::move(row));
    }
    json j{{"walk",
            {{"n", cfg.walk.n},
             {"steps", cfg.walk.steps},
             {"theta", cfg.walk.theta},
             {"phi", cfg.walk.phi},
             {"coin", std::move(coin)},
             {"scheme", std::string(to_string(cfg.walk.scheme))},
             {"localized_init", cfg.walk.localized_init}}},
           {"shots", cfg.shots},
           {"seed", cfg.seed},
           {"outputs", cfg.outputs},
           {"entropy",
            {{"mode", cfg.entropy.mode == EntropyMode::Exact ? "exact"
                                                              : "randomized"},
             {"n_unitaries", cfg.entropy.n_unitaries},
             {"shots", cfg.entropy.shots},
             {"trajectories", cfg.entropy.trajectories}}}};
    if (cfg.noise) {
        j["noise"] = {{"p1", cfg.noise->p1},
                      {"p2", cfg.noise->p2},
                      {"p_readout", cfg.noise->p_readout}};
    }
    return j;
}

json make_meta(const Table &table, std::string_view command,
               std::uint64_t seed, json extra) {
    json meta{{"tool", "dtqw"},
              {"version", std::string(kVersion)},
              {"schema", table.schema},
              {"command", std::string(command)},
              {"seed", seed}};
    if (!extra.is_null()) {
        meta.update(extra);
    }
    return meta;
}

std::vector<std::filesystem::path> write_table(const Table &table,
                                               const json &meta,
                                               const std::filesystem::path &dir,
                                               Format format) {
    std::filesystem::create_directories(dir);
    std::vector<std::filesystem::path> written;
    auto write = [&](const std::filesystem::path &p, const std::string &body) {
        std::ofstream f(p, std::ios::binary);
        if (!f) {
            throw std::runtime_error("cannot write " + p.string());
        }
        f << body;
        written.push_back(p);
    };
    if (format == Format::Csv) {
        write(dir / (table.name + ".csv"), to_csv(table));
        write(dir / (table.name + ".meta.json"), meta.dump(2) + "\n");
    } else {
        json doc = to_json(table);
        doc["meta"] = meta;
        write(dir / (table.name + ".json"), doc.dump(2) + "\n");
    }
    return written;
}

} // namespace dtqw::cli
