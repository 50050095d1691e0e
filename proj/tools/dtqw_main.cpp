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
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "cli/config.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitConfig = 3;
constexpr int kExitRuntime = 4;

struct Common {
    std::string config;
    std::string out = ".";
    std::optional<std::uint64_t> seed;
    std::string format = "csv";
};

void add_common(CLI::App *sub, Common &c, bool config_required) {
    auto *opt = sub->add_option("--config", c.config, "Experiment config (JSON)");
    if (config_required) {
        opt->required();
    }
    sub->add_option("--out", c.out, "Output directory")->capture_default_str();
    sub->add_option("--seed", c.seed, "Override the config seed");
    sub->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
}

dtqw::cli::ExperimentConfig load(const Common &c) {
    auto cfg = dtqw::cli::load_config(c.config);
    if (c.seed) {
        cfg.seed = *c.seed;
    }
    return cfg;
}

dtqw::cli::Format format_of(const Common &c) {
    return c.format == "json" ? dtqw::cli::Format::Json : dtqw::cli::Format::Csv;
}

void emit(const dtqw::cli::Table &table, const Common &c,
          std::string_view command, std::uint64_t seed,
          const nlohmann::json &extra) {
    const auto meta = dtqw::cli::make_meta(table, command, seed, extra);
    for (const auto &p : dtqw::cli::write_table(table, meta, c.out, format_of(c))) {
        std::cout << p.string() << '\n';
    }
}

} // namespace

int main(int argc, char **argv) {
    using namespace dtqw::cli;

    CLI::App app{"Discrete-time quantum walk circuits on the 2^n-cycle"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    Common run_opts;
    auto *run = app.add_subcommand("run", "Simulate a walk, t = 0..steps");
    add_common(run, run_opts, true);

    Common metrics_opts;
    std::string n_range;
    std::string t_range;
    std::string metric_schemes = "present,qft";
    auto *metrics =
        app.add_subcommand("metrics", "Gate counts and depth per scheme");
    add_common(metrics, metrics_opts, false);
    metrics->add_option("--n", n_range, "Position qubits, a..b");
    metrics->add_option("--t", t_range, "Steps, a..b");
    metrics->add_option("--schemes", metric_schemes,
                        "all or a comma list of present,qft,id-linear,id-ancilla")
        ->capture_default_str();

    Common compare_opts;
    std::string compare_schemes = "present,qft";
    auto *compare = app.add_subcommand(
        "compare-schemes", "Noisy Hellinger fidelity of several schemes");
    add_common(compare, compare_opts, true);
    compare->add_option("--schemes", compare_schemes, "Comma list of schemes")
        ->capture_default_str();

    Common entropy_opts;
    auto *entropy =
        app.add_subcommand("entropy", "Renyi-2 entropies of coin and position");
    add_common(entropy, entropy_opts, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*run) {
            const auto cfg = load(run_opts);
            const auto extra = nlohmann::json{{"config", config_to_json(cfg)}};
            emit(run_table(cfg), run_opts, "run", cfg.seed, extra);
            if (cfg.wants("metrics")) {
                if (cfg.walk.n >= dtqw::min_cost_model_n(cfg.walk.scheme)) {
                    const auto table = metrics_table(
                        {cfg.walk.n, cfg.walk.n}, {0, cfg.walk.steps},
                        {cfg.walk.scheme});
                    emit(table, run_opts, "run", cfg.seed, extra);
                } else {
                    std::cerr << "note: no cost model for scheme "
                              << dtqw::to_string(cfg.walk.scheme) << " at n="
                              << cfg.walk.n << "; metrics.csv skipped\n";
                }
            }
        } else if (*metrics) {
            Range nr{2, 8};
            Range tr{1, 20};
            if (!metrics_opts.config.empty()) {
                if (!n_range.empty() || !t_range.empty()) {
                    throw UsageError(
                        "--config conflicts with --n/--t for metrics");
                }
                const auto cfg = load(metrics_opts);
                nr = {cfg.walk.n, cfg.walk.n};
                tr = {0, cfg.walk.steps};
            } else {
                if (!n_range.empty()) {
                    nr = parse_range(n_range);
                }
                if (!t_range.empty()) {
                    tr = parse_range(t_range);
                }
            }
            const auto table =
                metrics_table(nr, tr, parse_scheme_list(metric_schemes));
            const auto extra = nlohmann::json{
                {"n_range", {nr.lo, nr.hi}}, {"t_range", {tr.lo, tr.hi}}};
            emit(table, metrics_opts, "metrics", metrics_opts.seed.value_or(0),
                 extra);
        } else if (*compare) {
            const auto cfg = load(compare_opts);
            const auto schemes = parse_scheme_list(compare_schemes);
            emit(compare_table(cfg, schemes), compare_opts, "compare-schemes",
                 cfg.seed, nlohmann::json{{"config", config_to_json(cfg)}});
        } else if (*entropy) {
            const auto cfg = load(entropy_opts);
            emit(entropy_table(cfg), entropy_opts, "entropy", cfg.seed,
                 nlohmann::json{{"config", config_to_json(cfg)}});
        }
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitOk;
}
