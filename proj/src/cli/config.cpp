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
#include "cli/config.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cli/angle.hpp"

namespace dtqw::cli {

namespace {

using nlohmann::json;

std::size_t line_of_offset(const std::string &text, std::size_t offset) {
    offset = std::min(offset, text.size());
    return 1 + static_cast<std::size_t>(
                   std::count(text.begin(),
                              text.begin() + static_cast<std::ptrdiff_t>(offset),
                              '\n'));
}

/// Reads values out of the parsed document and reports failures at the line
/// where the offending key first appears.
class Reader {
  public:
    explicit Reader(const std::string &text) : text_(text) {}

    [[noreturn]] void fail(std::initializer_list<std::string> path,
                           const std::string &msg) const {
        fail(std::vector<std::string>(path), msg);
    }

    [[noreturn]] void fail(const std::vector<std::string> &path,
                           const std::string &msg) const {
        std::string dotted;
        for (const auto &p : path) {
            dotted += dotted.empty() ? p : "." + p;
        }
        throw ConfigError(locate(path), dotted + ": " + msg);
    }

    std::size_t locate(const std::vector<std::string> &path) const {
        std::size_t pos = 0;
        for (const auto &key : path) {
            const auto hit = text_.find("\"" + key + "\"", pos);
            if (hit == std::string::npos) {
                return 0;
            }
            pos = hit;
        }
        return line_of_offset(text_, pos);
    }

    void only_keys(const json &obj, std::initializer_list<std::string> parent,
                   const std::set<std::string> &allowed) const {
        for (const auto &[key, value] : obj.items()) {
            if (!allowed.count(key)) {
                std::vector<std::string> p(parent);
                p.push_back(key);
                fail(p, "unknown key");
            }
        }
    }

    std::uint64_t uint(const json &v, std::initializer_list<std::string> path,
                       std::uint64_t min) const {
        if (!v.is_number_integer() ||
            (!v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
            fail(path, "expected a non-negative integer");
        }
        const auto x = v.get<std::uint64_t>();
        if (x < min) {
            fail(path, "must be >= " + std::to_string(min));
        }
        return x;
    }

    double probability(const json &v,
                       std::initializer_list<std::string> path) const {
        if (!v.is_number()) {
            fail(path, "expected a number");
        }
        const double p = v.get<double>();
        if (!(p >= 0.0 && p <= 1.0)) {
            fail(path, "must lie in [0, 1]");
        }
        return p;
    }

    double angle(const json &v, std::initializer_list<std::string> path) const {
        if (v.is_number()) {
            return v.get<double>();
        }
        if (v.is_string()) {
            try {
                return parse_angle(v.get<std::string>());
            } catch (const std::invalid_argument &e) {
                fail(path, e.what());
            }
        }
        fail(path, "expected a number or a pi-fraction string");
    }

    Complex complex_entry(const json &v,
                          std::initializer_list<std::string> path) const {
        if (v.is_number()) {
            return {v.get<double>(), 0.0};
        }
        if (v.is_array() && v.size() == 2 && v[0].is_number() &&
            v[1].is_number()) {
            return {v[0].get<double>(), v[1].get<double>()};
        }
        fail(path, "matrix entries must be numbers or [re, im] pairs");
    }

  private:
    const std::string &text_;
};

WalkConfig read_walk(const json &w, const Reader &r) {
    if (!w.is_object()) {
        r.fail({"walk"}, "expected an object");
    }
    r.only_keys(w, {"walk"},
                {"n", "steps", "theta", "phi", "coin", "scheme",
                 "localized_init"});
    WalkConfig cfg;
    if (!w.contains("n")) {
        r.fail({"walk"}, "missing required key 'n'");
    }
    if (!w.contains("steps")) {
        r.fail({"walk"}, "missing required key 'steps'");
    }
    cfg.n = r.uint(w["n"], {"walk", "n"}, 1);
    if (cfg.n > 13) {
        r.fail({"walk", "n"}, "must be <= 13");
    }
    cfg.steps = r.uint(w["steps"], {"walk", "steps"}, 0);
    if (w.contains("theta")) {
        cfg.theta = r.angle(w["theta"], {"walk", "theta"});
        if (!(cfg.theta >= 0.0 && cfg.theta <= kPi + 1e-12)) {
            r.fail({"walk", "theta"}, "must lie in [0, pi]");
        }
    }
    if (w.contains("phi")) {
        cfg.phi = r.angle(w["phi"], {"walk", "phi"});
        if (!(cfg.phi >= 0.0 && cfg.phi < 2.0 * kPi)) {
            r.fail({"walk", "phi"}, "must lie in [0, 2 pi)");
        }
    }
    if (w.contains("coin")) {
        const json &c = w["coin"];
        if (c.is_string()) {
            if (c.get<std::string>() != "hadamard") {
                r.fail({"walk", "coin"}, "only \"hadamard\" is a named coin");
            }
        } else if (c.is_array() && c.size() == 2 && c[0].is_array() &&
                   c[1].is_array() && c[0].size() == 2 && c[1].size() == 2) {
            cfg.coin = {r.complex_entry(c[0][0], {"walk", "coin"}),
                        r.complex_entry(c[0][1], {"walk", "coin"}),
                        r.complex_entry(c[1][0], {"walk", "coin"}),
                        r.complex_entry(c[1][1], {"walk", "coin"})};
        } else {
            r.fail({"walk", "coin"}, "expected \"hadamard\" or a 2x2 array");
        }
    }
    if (w.contains("scheme")) {
        if (!w["scheme"].is_string()) {
            r.fail({"walk", "scheme"}, "expected a string");
        }
        try {
            cfg.scheme = parse_scheme(w["scheme"].get<std::string>());
        } catch (const std::invalid_argument &e) {
            r.fail({"walk", "scheme"}, e.what());
        }
    }
    if (w.contains("localized_init")) {
        if (!w["localized_init"].is_boolean()) {
            r.fail({"walk", "localized_init"}, "expected true or false");
        }
        cfg.localized_init = w["localized_init"].get<bool>();
    }
    if (!is_unitary(cfg.coin)) {
        r.fail({"walk", "coin"}, "matrix is not unitary");
    }
    return cfg;
}

} // namespace

ConfigError::ConfigError(std::size_t line, const std::string &msg)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + msg
                              : msg),
      line_(line) {}

bool ExperimentConfig::wants(const std::string &output) const {
    return std::find(outputs.begin(), outputs.end(), output) != outputs.end();
}

ExperimentConfig parse_config(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ConfigError(line_of_offset(text, e.byte ? e.byte - 1 : 0),
                          std::string("malformed JSON: ") + e.what());
    }
    const Reader r(text);
    if (!doc.is_object()) {
        throw ConfigError(1, "config must be a JSON object");
    }
    r.only_keys(doc, {},
                {"walk", "noise", "shots", "seed", "outputs", "entropy"});
    if (!doc.contains("walk")) {
        throw ConfigError(0, "missing required section 'walk'");
    }
    ExperimentConfig cfg;
    cfg.walk = read_walk(doc["walk"], r);

    if (doc.contains("noise")) {
        const json &nz = doc["noise"];
        if (!nz.is_object()) {
            r.fail({"noise"}, "expected an object");
        }
        r.only_keys(nz, {"noise"}, {"p1", "p2", "p_readout"});
        NoiseModel m;
        if (nz.contains("p1")) {
            m.p1 = r.probability(nz["p1"], {"noise", "p1"});
        }
        if (nz.contains("p2")) {
            m.p2 = r.probability(nz["p2"], {"noise", "p2"});
        }
        if (nz.contains("p_readout")) {
            m.p_readout = r.probability(nz["p_readout"], {"noise", "p_readout"});
        }
        cfg.noise = m;
    }
    if (doc.contains("shots")) {
        cfg.shots = r.uint(doc["shots"], {"shots"}, 1);
    }
    if (doc.contains("seed")) {
        cfg.seed = r.uint(doc["seed"], {"seed"}, 0);
    }
    if (doc.contains("outputs")) {
        const json &o = doc["outputs"];
        if (!o.is_array()) {
            r.fail({"outputs"}, "expected an array");
        }
        static const std::set<std::string> known{"distribution", "fidelity",
                                                 "entropy", "metrics"};
        cfg.outputs.clear();
        for (const auto &item : o) {
            if (!item.is_string() || !known.count(item.get<std::string>())) {
                r.fail({"outputs"}, "entries must be one of distribution, "
                                    "fidelity, entropy, metrics");
            }
            cfg.outputs.push_back(item.get<std::string>());
        }
    }
    if (doc.contains("entropy")) {
        const json &e = doc["entropy"];
        if (!e.is_object()) {
            r.fail({"entropy"}, "expected an object");
        }
        r.only_keys(e, {"entropy"},
                    {"mode", "n_unitaries", "shots", "trajectories"});
        if (e.contains("mode")) {
            const json &m = e["mode"];
            if (m == "exact") {
                cfg.entropy.mode = EntropyMode::Exact;
            } else if (m == "randomized") {
                cfg.entropy.mode = EntropyMode::Randomized;
            } else {
                r.fail({"entropy", "mode"},
                       "expected \"exact\" or \"randomized\"");
            }
        }
        if (e.contains("n_unitaries")) {
            cfg.entropy.n_unitaries =
                r.uint(e["n_unitaries"], {"entropy", "n_unitaries"}, 2);
        }
        if (e.contains("shots")) {
            cfg.entropy.shots = r.uint(e["shots"], {"entropy", "shots"}, 2);
        }
        if (e.contains("trajectories")) {
            cfg.entropy.trajectories =
                r.uint(e["trajectories"], {"entropy", "trajectories"}, 1);
        }
    }
    if (cfg.noise && cfg.walk.n + 1 > 10 && cfg.wants("entropy")) {
        r.fail({"walk", "n"}, "noisy entropies support n <= 9");
    }
    return cfg;
}

ExperimentConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError(0, "cannot read config file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

} // namespace dtqw::cli
