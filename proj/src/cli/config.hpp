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
/**
 * @file
 * Experiment configuration for the command-line driver.
 *
 *     {
 *       "walk": {"n": 2, "steps": 19, "theta": "pi/6", "phi": "pi/2",
 *                "coin": "hadamard", "scheme": "present",
 *                "localized_init": true},
 *       "noise": {"p1": 0.0, "p2": 0.01, "p_readout": 0.0},
 *       "shots": 100000,
 *       "seed": 7,
 *       "outputs": ["distribution", "fidelity", "entropy", "metrics"],
 *       "entropy": {"mode": "exact", "n_unitaries": 300, "shots": 100000,
 *                   "trajectories": 2000}
 *     }
 *
 * Only "walk.n" and "walk.steps" are required. "coin" is "hadamard" or a
 * 2x2 array whose entries are numbers or [re, im] pairs. Angles accept
 * numbers or pi-fraction strings. Without a "noise" section the sampled
 * distribution equals the ideal one.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dtqw/noise.hpp"
#include "dtqw/walk_config.hpp"

namespace dtqw::cli {

/// Schema or parse error in a config document. `line` is 1-based, 0 when
/// no position is known.
class ConfigError : public std::runtime_error {
  public:
    ConfigError(std::size_t line, const std::string &msg);
    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

enum class EntropyMode {
    Exact,
    Randomized,
};

struct EntropySettings {
    EntropyMode mode = EntropyMode::Exact;
    std::size_t n_unitaries = 300;
    std::uint64_t shots = 100000;
    std::size_t trajectories = 2000;
};

struct ExperimentConfig {
    WalkConfig walk;
    std::optional<NoiseModel> noise;
    std::uint64_t shots = 100000;
    std::uint64_t seed = 0;
    std::vector<std::string> outputs{"distribution", "fidelity", "entropy",
                                     "metrics"};
    EntropySettings entropy;

    bool wants(const std::string &output) const;
};

/// Throws ConfigError.
ExperimentConfig parse_config(const std::string &text);

/// Throws ConfigError (line 0) if the file cannot be read.
ExperimentConfig load_config(const std::string &path);

} // namespace dtqw::cli
