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
 * Table producers behind the CLI subcommands and their CSV/JSON writers.
 *
 * Every table carries a versioned schema name. Columns:
 *
 *   run       t, p_0..p_{N-1}, phat_0..phat_{N-1}, hellinger_fidelity,
 *             s2_coin, s2_position, s2_total
 *   metrics   scheme, n, t, n1, n2, depth, ancillae,
 *             counted_n1, counted_n2, counted_depth
 *   compare   t, scheme, fidelity, n1, n2, depth
 *   entropy   t, s2_coin, s2_position, s2_total,
 *             s2_coin_exact, s2_position_exact, s2_total_exact
 *
 * Empty cells (null in JSON) mark values that were not requested or are not
 * defined for the row.
 */
#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cli/config.hpp"
#include "dtqw/walk_config.hpp"

namespace dtqw::cli {

inline constexpr std::string_view kVersion = "1.0.0";

/// Bad flag combination or argument value (exit code 2).
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class Format {
    Csv,
    Json,
};

using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

struct Table {
    std::string name;
    std::string schema;
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;
};

/// Inclusive range "a..b" or a single value "a". lo > hi is empty.
struct Range {
    std::size_t lo = 0;
    std::size_t hi = 0;
};

/// Throws UsageError.
Range parse_range(std::string_view text);

/// "all" or a comma-separated list of scheme names. Throws UsageError.
std::vector<Scheme> parse_scheme_list(std::string_view text);

Table run_table(const ExperimentConfig &cfg);

/// Throws UsageError when a scheme's cost model is undefined for some n in
/// the range, std::runtime_error if a built circuit disagrees with its
/// closed form.
Table metrics_table(Range n, Range t, const std::vector<Scheme> &schemes);

Table compare_table(const ExperimentConfig &cfg,
                    const std::vector<Scheme> &schemes);

Table entropy_table(const ExperimentConfig &cfg);

std::string to_csv(const Table &table);
nlohmann::json to_json(const Table &table);

/// Echo of the effective configuration.
nlohmann::json config_to_json(const ExperimentConfig &cfg);

/// Writes <name>.csv and <name>.meta.json, or a single <name>.json holding
/// both. Returns the paths written.
std::vector<std::filesystem::path> write_table(const Table &table,
                                               const nlohmann::json &meta,
                                               const std::filesystem::path &dir,
                                               Format format);

/// Metadata block: tool, version, schema, command, seed and `extra`.
nlohmann::json make_meta(const Table &table, std::string_view command,
                         std::uint64_t seed, nlohmann::json extra);

} // namespace dtqw::cli
