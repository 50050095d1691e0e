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
#include "cli/angle.hpp"

#include <cmath>
#include <regex>
#include <stdexcept>
#include <string>

#include "dtqw/types.hpp"

namespace dtqw::cli {

double parse_angle(std::string_view text) {
    static const std::regex plain(
        R"(^\s*[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?\s*$)");
    static const std::regex rational(
        R"(^\s*([+-])?\s*(\d+)?\s*(\*)?\s*(pi)?\s*(/\s*(\d+))?\s*$)");
    const std::string s(text);
    if (std::regex_match(s, plain)) {
        return std::stod(s);
    }
    std::smatch m;
    if (!std::regex_match(s, m, rational)) {
        throw std::invalid_argument("not an angle: '" + s + "'");
    }
    const bool has_num = m[2].matched;
    const bool has_star = m[3].matched;
    const bool has_pi = m[4].matched;
    const bool has_den = m[5].matched;
    if ((!has_num && !has_pi) || (has_star && !(has_num && has_pi))) {
        throw std::invalid_argument("not an angle: '" + s + "'");
    }
    const double num = has_num ? std::stod(m[2].str()) : 1.0;
    const double den = has_den ? std::stod(m[6].str()) : 1.0;
    if (den == 0.0) {
        throw std::invalid_argument("zero denominator in angle '" + s + "'");
    }
    const double sign = m[1].matched && m[1].str() == "-" ? -1.0 : 1.0;
    return sign * (has_pi ? num * kPi / den : num / den);
}

} // namespace dtqw::cli
