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
#pragma once

#include <string_view>

namespace dtqw::cli {

/// Parses an angle in radians: a plain number ("0.5", "-1e-3") or a
/// rational multiple of pi ("pi", "-pi/4", "2pi/3", "3*pi/2", "pi/6").
/// Throws std::invalid_argument on anything else.
double parse_angle(std::string_view text);

} // namespace dtqw::cli
