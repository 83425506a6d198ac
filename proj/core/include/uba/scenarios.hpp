// Copyright 2026 The UBA Beam Alignment Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UBA_SCENARIOS_HPP
#define UBA_SCENARIOS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace uba::scenarios {

/// LOS-like: success probabilities either very high or very low.
std::vector<double> directional();
/// NLOS-like: flatter success probabilities.
std::vector<double> quasi_directional();
/// Eight receive beams with a weak optimal beam, for accuracy/delay runs.
std::vector<double> accuracy8();
/// directional() plus eight tail arms, theta linear from 0.03 to 0.01.
std::vector<double> directional16();
/// theta_k = 0.8 exp(-(k - 1) / 4), k = 1..128, until it falls to 0.02;
/// the remaining arms decrease linearly from 0.02 to 0.01.
std::vector<double> accuracy128();

/// Pads `theta` with `extra` arms linearly decreasing from `first` to
/// `last` (inclusive).
std::vector<double> pad_tail(std::vector<double> theta, std::size_t extra,
                             double first, double last);

/// Looks up a built-in theta vector by name ("directional",
/// "quasi_directional", "accuracy8", "directional16", "accuracy128").
std::optional<std::vector<double>> by_name(std::string_view name);

std::vector<std::string> names();

}  // namespace uba::scenarios

#endif  // UBA_SCENARIOS_HPP
