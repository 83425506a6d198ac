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

#include "uba/scenarios.hpp"

#include <algorithm>
#include <cmath>

namespace uba::scenarios {

std::vector<double> directional() {
  return {0.99, 0.98, 0.96, 0.93, 0.9, 0.1, 0.06, 0.04};
}

std::vector<double> quasi_directional() {
  return {0.95, 0.9, 0.8, 0.65, 0.45, 0.25, 0.15, 0.1};
}

std::vector<double> accuracy8() {
  return {0.8, 0.5, 0.35, 0.3, 0.25, 0.2, 0.15, 0.1};
}

std::vector<double> pad_tail(std::vector<double> theta, std::size_t extra,
                             double first, double last) {
  for (std::size_t i = 0; i < extra; ++i) {
    const double frac =
        extra == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(extra - 1);
    theta.push_back(first + (last - first) * frac);
  }
  return theta;
}

std::vector<double> directional16() {
  return pad_tail(directional(), 8, 0.03, 0.01);
}

std::vector<double> accuracy128() {
  constexpr std::size_t kArms = 128;
  constexpr double kFloor = 0.02;
  std::vector<double> theta;
  for (std::size_t k = 0; k < kArms; ++k) {
    const double v = 0.8 * std::exp(-static_cast<double>(k) / 4.0);
    if (v <= kFloor) break;
    theta.push_back(v);
  }
  // A flat floor would tie adjacent means; slope it from 0.02 to 0.01.
  const std::size_t extra = kArms - theta.size();
  return pad_tail(std::move(theta), extra, kFloor, 0.01);
}

std::optional<std::vector<double>> by_name(std::string_view name) {
  if (name == "directional") return directional();
  if (name == "quasi_directional") return quasi_directional();
  if (name == "accuracy8") return accuracy8();
  if (name == "directional16") return directional16();
  if (name == "accuracy128") return accuracy128();
  return std::nullopt;
}

std::vector<std::string> names() {
  return {"directional", "quasi_directional", "accuracy8", "directional16",
          "accuracy128"};
}

}  // namespace uba::scenarios
