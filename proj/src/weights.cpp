/*
 * Copyright (c) 2026, The hetsample Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "hetsample/weights.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hetsample/error.hpp"

namespace hetsample {

EdgeTypeWeights::EdgeTypeWeights(std::size_t num_node_types)
    : m_(num_node_types), w_(num_node_types * num_node_types, std::numeric_limits<double>::quiet_NaN()) {}

void EdgeTypeWeights::set(NodeTypeId a, NodeTypeId b, double w) {
  if (a >= m_ || b >= m_) throw ConfigError("edge type weight for unknown node type pair");
  if (!(w >= 0) || !std::isfinite(w)) throw ConfigError("edge type weights must be finite and non-negative");
  w_[a * m_ + b] = w;
  w_[b * m_ + a] = w;
}

bool EdgeTypeWeights::has(NodeTypeId a, NodeTypeId b) const {
  return a < m_ && b < m_ && !std::isnan(w_[a * m_ + b]);
}

std::optional<double> EdgeTypeWeights::get(NodeTypeId a, NodeTypeId b) const {
  if (!has(a, b)) return std::nullopt;
  return w_[a * m_ + b];
}

double EdgeTypeWeights::at(NodeTypeId a, NodeTypeId b) const {
  if (!has(a, b))
    throw ConfigError("no edge type weight for node types " + std::to_string(a) + " and " + std::to_string(b));
  return w_[a * m_ + b];
}

double EdgeTypeWeights::total() const {
  double sum = 0;
  for (double w : w_)
    if (!std::isnan(w)) sum += w;
  return sum;
}

void EdgeTypeWeights::scale(double factor) {
  for (double& w : w_)
    if (!std::isnan(w)) w *= factor;
}

}  // namespace hetsample
