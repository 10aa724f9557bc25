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

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hetsample/schema.hpp"

namespace hetsample {

/// Symmetric importance matrix over node-type pairs: w(a, b) weighs the edge
/// type connecting node types a and b. Entries may be left unset; reading an
/// unset entry through at() is a configuration error.
class EdgeTypeWeights {
 public:
  EdgeTypeWeights() = default;
  explicit EdgeTypeWeights(std::size_t num_node_types);

  std::size_t num_node_types() const noexcept { return m_; }

  void set(NodeTypeId a, NodeTypeId b, double w);
  bool has(NodeTypeId a, NodeTypeId b) const;
  std::optional<double> get(NodeTypeId a, NodeTypeId b) const;
  double at(NodeTypeId a, NodeTypeId b) const;

  /// Sum over the full m x m matrix; off-diagonal pairs count twice.
  double total() const;
  void scale(double factor);

 private:
  std::size_t m_ = 0;
  std::vector<double> w_;  // NaN marks an unset entry
};

}  // namespace hetsample
