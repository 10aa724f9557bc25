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
#include <cstdint>
#include <string>
#include <vector>

#include "hetsample/graph.hpp"

namespace hetsample {

struct SyntheticNodeType {
  std::string label;
  std::size_t count = 0;
};

struct SyntheticEdgeType {
  std::string label;
  std::string first;
  std::string second;
  std::size_t count = 0;
};

struct SyntheticParams {
  std::vector<SyntheticNodeType> node_types;
  std::vector<SyntheticEdgeType> edge_types;
  /// Power-law exponent of the per-endpoint attachment weights; 0 is uniform.
  double skew = 1.0;
  std::uint64_t seed = 0;

  void validate() const;
  SchemaGraph schema() const;
};

/// Seeded heterogeneous graph with exact per-type node counts and exact
/// per-edge-type edge counts.
///
/// Within each edge type, every endpoint node gets an attachment weight
/// (rank + 1)^-skew over a seeded random ranking of its type, and edges are
/// drawn as distinct node pairs with probability proportional to the product
/// of endpoint weights (a Chung-Lu construction). Node labels are
/// "<type>_<index>". Throws ParameterError when an edge count exceeds the
/// number of free node pairs for its endpoint types.
HeteroGraph generate_synthetic(const SyntheticParams& params);

}  // namespace hetsample
