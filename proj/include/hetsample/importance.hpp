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

#include <vector>

#include "hetsample/metapath.hpp"
#include "hetsample/weights.hpp"

namespace hetsample {

/// Node-type weights alpha, edge-type importance W, the meta-path set and its
/// weights beta.
struct ImportanceConfig {
  std::vector<double> alpha;
  EdgeTypeWeights weights;
  std::vector<MetaPathSchema> paths;
  std::vector<double> beta;

  /// Checks sizes against the schema, non-negativity, sum(alpha) = 1,
  /// sum over W = 1, sum(beta) = 1 (each within 1e-9), that W has an entry for
  /// every edge type's endpoint pair, and that every meta-path is valid.
  /// Throws ConfigError naming the offending field.
  void validate(const SchemaGraph& schema) const;

  /// Rescales alpha, W and beta to unit sums.
  void normalize();

  /// alpha = 1/m, W uniform over the edge types' endpoint pairs, no
  /// meta-paths.
  static ImportanceConfig uniform(const SchemaGraph& schema);
};

}  // namespace hetsample
