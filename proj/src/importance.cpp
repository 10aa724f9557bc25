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

#include "hetsample/importance.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "hetsample/error.hpp"

namespace hetsample {

namespace {

constexpr double kSumTolerance = 1e-9;

void check_unit_sum(const std::vector<double>& v, const char* field) {
  for (double x : v)
    if (!(x >= 0) || !std::isfinite(x))
      throw ConfigError(std::string(field) + ": entries must be finite and non-negative");
  const double sum = std::accumulate(v.begin(), v.end(), 0.0);
  if (std::abs(sum - 1.0) > kSumTolerance)
    throw ConfigError(std::string(field) + ": entries sum to " + std::to_string(sum) + ", expected 1");
}

}  // namespace

void ImportanceConfig::validate(const SchemaGraph& schema) const {
  if (alpha.size() != schema.num_node_types())
    throw ConfigError("alpha: expected " + std::to_string(schema.num_node_types()) + " entries, got " +
                      std::to_string(alpha.size()));
  check_unit_sum(alpha, "alpha");

  if (weights.num_node_types() != schema.num_node_types())
    throw ConfigError("W: dimension does not match the number of node types");
  for (const auto& def : schema.edge_types())
    if (!weights.has(def.first, def.second))
      throw ConfigError("W: missing weight for edge type '" + def.label + "' (" +
                        schema.node_type_label(def.first) + "-" + schema.node_type_label(def.second) + ")");
  if (std::abs(weights.total() - 1.0) > kSumTolerance)
    throw ConfigError("W: entries sum to " + std::to_string(weights.total()) + ", expected 1");

  if (beta.size() != paths.size())
    throw ConfigError("beta: expected one weight per meta-path (" + std::to_string(paths.size()) + "), got " +
                      std::to_string(beta.size()));
  if (!paths.empty()) check_unit_sum(beta, "beta");
  for (const auto& p : paths) p.validate(schema);
}

void ImportanceConfig::normalize() {
  auto unit = [](std::vector<double>& v) {
    const double sum = std::accumulate(v.begin(), v.end(), 0.0);
    if (sum > 0)
      for (double& x : v) x /= sum;
  };
  unit(alpha);
  unit(beta);
  if (const double total = weights.total(); total > 0) weights.scale(1.0 / total);
}

ImportanceConfig ImportanceConfig::uniform(const SchemaGraph& schema) {
  ImportanceConfig config;
  const std::size_t m = schema.num_node_types();
  config.alpha.assign(m, 1.0 / static_cast<double>(m));
  config.weights = EdgeTypeWeights(m);
  for (const auto& def : schema.edge_types()) config.weights.set(def.first, def.second, 1.0);
  config.normalize();
  return config;
}

}  // namespace hetsample
