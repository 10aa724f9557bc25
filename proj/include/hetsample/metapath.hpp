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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hetsample/graph.hpp"
#include "hetsample/weights.hpp"

namespace hetsample {

/// Type-level meta-path A1 -R1- A2 -R2- ... -Rl- A(l+1).
class MetaPathSchema {
 public:
  MetaPathSchema() = default;
  MetaPathSchema(std::vector<NodeTypeId> node_types, std::vector<EdgeTypeId> edge_types);

  /// Parses "A-P-A" or "A-[AP]-P-[AP]-A". An omitted edge label is inferred
  /// when exactly one edge type connects the two node types.
  static MetaPathSchema parse(std::string_view text, const SchemaGraph& schema);

  /// Throws ConfigError unless every step's edge type joins its node types.
  void validate(const SchemaGraph& schema) const;

  std::size_t length() const noexcept { return edge_types_.size(); }
  NodeTypeId start_type() const { return node_types_.front(); }
  const std::vector<NodeTypeId>& node_types() const noexcept { return node_types_; }
  const std::vector<EdgeTypeId>& edge_types() const noexcept { return edge_types_; }

  /// Joins two schemas sharing the boundary node type.
  MetaPathSchema concat(const MetaPathSchema& tail) const;

  /// "A-P-A" when every edge type is inferable, otherwise the explicit form.
  std::string label(const SchemaGraph& schema) const;

  /// Orders by (length, node types, edge types).
  std::strong_ordering operator<=>(const MetaPathSchema& other) const;
  bool operator==(const MetaPathSchema& other) const = default;

 private:
  std::vector<NodeTypeId> node_types_;
  std::vector<EdgeTypeId> edge_types_;
};

/// Every type-level path of length 1..max_len starting at start_type, sorted
/// by (length, node types, edge types).
std::vector<MetaPathSchema> enumerate_schemas(const SchemaGraph& schema, NodeTypeId start_type,
                                              std::size_t max_len);

/// Product of w(A_i, A_{i+1}) over the schema's steps.
double schema_importance(const MetaPathSchema& path, const EdgeTypeWeights& weights);

/// beta[index] * schema_importance(paths[index]).
double weighted_schema_importance(std::size_t index, std::span<const double> beta,
                                  std::span<const MetaPathSchema> paths, const EdgeTypeWeights& weights);

/// Number of ordered node sequences conforming to the schema (node revisits
/// allowed), evaluated right-to-left as a chain of biadjacency products
/// against the all-ones vector. Throws DomainError if the count overflows 64
/// bits.
std::uint64_t count_instances(const HeteroGraph& graph, const MetaPathSchema& path);

/// count_instances restricted to nodes with mask[v] set, i.e. the count in
/// the subgraph induced by the mask.
std::uint64_t count_instances(const HeteroGraph& graph, const MetaPathSchema& path, const std::vector<bool>& mask);

/// Instances that survive in the subgraph induced by `kept`.
std::uint64_t instances_preserved(const HeteroGraph& graph, std::span<const NodeId> kept,
                                  const MetaPathSchema& path);

struct WalkResult {
  std::vector<NodeId> nodes;
  std::vector<EdgeId> edges;
  bool truncated = false;
};

/// Neighbors of `from` that can take step `step` of the schema (right node
/// type via the right edge type), ranked by degree descending then id.
std::vector<NodeId> ranked_step_candidates(const HeteroGraph& graph, NodeId from, const MetaPathSchema& path,
                                           std::size_t step);

/// Deterministic walk along the schema from `start`: each hop moves to the
/// conforming neighbor of maximum degree (lowest id on ties). Stops with
/// truncated = true when no conforming neighbor exists. Throws ParameterError
/// if start's type is not the schema's first type.
WalkResult guided_walk(const HeteroGraph& graph, NodeId start, const MetaPathSchema& path);

/// As guided_walk, but the first hop goes to `first_hop`, which must be one of
/// ranked_step_candidates(graph, start, path, 0).
WalkResult guided_walk_via(const HeteroGraph& graph, NodeId start, NodeId first_hop, const MetaPathSchema& path);

}  // namespace hetsample
