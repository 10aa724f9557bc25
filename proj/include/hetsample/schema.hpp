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

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hetsample {

using NodeId = std::uint32_t;
using NodeTypeId = std::uint32_t;
using EdgeTypeId = std::uint32_t;

struct EdgeTypeDef {
  std::string label;
  NodeTypeId first;
  NodeTypeId second;

  bool connects(NodeTypeId a, NodeTypeId b) const noexcept {
    return (first == a && second == b) || (first == b && second == a);
  }
  // Endpoint type reached when traversing this edge type from `from`.
  NodeTypeId other(NodeTypeId from) const noexcept { return from == first ? second : first; }
};

/// Type-level view of a heterogeneous graph: the node type set and the edge
/// types with their (unordered) endpoint-type signatures.
class SchemaGraph {
 public:
  SchemaGraph() = default;
  SchemaGraph(std::vector<std::string> node_types, std::vector<EdgeTypeDef> edge_types);

  std::size_t num_node_types() const noexcept { return node_types_.size(); }
  std::size_t num_edge_types() const noexcept { return edge_types_.size(); }

  const std::string& node_type_label(NodeTypeId t) const;
  const EdgeTypeDef& edge_type(EdgeTypeId r) const;
  const std::vector<std::string>& node_type_labels() const noexcept { return node_types_; }
  const std::vector<EdgeTypeDef>& edge_types() const noexcept { return edge_types_; }

  NodeTypeId node_type_id(std::string_view label) const;
  EdgeTypeId edge_type_id(std::string_view label) const;
  bool has_node_type(std::string_view label) const;
  bool has_edge_type(std::string_view label) const;

  /// Edge types permitted between two node types, ascending id. Symmetric.
  std::span<const EdgeTypeId> compatible(NodeTypeId a, NodeTypeId b) const;

  /// Edge types with `t` as one endpoint, ascending id.
  std::span<const EdgeTypeId> incident(NodeTypeId t) const;

  bool operator==(const SchemaGraph& other) const;

 private:
  std::size_t pair_index(NodeTypeId a, NodeTypeId b) const noexcept {
    return static_cast<std::size_t>(a) * node_types_.size() + b;
  }

  std::vector<std::string> node_types_;
  std::vector<EdgeTypeDef> edge_types_;
  std::unordered_map<std::string, NodeTypeId> node_type_index_;
  std::unordered_map<std::string, EdgeTypeId> edge_type_index_;
  std::vector<std::vector<EdgeTypeId>> compatibility_;
  std::vector<std::vector<EdgeTypeId>> incident_;
};

// JSON document:
//   {"node_types": ["A", "P"],
//    "edge_types": [{"label": "AP", "endpoints": ["A", "P"]}]}
SchemaGraph read_schema(std::istream& in);
void write_schema(std::ostream& out, const SchemaGraph& schema);

}  // namespace hetsample
