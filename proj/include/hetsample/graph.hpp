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
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hetsample/schema.hpp"

namespace hetsample {

using EdgeId = std::uint32_t;

/// Undirected typed edge, stored once with src < dst.
struct Edge {
  NodeId src;
  NodeId dst;
  EdgeTypeId type;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  NodeId node;
  EdgeTypeId edge_type;
  EdgeId edge;
};

/// Immutable heterogeneous graph G = (V, E, phi, psi).
///
/// Nodes carry dense ids (assigned in input order), a type and the external
/// label they were loaded with. Adjacency is CSR; each node's neighbor slice
/// is sorted by (neighbor type, neighbor id) so that every typed neighborhood
/// is a contiguous, ascending-id range.
class HeteroGraph {
 public:
  HeteroGraph() = default;

  std::size_t num_nodes() const noexcept { return node_types_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const SchemaGraph& schema() const noexcept { return schema_; }

  NodeTypeId node_type(NodeId v) const {
    check_node(v);
    return node_types_[v];
  }
  const std::string& node_label(NodeId v) const {
    check_node(v);
    return node_labels_[v];
  }
  /// Id of the node loaded with `label`; throws LookupError when absent.
  NodeId node_id(std::string_view label) const;
  bool has_node(std::string_view label) const;

  std::span<const NodeTypeId> node_types() const noexcept { return node_types_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const;

  std::size_t degree(NodeId v) const {
    check_node(v);
    return offsets_[v + 1] - offsets_[v];
  }
  std::span<const Neighbor> neighbors(NodeId v) const {
    check_node(v);
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  /// Neighbors of v whose node type is `neighbor_type`, ascending id.
  std::span<const Neighbor> typed_neighbors(NodeId v, NodeTypeId neighbor_type) const;

  /// Nodes of one type, ascending id.
  std::span<const NodeId> nodes_of_type(NodeTypeId t) const;

  /// Node counts per node type (indexed by NodeTypeId).
  std::vector<std::size_t> node_type_counts() const;
  /// Edge counts per edge type (indexed by EdgeTypeId).
  std::vector<std::size_t> edge_type_counts() const;

  /// Edge id joining u and v, or npos.
  static constexpr EdgeId npos = static_cast<EdgeId>(-1);
  EdgeId find_edge(NodeId u, NodeId v) const;

  friend bool operator==(const HeteroGraph& a, const HeteroGraph& b);

 private:
  friend class GraphBuilder;

  void check_node(NodeId v) const {
    if (v >= node_types_.size()) throw_unknown_node(v);
  }
  [[noreturn]] static void throw_unknown_node(NodeId v);

  SchemaGraph schema_;
  std::vector<NodeTypeId> node_types_;
  std::vector<std::string> node_labels_;
  std::unordered_map<std::string, NodeId> label_index_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> adjacency_;
  std::vector<std::size_t> type_offsets_{0};
  std::vector<NodeId> type_members_;
};

/// Diagnostics from graph construction: input records dropped rather than
/// stored.
struct BuildStats {
  std::size_t duplicate_edges = 0;
  std::size_t self_loops = 0;
};

/// Accumulates nodes and edges, then freezes them into a HeteroGraph.
///
/// Edges are undirected. A second edge on an already-connected node pair (in
/// either orientation, any type) and self-loops are dropped and counted in
/// stats(). Endpoint types must match the edge type's signature.
class GraphBuilder {
 public:
  explicit GraphBuilder(SchemaGraph schema);

  /// Adds a node and returns its dense id. Throws DuplicateError on a
  /// repeated label.
  NodeId add_node(std::string label, NodeTypeId type);

  /// Returns false when the edge was dropped (duplicate or self-loop).
  bool add_edge(NodeId u, NodeId v, EdgeTypeId type);

  std::size_t num_nodes() const noexcept { return graph_.node_types_.size(); }
  const SchemaGraph& schema() const noexcept { return graph_.schema_; }
  const BuildStats& stats() const noexcept { return stats_; }
  NodeId find(std::string_view label) const;  // npos when absent
  static constexpr NodeId npos = static_cast<NodeId>(-1);

  HeteroGraph build() &&;

 private:
  HeteroGraph graph_;
  BuildStats stats_;
  std::unordered_map<std::uint64_t, EdgeId> pairs_;
};

/// Subgraph on `keep` with every edge whose endpoints are both kept. Nodes
/// are renumbered densely in ascending original-id order; labels and types are
/// preserved.
HeteroGraph induced_subgraph(const HeteroGraph& graph, std::span<const NodeId> keep);

/// Edge ids (ascending) of the subgraph induced by a node mask.
std::vector<EdgeId> induced_edges(const HeteroGraph& graph, const std::vector<bool>& mask);

/// Fraction of nodes per node type. Throws DomainError on an empty graph.
std::vector<double> node_type_distribution(const HeteroGraph& graph);
/// Fraction of edges per edge type. Throws DomainError on an edgeless graph.
std::vector<double> edge_type_distribution(const HeteroGraph& graph);

}  // namespace hetsample
