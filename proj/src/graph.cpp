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

#include "hetsample/graph.hpp"

#include <algorithm>
#include <numeric>

#include "hetsample/error.hpp"

namespace hetsample {

namespace {

std::uint64_t pair_key(NodeId u, NodeId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

void HeteroGraph::throw_unknown_node(NodeId v) {
  throw LookupError("unknown node id " + std::to_string(v));
}

NodeId HeteroGraph::node_id(std::string_view label) const {
  auto it = label_index_.find(std::string(label));
  if (it == label_index_.end()) throw LookupError("unknown node '" + std::string(label) + "'");
  return it->second;
}

bool HeteroGraph::has_node(std::string_view label) const {
  return label_index_.contains(std::string(label));
}

const Edge& HeteroGraph::edge(EdgeId e) const {
  if (e >= edges_.size()) throw LookupError("unknown edge id " + std::to_string(e));
  return edges_[e];
}

std::span<const Neighbor> HeteroGraph::typed_neighbors(NodeId v, NodeTypeId neighbor_type) const {
  check_node(v);
  if (neighbor_type >= schema_.num_node_types())
    throw LookupError("unknown node type id " + std::to_string(neighbor_type));
  auto all = neighbors(v);
  auto lo = std::partition_point(all.begin(), all.end(),
                                 [&](const Neighbor& n) { return node_types_[n.node] < neighbor_type; });
  auto hi = std::partition_point(lo, all.end(),
                                 [&](const Neighbor& n) { return node_types_[n.node] == neighbor_type; });
  return {lo, hi};
}

std::span<const NodeId> HeteroGraph::nodes_of_type(NodeTypeId t) const {
  if (t >= schema_.num_node_types()) throw LookupError("unknown node type id " + std::to_string(t));
  return {type_members_.data() + type_offsets_[t], type_members_.data() + type_offsets_[t + 1]};
}

std::vector<std::size_t> HeteroGraph::node_type_counts() const {
  std::vector<std::size_t> counts(schema_.num_node_types(), 0);
  for (auto t : node_types_) ++counts[t];
  return counts;
}

std::vector<std::size_t> HeteroGraph::edge_type_counts() const {
  std::vector<std::size_t> counts(schema_.num_edge_types(), 0);
  for (const auto& e : edges_) ++counts[e.type];
  return counts;
}

EdgeId HeteroGraph::find_edge(NodeId u, NodeId v) const {
  auto range = typed_neighbors(u, node_type(v));
  auto it = std::lower_bound(range.begin(), range.end(), v,
                             [](const Neighbor& n, NodeId id) { return n.node < id; });
  return (it != range.end() && it->node == v) ? it->edge : npos;
}

bool operator==(const HeteroGraph& a, const HeteroGraph& b) {
  return a.schema_ == b.schema_ && a.node_types_ == b.node_types_ && a.node_labels_ == b.node_labels_ &&
         a.edges_ == b.edges_;
}

GraphBuilder::GraphBuilder(SchemaGraph schema) { graph_.schema_ = std::move(schema); }

NodeId GraphBuilder::add_node(std::string label, NodeTypeId type) {
  if (type >= graph_.schema_.num_node_types())
    throw SchemaError("unknown node type id " + std::to_string(type));
  const auto id = static_cast<NodeId>(graph_.node_types_.size());
  if (!graph_.label_index_.emplace(label, id).second) throw DuplicateError("duplicate node id '" + label + "'");
  graph_.node_types_.push_back(type);
  graph_.node_labels_.push_back(std::move(label));
  return id;
}

NodeId GraphBuilder::find(std::string_view label) const {
  auto it = graph_.label_index_.find(std::string(label));
  return it == graph_.label_index_.end() ? npos : it->second;
}

bool GraphBuilder::add_edge(NodeId u, NodeId v, EdgeTypeId type) {
  const auto n = graph_.node_types_.size();
  if (u >= n || v >= n) throw ReferenceError("edge endpoint references an unknown node");
  const auto& def = graph_.schema_.edge_type(type);
  if (!def.connects(graph_.node_types_[u], graph_.node_types_[v]))
    throw SchemaError("edge type '" + def.label + "' cannot connect node types '" +
                      graph_.schema_.node_type_label(graph_.node_types_[u]) + "' and '" +
                      graph_.schema_.node_type_label(graph_.node_types_[v]) + "'");
  if (u == v) {
    ++stats_.self_loops;
    return false;
  }
  if (u > v) std::swap(u, v);
  auto [it, inserted] = pairs_.emplace(pair_key(u, v), static_cast<EdgeId>(graph_.edges_.size()));
  if (!inserted) {
    ++stats_.duplicate_edges;
    return false;
  }
  graph_.edges_.push_back({u, v, type});
  return true;
}

HeteroGraph GraphBuilder::build() && {
  auto& g = graph_;
  pairs_.clear();
  std::sort(g.edges_.begin(), g.edges_.end(),
            [](const Edge& a, const Edge& b) { return a.src != b.src ? a.src < b.src : a.dst < b.dst; });

  const std::size_t n = g.node_types_.size();
  g.offsets_.assign(n + 1, 0);
  for (const auto& e : g.edges_) {
    ++g.offsets_[e.src + 1];
    ++g.offsets_[e.dst + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.adjacency_.resize(g.offsets_[n]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (EdgeId id = 0; id < g.edges_.size(); ++id) {
    const auto& e = g.edges_[id];
    g.adjacency_[cursor[e.src]++] = {e.dst, e.type, id};
    g.adjacency_[cursor[e.dst]++] = {e.src, e.type, id};
  }
  const auto& types = g.node_types_;
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]),
              [&](const Neighbor& a, const Neighbor& b) {
                return types[a.node] != types[b.node] ? types[a.node] < types[b.node] : a.node < b.node;
              });
  }

  const std::size_t m = g.schema_.num_node_types();
  g.type_offsets_.assign(m + 1, 0);
  for (auto t : types) ++g.type_offsets_[t + 1];
  std::partial_sum(g.type_offsets_.begin(), g.type_offsets_.end(), g.type_offsets_.begin());
  g.type_members_.resize(n);
  std::vector<std::size_t> type_cursor(g.type_offsets_.begin(), g.type_offsets_.end() - 1);
  for (NodeId v = 0; v < n; ++v) g.type_members_[type_cursor[types[v]]++] = v;

  return std::move(g);
}

HeteroGraph induced_subgraph(const HeteroGraph& graph, std::span<const NodeId> keep) {
  const std::size_t n = graph.num_nodes();
  std::vector<NodeId> remap(n, GraphBuilder::npos);
  for (auto v : keep) {
    if (v >= n) throw LookupError("unknown node id " + std::to_string(v));
    remap[v] = 0;
  }
  GraphBuilder builder(graph.schema());
  for (NodeId v = 0; v < n; ++v)
    if (remap[v] != GraphBuilder::npos) remap[v] = builder.add_node(graph.node_label(v), graph.node_type(v));
  for (const auto& e : graph.edges())
    if (remap[e.src] != GraphBuilder::npos && remap[e.dst] != GraphBuilder::npos)
      builder.add_edge(remap[e.src], remap[e.dst], e.type);
  return std::move(builder).build();
}

std::vector<EdgeId> induced_edges(const HeteroGraph& graph, const std::vector<bool>& mask) {
  std::vector<EdgeId> out;
  auto edges = graph.edges();
  for (EdgeId id = 0; id < edges.size(); ++id)
    if (mask[edges[id].src] && mask[edges[id].dst]) out.push_back(id);
  return out;
}

namespace {

std::vector<double> normalize(const std::vector<std::size_t>& counts, std::size_t total) {
  std::vector<double> out(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) out[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
  return out;
}

}  // namespace

std::vector<double> node_type_distribution(const HeteroGraph& graph) {
  if (graph.num_nodes() == 0) throw DomainError("node type distribution of an empty graph");
  return normalize(graph.node_type_counts(), graph.num_nodes());
}

std::vector<double> edge_type_distribution(const HeteroGraph& graph) {
  if (graph.num_edges() == 0) throw DomainError("edge type distribution of an edgeless graph");
  return normalize(graph.edge_type_counts(), graph.num_edges());
}

}  // namespace hetsample
