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

// Test-only graph fixtures and brute-force oracles. Nothing here calls the
// library's counting, walking or metric code.

#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hetsample/graph.hpp"
#include "hetsample/graph_io.hpp"
#include "hetsample/metapath.hpp"

namespace hetsample::testing {

inline HeteroGraph graph_from_text(const SchemaGraph& schema, const std::string& nodes, const std::string& edges) {
  std::istringstream n(nodes), e(edges);
  return load_graph(n, e, schema);
}

/// Author / Paper / Conference / Term schema with edge types PA, PC, PT.
inline SchemaGraph dblp_schema() {
  return SchemaGraph({"A", "P", "C", "T"}, {{"PA", 1, 0}, {"PC", 1, 2}, {"PT", 1, 3}});
}

inline SchemaGraph ap_schema() { return SchemaGraph({"A", "P"}, {{"AP", 0, 1}}); }

/// a1 - p1 - a2: the two-author fixture.
inline HeteroGraph two_author_graph() {
  return graph_from_text(ap_schema(), "a1\tA\na2\tA\np1\tP\n", "a1\tp1\tAP\na2\tp1\tAP\n");
}

/// Random schema with `types` node types and `edge_types` edge types with
/// random (possibly equal) endpoint types.
inline SchemaGraph random_schema(std::mt19937_64& rng, std::size_t types, std::size_t edge_types) {
  std::vector<std::string> labels;
  for (std::size_t t = 0; t < types; ++t) labels.push_back("T" + std::to_string(t));
  std::vector<EdgeTypeDef> defs;
  std::uniform_int_distribution<NodeTypeId> pick(0, static_cast<NodeTypeId>(types - 1));
  for (std::size_t r = 0; r < edge_types; ++r) defs.push_back({"R" + std::to_string(r), pick(rng), pick(rng)});
  return SchemaGraph(std::move(labels), std::move(defs));
}

/// Random typed graph over `schema` with up to `edges` edge attempts.
inline HeteroGraph random_graph(std::mt19937_64& rng, const SchemaGraph& schema, std::size_t nodes,
                                std::size_t edges) {
  GraphBuilder builder(schema);
  std::uniform_int_distribution<NodeTypeId> pick_type(0, static_cast<NodeTypeId>(schema.num_node_types() - 1));
  std::vector<std::vector<NodeId>> by_type(schema.num_node_types());
  for (std::size_t i = 0; i < nodes; ++i) {
    const auto t = pick_type(rng);
    by_type[t].push_back(builder.add_node("n" + std::to_string(i), t));
  }
  if (schema.num_edge_types() == 0) return std::move(builder).build();
  std::uniform_int_distribution<EdgeTypeId> pick_edge(0, static_cast<EdgeTypeId>(schema.num_edge_types() - 1));
  for (std::size_t i = 0; i < edges; ++i) {
    const auto r = pick_edge(rng);
    const auto& def = schema.edge_type(r);
    const auto& a = by_type[def.first];
    const auto& b = by_type[def.second];
    if (a.empty() || b.empty()) continue;
    const NodeId u = a[std::uniform_int_distribution<std::size_t>(0, a.size() - 1)(rng)];
    const NodeId v = b[std::uniform_int_distribution<std::size_t>(0, b.size() - 1)(rng)];
    builder.add_edge(u, v, r);
  }
  return std::move(builder).build();
}

/// Exhaustive DFS over the raw edge list: every ordered node sequence that
/// conforms to the schema and uses only nodes with mask set.
inline std::uint64_t dfs_count(const HeteroGraph& g, const MetaPathSchema& path, const std::vector<bool>& mask) {
  // Plain adjacency from the edge list, independent of the CSR.
  std::vector<std::vector<std::pair<NodeId, EdgeTypeId>>> adj(g.num_nodes());
  for (const auto& e : g.edges()) {
    adj[e.src].push_back({e.dst, e.type});
    adj[e.dst].push_back({e.src, e.type});
  }
  const auto& types = path.node_types();
  const auto& etypes = path.edge_types();
  std::uint64_t count = 0;
  auto dfs = [&](auto&& self, NodeId v, std::size_t pos) -> void {
    if (pos == path.length()) {
      ++count;
      return;
    }
    for (auto [u, r] : adj[v])
      if (r == etypes[pos] && g.node_type(u) == types[pos + 1] && mask[u]) self(self, u, pos + 1);
  };
  for (NodeId v = 0; v < g.num_nodes(); ++v)
    if (g.node_type(v) == types[0] && mask[v]) dfs(dfs, v, 0);
  return count;
}

inline std::uint64_t dfs_count(const HeteroGraph& g, const MetaPathSchema& path) {
  return dfs_count(g, path, std::vector<bool>(g.num_nodes(), true));
}

/// Brute-force induced edge set: (label, label, type label) triples.
inline std::set<std::tuple<std::string, std::string, std::string>> edge_triples(const HeteroGraph& g,
                                                                                const std::set<NodeId>& keep) {
  std::set<std::tuple<std::string, std::string, std::string>> out;
  for (const auto& e : g.edges())
    if (keep.contains(e.src) && keep.contains(e.dst)) {
      auto a = g.node_label(e.src), b = g.node_label(e.dst);
      if (b < a) std::swap(a, b);
      out.emplace(a, b, g.schema().edge_type(e.type).label);
    }
  return out;
}

inline std::string serialize(const HeteroGraph& g) {
  std::ostringstream n, e;
  write_graph(n, e, g);
  return n.str() + "--\n" + e.str();
}

}  // namespace hetsample::testing
