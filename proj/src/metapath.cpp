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

#include "hetsample/metapath.hpp"

#include <algorithm>

#include "hetsample/error.hpp"

namespace hetsample {

MetaPathSchema::MetaPathSchema(std::vector<NodeTypeId> node_types, std::vector<EdgeTypeId> edge_types)
    : node_types_(std::move(node_types)), edge_types_(std::move(edge_types)) {
  if (edge_types_.empty()) throw ParameterError("meta-path needs at least one edge step");
  if (node_types_.size() != edge_types_.size() + 1)
    throw ParameterError("meta-path node and edge sequences do not alternate");
}

MetaPathSchema MetaPathSchema::parse(std::string_view text, const SchemaGraph& schema) {
  // Tokenize on '-' outside of brackets.
  std::vector<std::string> tokens;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == '-' && depth == 0) {
      tokens.push_back(std::move(current));
      current.clear();
    } else if (c != ' ') {
      current.push_back(c);
    }
  }
  tokens.push_back(std::move(current));

  const std::string where = "meta-path '" + std::string(text) + "': ";
  std::vector<NodeTypeId> nodes;
  std::vector<EdgeTypeId> edges;
  std::vector<std::string> pending_edge;  // explicit edge label awaiting its right node
  for (const auto& token : tokens) {
    if (token.empty()) throw ConfigError(where + "empty element");
    if (token.front() == '[') {
      if (token.back() != ']' || token.size() < 3) throw ConfigError(where + "malformed edge label " + token);
      if (nodes.empty() || !pending_edge.empty()) throw ConfigError(where + "edge label out of place");
      pending_edge.push_back(token.substr(1, token.size() - 2));
      continue;
    }
    if (!schema.has_node_type(token)) throw ConfigError(where + "unknown node type '" + token + "'");
    const NodeTypeId t = schema.node_type_id(token);
    if (!nodes.empty()) {
      const NodeTypeId prev = nodes.back();
      if (!pending_edge.empty()) {
        if (!schema.has_edge_type(pending_edge.front()))
          throw ConfigError(where + "unknown edge type '" + pending_edge.front() + "'");
        edges.push_back(schema.edge_type_id(pending_edge.front()));
        pending_edge.clear();
      } else {
        auto options = schema.compatible(prev, t);
        if (options.size() != 1)
          throw ConfigError(where + (options.empty() ? "no" : "more than one") + " edge type between '" +
                            schema.node_type_label(prev) + "' and '" + token + "'; name it explicitly");
        edges.push_back(options.front());
      }
    }
    nodes.push_back(t);
  }
  if (!pending_edge.empty()) throw ConfigError(where + "trailing edge label");
  if (edges.empty()) throw ConfigError(where + "needs at least two node types");
  MetaPathSchema out(std::move(nodes), std::move(edges));
  out.validate(schema);
  return out;
}

void MetaPathSchema::validate(const SchemaGraph& schema) const {
  for (std::size_t i = 0; i < edge_types_.size(); ++i) {
    if (node_types_[i] >= schema.num_node_types() || node_types_[i + 1] >= schema.num_node_types() ||
        edge_types_[i] >= schema.num_edge_types())
      throw ConfigError("meta-path references an unknown type");
    if (!schema.edge_type(edge_types_[i]).connects(node_types_[i], node_types_[i + 1]))
      throw ConfigError("meta-path step " + std::to_string(i + 1) + ": edge type '" +
                        schema.edge_type(edge_types_[i]).label + "' does not connect '" +
                        schema.node_type_label(node_types_[i]) + "' and '" +
                        schema.node_type_label(node_types_[i + 1]) + "'");
  }
}

MetaPathSchema MetaPathSchema::concat(const MetaPathSchema& tail) const {
  if (node_types_.back() != tail.node_types_.front())
    throw ParameterError("meta-path concatenation needs a shared boundary type");
  auto nodes = node_types_;
  nodes.insert(nodes.end(), tail.node_types_.begin() + 1, tail.node_types_.end());
  auto edges = edge_types_;
  edges.insert(edges.end(), tail.edge_types_.begin(), tail.edge_types_.end());
  return MetaPathSchema(std::move(nodes), std::move(edges));
}

std::string MetaPathSchema::label(const SchemaGraph& schema) const {
  bool inferable = true;
  for (std::size_t i = 0; i < edge_types_.size(); ++i)
    inferable = inferable && schema.compatible(node_types_[i], node_types_[i + 1]).size() == 1;
  std::string out = schema.node_type_label(node_types_[0]);
  for (std::size_t i = 0; i < edge_types_.size(); ++i) {
    if (!inferable) out += "-[" + schema.edge_type(edge_types_[i]).label + "]";
    out += "-" + schema.node_type_label(node_types_[i + 1]);
  }
  return out;
}

std::strong_ordering MetaPathSchema::operator<=>(const MetaPathSchema& other) const {
  if (auto c = length() <=> other.length(); c != 0) return c;
  if (auto c = node_types_ <=> other.node_types_; c != 0) return c;
  return edge_types_ <=> other.edge_types_;
}

std::vector<MetaPathSchema> enumerate_schemas(const SchemaGraph& schema, NodeTypeId start_type,
                                              std::size_t max_len) {
  if (max_len < 1) throw ParameterError("maximum meta-path length must be at least 1");
  if (start_type >= schema.num_node_types())
    throw LookupError("unknown node type id " + std::to_string(start_type));

  struct Partial {
    std::vector<NodeTypeId> nodes;
    std::vector<EdgeTypeId> edges;
  };
  std::vector<MetaPathSchema> out;
  std::vector<Partial> frontier{{{start_type}, {}}};
  for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<Partial> next;
    for (const auto& p : frontier) {
      const NodeTypeId last = p.nodes.back();
      for (EdgeTypeId r : schema.incident(last)) {
        Partial q = p;
        q.nodes.push_back(schema.edge_type(r).other(last));
        q.edges.push_back(r);
        out.emplace_back(q.nodes, q.edges);
        next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double schema_importance(const MetaPathSchema& path, const EdgeTypeWeights& weights) {
  const auto& nodes = path.node_types();
  double score = 1.0;
  for (std::size_t i = 0; i < path.length(); ++i) score *= weights.at(nodes[i], nodes[i + 1]);
  return score;
}

double weighted_schema_importance(std::size_t index, std::span<const double> beta,
                                  std::span<const MetaPathSchema> paths, const EdgeTypeWeights& weights) {
  if (index >= paths.size() || index >= beta.size())
    throw ParameterError("meta-path index " + std::to_string(index) + " out of range");
  return beta[index] * schema_importance(paths[index], weights);
}

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw DomainError("meta-path instance count overflows 64 bits");
  return out;
}

}  // namespace

std::uint64_t count_instances(const HeteroGraph& graph, const MetaPathSchema& path, const std::vector<bool>& mask) {
  path.validate(graph.schema());
  const auto& types = path.node_types();
  const auto& etypes = path.edge_types();
  const std::size_t l = path.length();

  // walks[v]: number of conforming continuations from v at the current
  // position to the end of the schema.
  std::vector<std::uint64_t> walks(graph.num_nodes(), 0);
  std::vector<std::uint64_t> next(graph.num_nodes(), 0);
  for (NodeId v : graph.nodes_of_type(types[l]))
    if (mask[v]) walks[v] = 1;

  for (std::size_t step = l; step-- > 0;) {
    std::swap(walks, next);
    for (NodeId u : graph.nodes_of_type(types[step])) {
      std::uint64_t total = 0;
      if (mask[u])
        for (const auto& nb : graph.typed_neighbors(u, types[step + 1]))
          if (nb.edge_type == etypes[step] && mask[nb.node]) total = checked_add(total, next[nb.node]);
      walks[u] = total;
    }
    // Clear the consumed vector on the type it was populated for.
    for (NodeId w : graph.nodes_of_type(types[step + 1])) next[w] = 0;
  }
  std::uint64_t total = 0;
  for (NodeId u : graph.nodes_of_type(types[0])) total = checked_add(total, walks[u]);
  return total;
}

std::uint64_t count_instances(const HeteroGraph& graph, const MetaPathSchema& path) {
  return count_instances(graph, path, std::vector<bool>(graph.num_nodes(), true));
}

std::uint64_t instances_preserved(const HeteroGraph& graph, std::span<const NodeId> kept,
                                  const MetaPathSchema& path) {
  std::vector<bool> mask(graph.num_nodes(), false);
  for (NodeId v : kept) {
    if (v >= graph.num_nodes()) throw LookupError("unknown node id " + std::to_string(v));
    mask[v] = true;
  }
  return count_instances(graph, path, mask);
}

namespace {

bool better_hop(const HeteroGraph& graph, NodeId candidate, NodeId incumbent) {
  const auto dc = graph.degree(candidate);
  const auto di = graph.degree(incumbent);
  return dc != di ? dc > di : candidate < incumbent;
}

// Best conforming neighbor for the given step, or npos.
const Neighbor* best_step(const HeteroGraph& graph, NodeId from, const MetaPathSchema& path, std::size_t step) {
  const Neighbor* best = nullptr;
  for (const auto& nb : graph.typed_neighbors(from, path.node_types()[step + 1])) {
    if (nb.edge_type != path.edge_types()[step]) continue;
    if (!best || better_hop(graph, nb.node, best->node)) best = &nb;
  }
  return best;
}

void continue_walk(const HeteroGraph& graph, const MetaPathSchema& path, std::size_t from_step, WalkResult& walk) {
  for (std::size_t step = from_step; step < path.length(); ++step) {
    const Neighbor* hop = best_step(graph, walk.nodes.back(), path, step);
    if (!hop) {
      walk.truncated = true;
      return;
    }
    walk.nodes.push_back(hop->node);
    walk.edges.push_back(hop->edge);
  }
}

void check_start(const HeteroGraph& graph, NodeId start, const MetaPathSchema& path) {
  if (graph.node_type(start) != path.start_type())
    throw ParameterError("walk start node " + graph.node_label(start) + " does not have the meta-path's first type");
}

}  // namespace

std::vector<NodeId> ranked_step_candidates(const HeteroGraph& graph, NodeId from, const MetaPathSchema& path,
                                           std::size_t step) {
  if (step >= path.length()) throw ParameterError("meta-path step out of range");
  std::vector<NodeId> out;
  for (const auto& nb : graph.typed_neighbors(from, path.node_types()[step + 1]))
    if (nb.edge_type == path.edge_types()[step]) out.push_back(nb.node);
  std::stable_sort(out.begin(), out.end(), [&](NodeId a, NodeId b) { return graph.degree(a) > graph.degree(b); });
  return out;
}

WalkResult guided_walk(const HeteroGraph& graph, NodeId start, const MetaPathSchema& path) {
  check_start(graph, start, path);
  WalkResult walk;
  walk.nodes.push_back(start);
  continue_walk(graph, path, 0, walk);
  return walk;
}

WalkResult guided_walk_via(const HeteroGraph& graph, NodeId start, NodeId first_hop, const MetaPathSchema& path) {
  check_start(graph, start, path);
  const EdgeId e = graph.find_edge(start, first_hop);
  if (e == HeteroGraph::npos || graph.edge(e).type != path.edge_types()[0] ||
      graph.node_type(first_hop) != path.node_types()[1])
    throw ParameterError("first hop does not conform to the meta-path");
  WalkResult walk;
  walk.nodes = {start, first_hop};
  walk.edges = {e};
  continue_walk(graph, path, 1, walk);
  return walk;
}

}  // namespace hetsample
