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

#include "hetsample/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "hetsample/error.hpp"
#include "hetsample/random.hpp"

namespace hetsample {

namespace {

std::uint64_t pair_key(NodeId u, NodeId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

// Cumulative attachment weights over a seeded permutation of `members`.
struct WeightedSide {
  std::vector<NodeId> nodes;
  std::vector<double> weight;
  std::vector<double> cumulative;

  WeightedSide(std::span<const NodeId> members, double skew, Rng& rng) {
    auto order = sample_without_replacement(members.size(), members.size(), rng);
    nodes.reserve(members.size());
    weight.reserve(members.size());
    cumulative.reserve(members.size());
    double total = 0;
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
      nodes.push_back(members[order[rank]]);
      weight.push_back(std::pow(static_cast<double>(rank + 1), -skew));
      total += weight.back();
      cumulative.push_back(total);
    }
  }

  NodeId draw(Rng& rng) const {
    const double u = rng.uniform01() * cumulative.back();
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) --it;
    return nodes[static_cast<std::size_t>(it - cumulative.begin())];
  }
};

constexpr std::size_t kMaxEnumeratedPairs = 50'000'000;

}  // namespace

void SyntheticParams::validate() const {
  if (node_types.empty()) throw ParameterError("synthetic: no node types");
  for (const auto& t : node_types)
    if (t.count == 0) throw ParameterError("synthetic: node type '" + t.label + "' has zero count");
  for (const auto& e : edge_types)
    if (e.count == 0) throw ParameterError("synthetic: edge type '" + e.label + "' has zero count");
  if (!(skew >= 0) || !std::isfinite(skew)) throw ParameterError("synthetic: skew must be >= 0");
  (void)schema();  // endpoint labels must resolve
}

SchemaGraph SyntheticParams::schema() const {
  std::vector<std::string> labels;
  for (const auto& t : node_types) labels.push_back(t.label);
  auto index_of = [&](const std::string& label) -> NodeTypeId {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw ParameterError("synthetic: unknown node type '" + label + "'");
    return static_cast<NodeTypeId>(it - labels.begin());
  };
  std::vector<EdgeTypeDef> defs;
  for (const auto& e : edge_types) defs.push_back({e.label, index_of(e.first), index_of(e.second)});
  return SchemaGraph(std::move(labels), std::move(defs));
}

HeteroGraph generate_synthetic(const SyntheticParams& params) {
  params.validate();
  GraphBuilder builder(params.schema());
  const auto& schema = builder.schema();

  std::vector<std::vector<NodeId>> members(schema.num_node_types());
  for (NodeTypeId t = 0; t < params.node_types.size(); ++t) {
    const auto& spec = params.node_types[t];
    for (std::size_t i = 0; i < spec.count; ++i)
      members[t].push_back(builder.add_node(spec.label + "_" + std::to_string(i), t));
  }

  const Rng root(params.seed);
  std::unordered_set<std::uint64_t> used;
  // Pairs consumed so far per unordered type pair, for capacity checks.
  std::vector<std::size_t> used_by_type_pair(schema.num_node_types() * schema.num_node_types(), 0);

  for (EdgeTypeId r = 0; r < schema.num_edge_types(); ++r) {
    const auto& def = schema.edge_type(r);
    const auto target = params.edge_types[r].count;
    const auto& side_a = members[def.first];
    const auto& side_b = members[def.second];
    const bool same = def.first == def.second;
    const std::size_t capacity =
        same ? side_a.size() * (side_a.size() - 1) / 2 : side_a.size() * side_b.size();
    auto& consumed = used_by_type_pair[std::min(def.first, def.second) * schema.num_node_types() +
                                       std::max(def.first, def.second)];
    if (target > capacity - consumed)
      throw ParameterError("synthetic: edge type '" + def.label + "' requests " + std::to_string(target) +
                           " edges but only " + std::to_string(capacity - consumed) + " node pairs are free");

    Rng rng = root.split(r);
    WeightedSide a(side_a, params.skew, rng);
    WeightedSide b(side_b, params.skew, rng);

    std::size_t placed = 0;
    if (2 * target <= capacity - consumed) {
      const std::size_t max_attempts = 64 * target + 1024;
      for (std::size_t attempt = 0; placed < target && attempt < max_attempts; ++attempt) {
        const NodeId u = a.draw(rng);
        const NodeId v = b.draw(rng);
        if (u == v || !used.insert(pair_key(u, v)).second) continue;
        builder.add_edge(u, v, r);
        ++placed;
      }
    }
    if (placed < target) {
      // Dense request (or rejection sampling stalled on saturated hubs):
      // enumerate the free pairs and draw the remainder by weight.
      if (capacity > kMaxEnumeratedPairs)
        throw ParameterError("synthetic: could not place edges of type '" + def.label + "'");
      std::vector<std::pair<NodeId, NodeId>> free_pairs;
      std::vector<double> weights;
      for (std::size_t i = 0; i < a.nodes.size(); ++i)
        for (std::size_t j = 0; j < b.nodes.size(); ++j) {
          const NodeId u = a.nodes[i];
          const NodeId v = b.nodes[j];
          if (u == v || (same && u > v) || used.contains(pair_key(u, v))) continue;
          free_pairs.emplace_back(u, v);
          weights.push_back(a.weight[i] * b.weight[j]);
        }
      for (auto idx : weighted_sample_without_replacement(weights, target - placed, rng)) {
        const auto [u, v] = free_pairs[idx];
        used.insert(pair_key(u, v));
        builder.add_edge(u, v, r);
      }
    }
    consumed += target;
  }
  return std::move(builder).build();
}

}  // namespace hetsample
