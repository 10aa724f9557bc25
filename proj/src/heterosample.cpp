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

#include "hetsample/heterosample.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hetsample/error.hpp"

namespace hetsample {

namespace {

// Stream tags for Rng::split.
constexpr std::uint64_t kStreamFallback = 1;
constexpr std::uint64_t kStreamBne = 2;

bool higher_degree(const HeteroGraph& graph, NodeId a, NodeId b) {
  const auto da = graph.degree(a);
  const auto db = graph.degree(b);
  return da != db ? da > db : a < b;
}

void append_walk(const WalkResult& walk, const std::vector<bool>& in_sample, std::vector<bool>& seen,
                 ExpansionResult& out) {
  for (NodeId v : walk.nodes)
    if (!in_sample[v] && !seen[v]) {
      seen[v] = true;
      out.nodes.push_back(v);
    }
  out.edges.insert(out.edges.end(), walk.edges.begin(), walk.edges.end());
  if (walk.truncated) ++out.truncated_walks;
}

}  // namespace

void SamplerParams::validate() const {
  if (k && *k < 1) throw ConfigError("k: must be at least 1");
  if (max_len < 1) throw ConfigError("max_len: must be at least 1");
  if (k_mp < 1) throw ConfigError("k_mp: must be at least 1");
  if (walks < 1) throw ConfigError("walks: must be at least 1");
  if (!(ratio > 0 && ratio <= 1)) throw ConfigError("ratio: must lie in (0, 1]");
}

std::size_t SamplerParams::leaders_for(std::size_t type_cardinality) const {
  const std::size_t wanted =
      k ? *k : std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(0.01 * static_cast<double>(type_cardinality))));
  return std::min(wanted, type_cardinality);
}

double node_importance(const HeteroGraph& graph, std::span<const double> alpha, NodeId v) {
  const auto t = graph.node_type(v);
  if (t >= alpha.size()) throw ConfigError("alpha: no weight for node type " + std::to_string(t));
  return alpha[t] * static_cast<double>(graph.degree(v));
}

std::vector<std::vector<NodeId>> select_top_leaders(const HeteroGraph& graph, std::span<const double> alpha,
                                                    std::span<const std::size_t> k_per_type) {
  const std::size_t m = graph.schema().num_node_types();
  if (k_per_type.size() != m) throw ParameterError("leader counts must be given per node type");
  std::vector<std::vector<NodeId>> leaders(m);
  for (NodeTypeId t = 0; t < m; ++t) {
    auto members = graph.nodes_of_type(t);
    std::vector<std::pair<double, NodeId>> scored;
    scored.reserve(members.size());
    for (NodeId v : members) scored.emplace_back(node_importance(graph, alpha, v), v);
    const auto take = std::min(k_per_type[t], scored.size());
    std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(take), scored.end(),
                      [](const auto& a, const auto& b) { return a.first != b.first ? a.first > b.first : a.second < b.second; });
    for (std::size_t i = 0; i < take; ++i) leaders[t].push_back(scored[i].second);
  }
  return leaders;
}

std::vector<std::vector<NodeId>> select_top_leaders(const HeteroGraph& graph, std::span<const double> alpha,
                                                    std::size_t k) {
  if (k < 1) throw ParameterError("k must be at least 1");
  std::vector<std::size_t> ks(graph.schema().num_node_types(), k);
  return select_top_leaders(graph, alpha, ks);
}

std::vector<std::size_t> bne_quotas(const HeteroGraph& graph, NodeId leader, std::size_t delta) {
  const std::size_t m = graph.schema().num_node_types();
  std::vector<std::size_t> quotas(m, 0);
  const std::size_t total = graph.degree(leader);
  if (total == 0) return quotas;
  for (NodeTypeId t = 0; t < m; ++t) quotas[t] = graph.typed_neighbors(leader, t).size() * delta / total;
  return quotas;
}

std::vector<NodeId> bne_expand(const HeteroGraph& graph, const std::vector<bool>& in_sample, NodeId leader,
                               const EdgeTypeWeights& weights, std::size_t delta, SamplingMode mode, Rng& rng) {
  std::vector<NodeId> out;
  const auto quotas = bne_quotas(graph, leader, delta);
  const NodeTypeId own = graph.node_type(leader);
  for (NodeTypeId t = 0; t < quotas.size(); ++t) {
    if (quotas[t] == 0) continue;
    if (auto w = weights.get(own, t); w && *w == 0) continue;
    std::vector<NodeId> candidates;
    for (const auto& nb : graph.typed_neighbors(leader, t))
      if (!in_sample[nb.node]) candidates.push_back(nb.node);
    const auto take = std::min(quotas[t], candidates.size());
    if (mode == SamplingMode::deterministic) {
      std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(take), candidates.end(),
                        [&](NodeId a, NodeId b) { return higher_degree(graph, a, b); });
      out.insert(out.end(), candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(take));
    } else {
      for (auto i : sample_without_replacement(candidates.size(), take, rng)) out.push_back(candidates[i]);
    }
  }
  return out;
}

std::vector<MetaPathSchema> top_schemas(const SchemaGraph& schema, NodeTypeId type, const EdgeTypeWeights& weights,
                                        std::size_t max_len, std::size_t k_mp) {
  auto all = enumerate_schemas(schema, type, max_len);
  std::vector<std::pair<double, std::size_t>> scored;
  scored.reserve(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) scored.emplace_back(schema_importance(all[i], weights), i);
  // Enumeration order is already (length, lexicographic), so a stable sort on
  // score alone applies the tie rule.
  std::stable_sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<MetaPathSchema> out;
  for (std::size_t i = 0; i < std::min(k_mp, scored.size()); ++i) out.push_back(all[scored[i].second]);
  return out;
}

namespace {

ExpansionResult walk_schemas(const HeteroGraph& graph, const std::vector<bool>& in_sample, NodeId leader,
                             std::span<const MetaPathSchema> schemas) {
  ExpansionResult out;
  std::vector<bool> seen(graph.num_nodes(), false);
  for (const auto& path : schemas) append_walk(guided_walk(graph, leader, path), in_sample, seen, out);
  return out;
}

}  // namespace

ExpansionResult mgne_expand(const HeteroGraph& graph, const std::vector<bool>& in_sample, NodeId leader,
                            const EdgeTypeWeights& weights, std::size_t max_len, std::size_t k_mp) {
  const auto schemas = top_schemas(graph.schema(), graph.node_type(leader), weights, max_len, k_mp);
  return walk_schemas(graph, in_sample, leader, schemas);
}

std::vector<std::size_t> top_configured_paths(const ImportanceConfig& config, NodeTypeId type, std::size_t k_mp) {
  std::vector<std::pair<double, std::size_t>> scored;
  for (std::size_t i = 0; i < config.paths.size(); ++i)
    if (config.paths[i].start_type() == type)
      scored.emplace_back(weighted_schema_importance(i, config.beta, config.paths, config.weights), i);
  std::stable_sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < std::min(k_mp, scored.size()); ++i) out.push_back(scored[i].second);
  return out;
}

namespace {

void global_walks_into(const HeteroGraph& graph, const std::vector<bool>& in_sample, NodeId leader,
                       const ImportanceConfig& config, std::span<const std::size_t> selected, std::size_t walks,
                       std::vector<bool>& seen, ExpansionResult& out) {
  for (auto index : selected) {
    const auto& path = config.paths[index];
    append_walk(guided_walk(graph, leader, path), in_sample, seen, out);
    if (walks < 2) continue;
    const auto starts = ranked_step_candidates(graph, leader, path, 0);
    for (std::size_t j = 1; j < walks && j < starts.size(); ++j)
      append_walk(guided_walk_via(graph, leader, starts[j], path), in_sample, seen, out);
  }
}

}  // namespace

ExpansionResult global_walks(const HeteroGraph& graph, const std::vector<bool>& in_sample, NodeId leader,
                             const ImportanceConfig& config, std::size_t k_mp, std::size_t walks) {
  ExpansionResult out;
  std::vector<bool> seen(graph.num_nodes(), false);
  const auto selected = top_configured_paths(config, graph.node_type(leader), k_mp);
  global_walks_into(graph, in_sample, leader, config, selected, walks, seen, out);
  return out;
}

ExpansionResult metapath_global_sample(const HeteroGraph& graph, const std::vector<bool>& in_sample,
                                       std::span<const NodeId> leaders, const ImportanceConfig& config,
                                       std::size_t k_mp, std::size_t walks) {
  for (const auto& p : config.paths) p.validate(graph.schema());
  std::vector<NodeId> order(leaders.begin(), leaders.end());
  std::sort(order.begin(), order.end());
  ExpansionResult out;
  std::vector<bool> seen(graph.num_nodes(), false);
  for (NodeId leader : order) {
    const auto selected = top_configured_paths(config, graph.node_type(leader), k_mp);
    global_walks_into(graph, in_sample, leader, config, selected, walks, seen, out);
  }
  return out;
}

SampleResult sample(const HeteroGraph& graph, const ImportanceConfig& config, const SamplerParams& params) {
  params.validate();
  config.validate(graph.schema());
  const auto& schema = graph.schema();
  const std::size_t m = schema.num_node_types();
  const Rng rng(params.seed);
  const auto& ablation = params.ablation;

  SampleAccumulator acc(graph, sample_budget(params.ratio, graph.num_nodes()));
  PhaseStats stats;

  // Step 1: top-leaders, or stratified random seeds when ablated.
  std::vector<std::size_t> k_per_type(m);
  for (NodeTypeId t = 0; t < m; ++t) k_per_type[t] = params.leaders_for(graph.nodes_of_type(t).size());
  std::vector<NodeId> leaders;
  if (!ablation.disable_ts) {
    for (const auto& list : select_top_leaders(graph, config.alpha, k_per_type))
      leaders.insert(leaders.end(), list.begin(), list.end());
  } else {
    Rng fallback = rng.split(kStreamFallback);
    for (NodeTypeId t = 0; t < m; ++t) {
      auto members = graph.nodes_of_type(t);
      for (auto i : sample_without_replacement(members.size(), k_per_type[t], fallback)) leaders.push_back(members[i]);
    }
  }
  // Leaders are admitted in (type, id) order; whatever exceeds the budget is
  // dropped and reported.
  std::sort(leaders.begin(), leaders.end(), [&](NodeId a, NodeId b) {
    const auto ta = graph.node_type(a);
    const auto tb = graph.node_type(b);
    return ta != tb ? ta < tb : a < b;
  });
  if (leaders.size() > acc.budget()) {
    stats.leaders_dropped = leaders.size() - acc.budget();
    leaders.resize(acc.budget());
  }
  const auto leader_tag = ablation.disable_ts ? Provenance::seed_fallback : Provenance::leader;
  for (NodeId v : leaders) acc.add(v, leader_tag);
  (ablation.disable_ts ? stats.seed_fallback : stats.leaders) = leaders.size();
  std::sort(leaders.begin(), leaders.end());

  auto add_all = [&](const std::vector<NodeId>& nodes, Provenance why, std::size_t& counter) {
    for (NodeId v : nodes) {
      if (acc.full()) return false;
      if (acc.add(v, why)) ++counter;
    }
    return !acc.full();
  };

  // Step 2: BNE then MGNE around each leader.
  std::vector<std::vector<MetaPathSchema>> schemas_by_type(m);
  std::vector<bool> schemas_ready(m, false);
  bool open = !acc.full();
  if (!ablation.disable_bne || !ablation.disable_mgne) {
    const Rng bne_rng = rng.split(kStreamBne);
    for (NodeId leader : leaders) {
      if (!open) break;
      if (!ablation.disable_bne) {
        Rng local = bne_rng.split(leader);
        open = add_all(bne_expand(graph, acc.mask(), leader, config.weights, params.delta, params.mode, local),
                       Provenance::bne, stats.bne);
        if (!open) break;
      }
      if (!ablation.disable_mgne) {
        const auto t = graph.node_type(leader);
        if (!schemas_ready[t]) {
          schemas_by_type[t] = top_schemas(schema, t, config.weights, params.max_len, params.k_mp);
          schemas_ready[t] = true;
        }
        auto expansion = walk_schemas(graph, acc.mask(), leader, schemas_by_type[t]);
        stats.truncated_walks += expansion.truncated_walks;
        open = add_all(expansion.nodes, Provenance::mgne, stats.mgne);
      }
    }
  }

  // Step 3: meta-path based global sampling.
  if (open && !ablation.disable_mp && !config.paths.empty()) {
    std::vector<std::vector<std::size_t>> selected(m);
    for (NodeTypeId t = 0; t < m; ++t) selected[t] = top_configured_paths(config, t, params.k_mp);
    for (NodeId leader : leaders) {
      if (!open) break;
      ExpansionResult expansion;
      std::vector<bool> seen(graph.num_nodes(), false);
      global_walks_into(graph, acc.mask(), leader, config, selected[graph.node_type(leader)], params.walks, seen,
                        expansion);
      stats.truncated_walks += expansion.truncated_walks;
      open = add_all(expansion.nodes, Provenance::walk, stats.walk);
    }
  }

  // A budget of all of V means the full graph, whatever the phases reached.
  if (acc.budget() >= graph.num_nodes())
    for (NodeId v = 0; v < graph.num_nodes(); ++v)
      if (acc.add(v, Provenance::fill)) ++stats.fill;

  return std::move(acc).finish(stats);
}

}  // namespace hetsample
