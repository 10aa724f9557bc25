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

#include "hetsample/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

#include "hetsample/error.hpp"
#include "hetsample/random.hpp"

namespace hetsample {

void BaselineParams::validate() const {
  if (!(ratio > 0 && ratio <= 1)) throw ConfigError("ratio: must lie in (0, 1]");
  if (!(damping >= 0 && damping < 1)) throw ConfigError("baseline.damping: must lie in [0, 1)");
  if (!(restart >= 0 && restart <= 1)) throw ConfigError("baseline.restart: must lie in [0, 1]");
  if (!(burn > 0 && burn < 1)) throw ConfigError("baseline.burn: must lie in (0, 1)");
}

namespace {

SampleAccumulator start(const HeteroGraph& graph, const BaselineParams& params) {
  params.validate();
  if (params.start && *params.start >= graph.num_nodes())
    throw LookupError("unknown start node " + std::to_string(*params.start));
  return SampleAccumulator(graph, sample_budget(params.ratio, graph.num_nodes()));
}

SampleResult finish(SampleAccumulator&& acc) {
  PhaseStats stats;
  stats.baseline = acc.size();
  return std::move(acc).finish(stats);
}

SampleResult weighted_nodes(const HeteroGraph& graph, const BaselineParams& params, const std::vector<double>& weights) {
  auto acc = start(graph, params);
  Rng rng(params.seed);
  for (auto i : weighted_sample_without_replacement(weights, acc.budget(), rng))
    acc.add(static_cast<NodeId>(i), Provenance::baseline);
  return finish(std::move(acc));
}

NodeId uniform_node(const HeteroGraph& graph, Rng& rng) {
  return static_cast<NodeId>(rng.uniform_index(graph.num_nodes()));
}

}  // namespace

SampleResult sample_irv(const HeteroGraph& graph, const BaselineParams& params) {
  auto acc = start(graph, params);
  Rng rng(params.seed);
  for (auto i : sample_without_replacement(graph.num_nodes(), acc.budget(), rng))
    acc.add(static_cast<NodeId>(i), Provenance::baseline);
  return finish(std::move(acc));
}

SampleResult sample_rdn(const HeteroGraph& graph, const BaselineParams& params) {
  std::vector<double> weights(graph.num_nodes());
  for (NodeId v = 0; v < graph.num_nodes(); ++v) weights[v] = static_cast<double>(graph.degree(v));
  return weighted_nodes(graph, params, weights);
}

std::vector<double> pagerank(const HeteroGraph& graph, double damping, std::size_t iterations) {
  const std::size_t n = graph.num_nodes();
  if (n == 0) return {};
  const double uniform = 1.0 / static_cast<double>(n);
  std::vector<double> rank(n, uniform);
  std::vector<double> next(n);
  for (std::size_t it = 0; it < iterations; ++it) {
    double dangling = 0;
    for (NodeId v = 0; v < n; ++v)
      if (graph.degree(v) == 0) dangling += rank[v];
    const double base = (1.0 - damping) * uniform + damping * dangling * uniform;
    std::fill(next.begin(), next.end(), base);
    for (NodeId v = 0; v < n; ++v) {
      const auto deg = graph.degree(v);
      if (deg == 0) continue;
      const double share = damping * rank[v] / static_cast<double>(deg);
      for (const auto& nb : graph.neighbors(v)) next[nb.node] += share;
    }
    rank.swap(next);
  }
  return rank;
}

SampleResult sample_rpn(const HeteroGraph& graph, const BaselineParams& params) {
  params.validate();
  return weighted_nodes(graph, params, pagerank(graph, params.damping, params.pagerank_iterations));
}

SampleResult sample_re(const HeteroGraph& graph, const BaselineParams& params) {
  auto acc = start(graph, params);
  Rng rng(params.seed);
  // The endpoint rule may admit one node past the budget.
  SampleAccumulator out(graph, acc.budget() + 1);
  const auto edges = graph.edges();
  std::vector<EdgeId> order(edges.size());
  std::iota(order.begin(), order.end(), EdgeId{0});
  for (std::size_t i = 0; i < order.size() && out.size() < acc.budget(); ++i) {
    const auto j = i + static_cast<std::size_t>(rng.uniform_index(order.size() - i));
    std::swap(order[i], order[j]);
    const auto& e = edges[order[i]];
    out.add(e.src, Provenance::baseline);
    out.add(e.dst, Provenance::baseline);
  }
  PhaseStats stats;
  stats.baseline = out.size();
  stats.budget_reached = out.size() >= acc.budget();
  auto result = std::move(out).finish(stats);
  result.stats.budget_reached = stats.budget_reached;
  return result;
}

SampleResult sample_rw(const HeteroGraph& graph, const BaselineParams& params) {
  auto acc = start(graph, params);
  if (acc.full()) return finish(std::move(acc));
  Rng rng(params.seed);
  const std::size_t stall_limit = graph.num_nodes() + 100;
  NodeId current = params.start ? *params.start : uniform_node(graph, rng);
  acc.add(current, Provenance::baseline);
  std::size_t since_new = 0;
  while (!acc.full()) {
    const auto nbrs = graph.neighbors(current);
    if (nbrs.empty() || since_new > stall_limit || rng.bernoulli(params.restart)) {
      current = uniform_node(graph, rng);
      since_new = 0;
    } else {
      current = nbrs[rng.uniform_index(nbrs.size())].node;
    }
    if (acc.add(current, Provenance::baseline))
      since_new = 0;
    else
      ++since_new;
  }
  return finish(std::move(acc));
}

SampleResult sample_ff(const HeteroGraph& graph, const BaselineParams& params) {
  auto acc = start(graph, params);
  Rng rng(params.seed);
  // Unburned nodes for uniform re-ignition: a shuffled pool consumed lazily.
  std::vector<NodeId> pool(graph.num_nodes());
  std::iota(pool.begin(), pool.end(), NodeId{0});
  std::size_t pool_cursor = 0;
  auto next_unburned = [&]() -> NodeId {
    while (pool_cursor < pool.size()) {
      const auto j = pool_cursor + static_cast<std::size_t>(rng.uniform_index(pool.size() - pool_cursor));
      std::swap(pool[pool_cursor], pool[j]);
      const NodeId v = pool[pool_cursor++];
      if (!acc.contains(v)) return v;
    }
    return GraphBuilder::npos;
  };

  std::deque<NodeId> burning;
  bool first = true;
  std::vector<NodeId> fresh;
  while (!acc.full()) {
    if (burning.empty()) {
      NodeId ignite = first && params.start ? *params.start : next_unburned();
      first = false;
      if (ignite == GraphBuilder::npos) break;
      acc.add(ignite, Provenance::baseline);
      burning.push_back(ignite);
      continue;
    }
    const NodeId v = burning.front();
    burning.pop_front();
    std::size_t spread = 0;
    while (rng.bernoulli(params.burn)) ++spread;
    fresh.clear();
    for (const auto& nb : graph.neighbors(v))
      if (!acc.contains(nb.node)) fresh.push_back(nb.node);
    for (auto i : sample_without_replacement(fresh.size(), spread, rng)) {
      if (!acc.add(fresh[i], Provenance::baseline)) break;
      burning.push_back(fresh[i]);
    }
  }
  return finish(std::move(acc));
}

std::optional<BaselineMethod> parse_baseline(std::string_view name) {
  if (name == "irv") return BaselineMethod::irv;
  if (name == "rdn") return BaselineMethod::rdn;
  if (name == "rpn") return BaselineMethod::rpn;
  if (name == "re") return BaselineMethod::re;
  if (name == "rw") return BaselineMethod::rw;
  if (name == "ff") return BaselineMethod::ff;
  return std::nullopt;
}

SampleResult run_baseline(BaselineMethod method, const HeteroGraph& graph, const BaselineParams& params) {
  switch (method) {
    case BaselineMethod::irv: return sample_irv(graph, params);
    case BaselineMethod::rdn: return sample_rdn(graph, params);
    case BaselineMethod::rpn: return sample_rpn(graph, params);
    case BaselineMethod::re: return sample_re(graph, params);
    case BaselineMethod::rw: return sample_rw(graph, params);
    case BaselineMethod::ff: return sample_ff(graph, params);
  }
  throw ConfigError("unknown baseline method");
}

}  // namespace hetsample
