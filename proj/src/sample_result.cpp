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

#include "hetsample/sample_result.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hetsample/error.hpp"

namespace hetsample {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::leader: return "leader";
    case Provenance::bne: return "bne";
    case Provenance::mgne: return "mgne";
    case Provenance::walk: return "walk";
    case Provenance::seed_fallback: return "seed-fallback";
    case Provenance::baseline: return "baseline";
    case Provenance::fill: return "fill";
  }
  return "unknown";
}

Provenance provenance_from_string(std::string_view s) {
  for (auto p : {Provenance::leader, Provenance::bne, Provenance::mgne, Provenance::walk, Provenance::seed_fallback,
                 Provenance::baseline, Provenance::fill})
    if (to_string(p) == s) return p;
  throw SchemaError("unknown provenance tag '" + std::string(s) + "'");
}

std::size_t sample_budget(double ratio, std::size_t n) {
  if (!(ratio > 0 && ratio <= 1)) throw ParameterError("sampling ratio must lie in (0, 1]");
  const double exact = ratio * static_cast<double>(n);
  const double nearest = std::round(exact);
  if (std::abs(exact - nearest) <= 1e-9 * std::max(1.0, exact)) return static_cast<std::size_t>(nearest);
  return static_cast<std::size_t>(std::ceil(exact));
}

SampleAccumulator::SampleAccumulator(const HeteroGraph& graph, std::size_t budget)
    : graph_(&graph), budget_(budget), mask_(graph.num_nodes(), false) {}

bool SampleAccumulator::add(NodeId v, Provenance why) {
  if (mask_[v] || full()) return false;
  mask_[v] = true;
  order_.push_back(v);
  why_.push_back(why);
  return true;
}

SampleResult SampleAccumulator::finish(PhaseStats stats) && {
  SampleResult out;
  std::vector<std::size_t> idx(order_.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return order_[a] < order_[b]; });
  out.nodes.reserve(idx.size());
  out.provenance.reserve(idx.size());
  for (auto i : idx) {
    out.nodes.push_back(order_[i]);
    out.provenance.push_back(why_[i]);
  }
  out.edges = induced_edges(*graph_, mask_);
  stats.budget_reached = full();
  out.stats = stats;
  out.achieved_ratio =
      graph_->num_nodes() ? static_cast<double>(out.nodes.size()) / static_cast<double>(graph_->num_nodes()) : 0.0;
  return out;
}

SampleResult make_sample(const HeteroGraph& graph, std::vector<NodeId> nodes, Provenance why) {
  SampleAccumulator acc(graph, graph.num_nodes());
  for (NodeId v : nodes) {
    if (v >= graph.num_nodes()) throw LookupError("unknown node id " + std::to_string(v));
    acc.add(v, why);
  }
  PhaseStats stats;
  if (why == Provenance::baseline) stats.baseline = acc.size();
  return std::move(acc).finish(stats);
}

}  // namespace hetsample
