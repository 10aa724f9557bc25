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
#include <optional>
#include <string_view>
#include <vector>

#include "hetsample/graph.hpp"
#include "hetsample/sample_result.hpp"

namespace hetsample {

struct BaselineParams {
  double ratio = 0;
  std::uint64_t seed = 0;
  double damping = 0.85;            // RPN
  std::size_t pagerank_iterations = 50;
  double restart = 0.15;            // RW: probability of jumping to a uniform node
  double burn = 0.4;                // FF forward-burning probability
  std::optional<NodeId> start;      // RW start / first FF ignition; uniform when unset

  void validate() const;
};

/// Induced random vertex: ceil(ratio |V|) nodes uniformly without replacement.
SampleResult sample_irv(const HeteroGraph& graph, const BaselineParams& params);

/// Random degree node: nodes drawn without replacement proportional to
/// degree; isolated nodes only fill the budget after every other node.
SampleResult sample_rdn(const HeteroGraph& graph, const BaselineParams& params);

/// Power-iteration PageRank with uniform teleport; dangling mass is spread
/// uniformly so scores sum to one after every iteration.
std::vector<double> pagerank(const HeteroGraph& graph, double damping, std::size_t iterations);

/// Random PageRank node: nodes drawn without replacement proportional to
/// PageRank.
SampleResult sample_rpn(const HeteroGraph& graph, const BaselineParams& params);

/// Random edge: edges uniformly without replacement; both endpoints join the
/// sample until it holds ceil(ratio |V|) nodes (the last edge may overshoot by
/// one) or edges run out. Isolated nodes are never sampled.
SampleResult sample_re(const HeteroGraph& graph, const BaselineParams& params);

/// Random walk with uniform restarts. A walk at a node without neighbors, or
/// one that has found no new node for |V| + 100 steps, also restarts.
SampleResult sample_rw(const HeteroGraph& graph, const BaselineParams& params);

/// Forest fire: each burning node burns a geometric number (mean
/// burn / (1 - burn)) of unburned neighbors chosen uniformly; a dead fire
/// re-ignites at a uniform unburned node.
SampleResult sample_ff(const HeteroGraph& graph, const BaselineParams& params);

enum class BaselineMethod { irv, rdn, rpn, re, rw, ff };

std::optional<BaselineMethod> parse_baseline(std::string_view name);
SampleResult run_baseline(BaselineMethod method, const HeteroGraph& graph, const BaselineParams& params);

}  // namespace hetsample
