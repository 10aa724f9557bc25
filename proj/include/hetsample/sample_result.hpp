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
#include <string_view>
#include <vector>

#include "hetsample/graph.hpp"

namespace hetsample {

/// Which step first put a node into the sample.
enum class Provenance : std::uint8_t { leader, bne, mgne, walk, seed_fallback, baseline, fill };

std::string_view to_string(Provenance p);
Provenance provenance_from_string(std::string_view s);

struct PhaseStats {
  std::size_t leaders = 0;
  std::size_t seed_fallback = 0;
  std::size_t bne = 0;
  std::size_t mgne = 0;
  std::size_t walk = 0;
  std::size_t baseline = 0;
  std::size_t fill = 0;  // nodes no phase reached, added only when the budget is all of V
  std::size_t truncated_walks = 0;
  std::size_t leaders_dropped = 0;  // leaders cut because the budget was below m*k
  bool budget_reached = false;

  bool operator==(const PhaseStats&) const = default;
};

/// Sampled subgraph S = (V_S, E_S) over the original graph's ids.
struct SampleResult {
  std::vector<NodeId> nodes;            // ascending
  std::vector<EdgeId> edges;            // ascending; induced over nodes
  std::vector<Provenance> provenance;   // parallel to nodes
  PhaseStats stats;
  double achieved_ratio = 0;

  bool operator==(const SampleResult&) const = default;
};

/// ceil(ratio * n) with a guard against ratio * n landing a rounding error
/// above an integer (0.3 * 1000 evaluates to 300.00000000000006).
std::size_t sample_budget(double ratio, std::size_t n);

/// Collects nodes in addition order up to a node budget, then produces the
/// SampleResult with the induced edge set.
class SampleAccumulator {
 public:
  SampleAccumulator(const HeteroGraph& graph, std::size_t budget);

  bool contains(NodeId v) const { return mask_[v]; }
  bool full() const noexcept { return order_.size() >= budget_; }
  std::size_t size() const noexcept { return order_.size(); }
  std::size_t budget() const noexcept { return budget_; }
  const std::vector<bool>& mask() const noexcept { return mask_; }

  /// Adds v unless it is already present or the budget is exhausted.
  /// Returns true when v was newly added.
  bool add(NodeId v, Provenance why);

  SampleResult finish(PhaseStats stats = {}) &&;

 private:
  const HeteroGraph* graph_;
  std::size_t budget_;
  std::vector<bool> mask_;
  std::vector<NodeId> order_;
  std::vector<Provenance> why_;
};

/// SampleResult for an explicit node set with the given provenance tag.
SampleResult make_sample(const HeteroGraph& graph, std::vector<NodeId> nodes, Provenance why);

}  // namespace hetsample
