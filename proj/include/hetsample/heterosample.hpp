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
#include <span>
#include <vector>

#include "hetsample/graph.hpp"
#include "hetsample/importance.hpp"
#include "hetsample/random.hpp"
#include "hetsample/sample_result.hpp"

namespace hetsample {

enum class SamplingMode { deterministic, stochastic };

struct Ablation {
  bool disable_ts = false;    // stratified random seeds instead of top-leaders
  bool disable_bne = false;
  bool disable_mgne = false;
  bool disable_mp = false;    // meta-path based global sampling

  bool operator==(const Ablation&) const = default;
};

struct SamplerParams {
  /// Top-leaders per node type. Unset: max(1, ceil(0.01 * |type|)).
  std::optional<std::size_t> k;
  std::size_t delta = 10;   // peripheral nodes per leader in BNE
  std::size_t max_len = 4;  // maximum schema length for MGNE
  std::size_t k_mp = 3;     // schemas kept per leader (MGNE and global phase)
  std::size_t walks = 2;    // guided walks per (leader, selected schema)
  double ratio = 0;         // target |V_S| / |V|, required
  std::uint64_t seed = 0;
  SamplingMode mode = SamplingMode::deterministic;
  Ablation ablation;

  void validate() const;
  std::size_t leaders_for(std::size_t type_cardinality) const;
};

/// alpha[type(v)] * deg(v).
double node_importance(const HeteroGraph& graph, std::span<const double> alpha, NodeId v);

/// Per node type, the k nodes of highest importance (ties to the lower id),
/// in rank order. Types with fewer than k nodes return all of them.
std::vector<std::vector<NodeId>> select_top_leaders(const HeteroGraph& graph, std::span<const double> alpha,
                                                    std::size_t k);
std::vector<std::vector<NodeId>> select_top_leaders(const HeteroGraph& graph, std::span<const double> alpha,
                                                    std::span<const std::size_t> k_per_type);

/// BNE quota per neighbor node type: floor(|N_i(v)| * delta / deg(v)).
std::vector<std::size_t> bne_quotas(const HeteroGraph& graph, NodeId leader, std::size_t delta);

/// Peripheral nodes BNE adds around `leader`. For each neighbor type i, takes
/// min(quota_i, |N_i(v) \ S|) candidates not in the sample: by (degree desc,
/// id asc) in deterministic mode, uniformly without replacement in stochastic
/// mode. Neighbor types whose edge weight w(type(v), i) is zero contribute
/// nothing. Output is grouped by ascending neighbor type.
std::vector<NodeId> bne_expand(const HeteroGraph& graph, const std::vector<bool>& in_sample, NodeId leader,
                               const EdgeTypeWeights& weights, std::size_t delta, SamplingMode mode, Rng& rng);

/// The k_mp schemas of highest importance among all schemas of length <= l
/// starting at `type`; ties go to the shorter, then lexicographically smaller,
/// schema.
std::vector<MetaPathSchema> top_schemas(const SchemaGraph& schema, NodeTypeId type, const EdgeTypeWeights& weights,
                                        std::size_t max_len, std::size_t k_mp);

struct ExpansionResult {
  std::vector<NodeId> nodes;   // in walk order, excluding nodes already sampled
  std::vector<EdgeId> edges;   // edges traversed by the walks
  std::size_t truncated_walks = 0;
};

/// MGNE: guided walks from the leader along its top_schemas; returns the walk
/// nodes not yet in the sample.
ExpansionResult mgne_expand(const HeteroGraph& graph, const std::vector<bool>& in_sample, NodeId leader,
                            const EdgeTypeWeights& weights, std::size_t max_len, std::size_t k_mp);

/// Indices into config.paths of the k_mp configured schemas starting at
/// `type`, by beta-weighted importance (ties to the lower index).
std::vector<std::size_t> top_configured_paths(const ImportanceConfig& config, NodeTypeId type, std::size_t k_mp);

/// Global meta-path sampling for one leader: for each selected schema, walk 1
/// starts at the leader and follows the guided rule; walk j (2..r) takes the
/// leader's j-th ranked conforming first hop and continues guided. Starts
/// beyond the candidate list are skipped.
ExpansionResult global_walks(const HeteroGraph& graph, const std::vector<bool>& in_sample, NodeId leader,
                             const ImportanceConfig& config, std::size_t k_mp, std::size_t walks);

/// global_walks over every leader, ascending id, without a budget.
ExpansionResult metapath_global_sample(const HeteroGraph& graph, const std::vector<bool>& in_sample,
                                       std::span<const NodeId> leaders, const ImportanceConfig& config,
                                       std::size_t k_mp, std::size_t walks);

/// The full sampler: top-leader selection, BNE and MGNE per leader, then
/// meta-path based global sampling, stopping as soon as the node budget
/// ceil(ratio * |V|) is reached. E_S is the induced edge set.
SampleResult sample(const HeteroGraph& graph, const ImportanceConfig& config, const SamplerParams& params);

}  // namespace hetsample
