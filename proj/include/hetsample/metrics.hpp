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

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "hetsample/graph.hpp"
#include "hetsample/metapath.hpp"
#include "hetsample/sample_result.hpp"

namespace hetsample {

inline constexpr double kDefaultSmoothing = 1e-9;

/// KL(p || q) in nats with q smoothed as (c_i + eps) / (sum c + m eps); terms
/// with p_i = 0 contribute zero. Throws DomainError if either side is empty.
double kl_divergence(std::span<const std::size_t> original_counts, std::span<const std::size_t> sample_counts,
                     double epsilon = kDefaultSmoothing);

/// Node type distribution similarity: KL of the original's node-type
/// distribution against the sample's.
double ntds(const HeteroGraph& original, const SampleResult& sample, double epsilon = kDefaultSmoothing);

/// Edge type distribution similarity over the sample's edge set.
double etds(const HeteroGraph& original, const SampleResult& sample, double epsilon = kDefaultSmoothing);

struct MprEntry {
  std::string schema;
  std::uint64_t original = 0;
  std::uint64_t preserved = 0;
  std::optional<double> ratio;  // unset when the original has no instance

  bool operator==(const MprEntry&) const = default;
};

struct MprResult {
  std::vector<MprEntry> per_schema;
  std::optional<double> macro;   // mean over defined schemas
  std::optional<double> pooled;  // sum preserved / sum original

  bool operator==(const MprResult&) const = default;
};

/// Meta-path preservation: instances surviving in the subgraph induced by the
/// sample over instances in the original, per schema. Throws ConfigError when
/// `paths` is empty.
MprResult mpr(const HeteroGraph& original, const SampleResult& sample, std::span<const MetaPathSchema> paths);

/// Symmetric |V| x |V| reconstruction, listed sparsely. Entries absent from
/// the list are zero; (i, j) and (j, i) are separate entries.
struct SparseEntry {
  NodeId row;
  NodeId col;
  double value;
};
using Reconstructor = std::function<std::vector<SparseEntry>(const HeteroGraph&, const SampleResult&)>;

/// The sample's edges at their original indices, zeros elsewhere.
std::vector<SparseEntry> induced_reconstruction(const HeteroGraph& original, const SampleResult& sample);

/// ||A_original - A_reconstructed||_F / ||A_original||_F. Throws DomainError
/// when the original has no edges, ParameterError on a negative or
/// out-of-range entry.
double gre(const HeteroGraph& original, const SampleResult& sample, const Reconstructor& reconstructor);

/// GRE with induced_reconstruction, via its closed form sqrt(1 - |E_S| / |E|).
double gre(const HeteroGraph& original, const SampleResult& sample);

/// Wall-clock milliseconds of one call, on the steady clock.
template <typename F>
double time_sampling(F&& call) {
  const auto begin = std::chrono::steady_clock::now();
  std::forward<F>(call)();
  const auto end = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(end - begin).count();
}

struct MetricsReport {
  std::optional<double> ntds;
  std::optional<double> etds;
  MprResult mpr;
  std::optional<double> gre;
  std::optional<double> runtime_ms;
  double sampling_ratio = 0;
  std::size_t sample_nodes = 0;
  std::size_t sample_edges = 0;
  std::vector<std::string> notes;  // why a metric is undefined

  bool operator==(const MetricsReport&) const = default;
};

/// All metrics; a metric that cannot be computed is left unset with a note.
MetricsReport evaluate(const HeteroGraph& original, const SampleResult& sample, std::span<const MetaPathSchema> paths,
                       double epsilon = kDefaultSmoothing, std::optional<double> runtime_ms = std::nullopt);

/// Rounds to 9 significant digits.
double round_sig9(double x);

/// Fixed key order, 9 significant digits, null for undefined metrics.
nlohmann::ordered_json to_json(const MetricsReport& report);
MetricsReport report_from_json(const nlohmann::ordered_json& doc);

/// "method,ratio,seed,ntds,etds,mpr_macro,gre,runtime_ms"; undefined values
/// render as NA.
std::string csv_header();
std::string csv_row(const std::string& method, double ratio, std::uint64_t seed, const MetricsReport& report);

}  // namespace hetsample
