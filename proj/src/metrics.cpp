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

#include "hetsample/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <unordered_map>

#include "hetsample/error.hpp"

namespace hetsample {

double kl_divergence(std::span<const std::size_t> original_counts, std::span<const std::size_t> sample_counts,
                     double epsilon) {
  if (original_counts.size() != sample_counts.size())
    throw ParameterError("distributions are over different type sets");
  const double p_total = std::accumulate(original_counts.begin(), original_counts.end(), 0.0);
  const double q_total = std::accumulate(sample_counts.begin(), sample_counts.end(), 0.0);
  if (p_total == 0) throw DomainError("original distribution is empty");
  if (q_total == 0) throw DomainError("sample distribution is empty");
  const double m = static_cast<double>(original_counts.size());
  double kl = 0;
  for (std::size_t i = 0; i < original_counts.size(); ++i) {
    if (original_counts[i] == 0) continue;
    const double p = static_cast<double>(original_counts[i]) / p_total;
    const double q = (static_cast<double>(sample_counts[i]) + epsilon) / (q_total + m * epsilon);
    kl += p * std::log(p / q);
  }
  // Rounding can leave a tiny negative value for identical distributions.
  return std::max(kl, 0.0);
}

double ntds(const HeteroGraph& original, const SampleResult& sample, double epsilon) {
  if (sample.nodes.empty()) throw DomainError("NTDS of an empty sample");
  std::vector<std::size_t> counts(original.schema().num_node_types(), 0);
  for (NodeId v : sample.nodes) ++counts[original.node_type(v)];
  return kl_divergence(original.node_type_counts(), counts, epsilon);
}

double etds(const HeteroGraph& original, const SampleResult& sample, double epsilon) {
  if (sample.edges.empty()) throw DomainError("ETDS of a sample without edges");
  std::vector<std::size_t> counts(original.schema().num_edge_types(), 0);
  for (EdgeId e : sample.edges) ++counts[original.edge(e).type];
  return kl_divergence(original.edge_type_counts(), counts, epsilon);
}

MprResult mpr(const HeteroGraph& original, const SampleResult& sample, std::span<const MetaPathSchema> paths) {
  if (paths.empty()) throw ConfigError("MPR needs at least one meta-path");
  MprResult out;
  std::vector<bool> mask(original.num_nodes(), false);
  for (NodeId v : sample.nodes) mask[v] = true;
  double sum_ratio = 0;
  std::size_t defined = 0;
  std::uint64_t total_original = 0;
  std::uint64_t total_preserved = 0;
  for (const auto& path : paths) {
    MprEntry entry;
    entry.schema = path.label(original.schema());
    entry.original = count_instances(original, path);
    entry.preserved = count_instances(original, path, mask);
    if (entry.original > 0) {
      entry.ratio = static_cast<double>(entry.preserved) / static_cast<double>(entry.original);
      sum_ratio += *entry.ratio;
      ++defined;
      total_original += entry.original;
      total_preserved += entry.preserved;
    }
    out.per_schema.push_back(std::move(entry));
  }
  if (defined > 0) {
    out.macro = sum_ratio / static_cast<double>(defined);
    out.pooled = static_cast<double>(total_preserved) / static_cast<double>(total_original);
  }
  return out;
}

std::vector<SparseEntry> induced_reconstruction(const HeteroGraph& original, const SampleResult& sample) {
  std::vector<SparseEntry> out;
  out.reserve(2 * sample.edges.size());
  for (EdgeId id : sample.edges) {
    const auto& e = original.edge(id);
    out.push_back({e.src, e.dst, 1.0});
    out.push_back({e.dst, e.src, 1.0});
  }
  return out;
}

double gre(const HeteroGraph& original, const SampleResult& sample, const Reconstructor& reconstructor) {
  if (original.num_edges() == 0) throw DomainError("GRE of an edgeless graph");
  const auto n = original.num_nodes();
  std::unordered_map<std::uint64_t, double> recon;
  for (const auto& entry : reconstructor(original, sample)) {
    if (entry.row >= n || entry.col >= n) throw ParameterError("reconstruction entry outside the |V| x |V| range");
    if (!(entry.value >= 0) || !std::isfinite(entry.value))
      throw ParameterError("reconstruction entries must be finite and non-negative");
    recon[(static_cast<std::uint64_t>(entry.row) << 32) | entry.col] += entry.value;
  }
  // ||A||_F^2 counts both orientations of every undirected edge.
  const double norm_sq = 2.0 * static_cast<double>(original.num_edges());
  double diff_sq = norm_sq;
  for (const auto& [key, value] : recon) {
    const auto row = static_cast<NodeId>(key >> 32);
    const auto col = static_cast<NodeId>(key & 0xffffffffu);
    const double a = (row != col && original.find_edge(row, col) != HeteroGraph::npos) ? 1.0 : 0.0;
    diff_sq += (a - value) * (a - value) - a * a;
  }
  return std::sqrt(std::max(diff_sq, 0.0) / norm_sq);
}

double gre(const HeteroGraph& original, const SampleResult& sample) {
  if (original.num_edges() == 0) throw DomainError("GRE of an edgeless graph");
  const double kept = static_cast<double>(sample.edges.size()) / static_cast<double>(original.num_edges());
  return std::sqrt(std::max(1.0 - kept, 0.0));
}

MetricsReport evaluate(const HeteroGraph& original, const SampleResult& sample, std::span<const MetaPathSchema> paths,
                       double epsilon, std::optional<double> runtime_ms) {
  MetricsReport report;
  report.sampling_ratio = sample.achieved_ratio;
  report.sample_nodes = sample.nodes.size();
  report.sample_edges = sample.edges.size();
  report.runtime_ms = runtime_ms;
  auto attempt = [&](const char* name, auto&& fn) -> std::optional<double> {
    try {
      return fn();
    } catch (const DomainError& e) {
      report.notes.push_back(std::string(name) + ": " + e.what());
      return std::nullopt;
    }
  };
  report.ntds = attempt("ntds", [&] { return ntds(original, sample, epsilon); });
  report.etds = attempt("etds", [&] { return etds(original, sample, epsilon); });
  if (paths.empty()) {
    report.notes.push_back("mpr: no meta-paths configured");
  } else {
    report.mpr = mpr(original, sample, paths);
    for (const auto& entry : report.mpr.per_schema)
      if (!entry.ratio) report.notes.push_back("mpr: schema " + entry.schema + " has no instance in the original");
  }
  report.gre = attempt("gre", [&] { return gre(original, sample); });
  return report;
}

double round_sig9(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return std::strtod(buf, nullptr);
}

namespace {

nlohmann::ordered_json number_or_null(const std::optional<double>& v) {
  if (!v) return nullptr;
  return round_sig9(*v);
}

std::optional<double> optional_number(const nlohmann::ordered_json& v) {
  if (v.is_null()) return std::nullopt;
  return v.get<double>();
}

std::string csv_number(const std::optional<double>& v) {
  if (!v) return "NA";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", *v);
  return buf;
}

}  // namespace

nlohmann::ordered_json to_json(const MetricsReport& report) {
  nlohmann::ordered_json doc;
  doc["sampling_ratio"] = round_sig9(report.sampling_ratio);
  doc["sample_nodes"] = report.sample_nodes;
  doc["sample_edges"] = report.sample_edges;
  doc["ntds"] = number_or_null(report.ntds);
  doc["etds"] = number_or_null(report.etds);
  auto per_schema = nlohmann::ordered_json::array();
  for (const auto& entry : report.mpr.per_schema) {
    nlohmann::ordered_json e;
    e["schema"] = entry.schema;
    e["original"] = entry.original;
    e["preserved"] = entry.preserved;
    e["ratio"] = number_or_null(entry.ratio);
    per_schema.push_back(std::move(e));
  }
  doc["mpr"]["per_schema"] = std::move(per_schema);
  doc["mpr"]["macro"] = number_or_null(report.mpr.macro);
  doc["mpr"]["pooled"] = number_or_null(report.mpr.pooled);
  doc["gre"] = number_or_null(report.gre);
  doc["one_minus_gre"] = report.gre ? nlohmann::ordered_json(round_sig9(1.0 - round_sig9(*report.gre))) : nullptr;
  doc["runtime_ms"] = number_or_null(report.runtime_ms);
  doc["notes"] = report.notes;
  return doc;
}

MetricsReport report_from_json(const nlohmann::ordered_json& doc) {
  MetricsReport report;
  try {
    report.sampling_ratio = doc.at("sampling_ratio").get<double>();
    report.sample_nodes = doc.at("sample_nodes").get<std::size_t>();
    report.sample_edges = doc.at("sample_edges").get<std::size_t>();
    report.ntds = optional_number(doc.at("ntds"));
    report.etds = optional_number(doc.at("etds"));
    for (const auto& e : doc.at("mpr").at("per_schema")) {
      MprEntry entry;
      entry.schema = e.at("schema").get<std::string>();
      entry.original = e.at("original").get<std::uint64_t>();
      entry.preserved = e.at("preserved").get<std::uint64_t>();
      entry.ratio = optional_number(e.at("ratio"));
      report.mpr.per_schema.push_back(std::move(entry));
    }
    report.mpr.macro = optional_number(doc.at("mpr").at("macro"));
    report.mpr.pooled = optional_number(doc.at("mpr").at("pooled"));
    report.gre = optional_number(doc.at("gre"));
    report.runtime_ms = optional_number(doc.at("runtime_ms"));
    report.notes = doc.at("notes").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("malformed metrics report: ") + e.what());
  }
  return report;
}

std::string csv_header() { return "method,ratio,seed,ntds,etds,mpr_macro,gre,runtime_ms"; }

std::string csv_row(const std::string& method, double ratio, std::uint64_t seed, const MetricsReport& report) {
  return method + "," + csv_number(ratio) + "," + std::to_string(seed) + "," + csv_number(report.ntds) + "," +
         csv_number(report.etds) + "," + csv_number(report.mpr.macro) + "," + csv_number(report.gre) + "," +
         csv_number(report.runtime_ms);
}

}  // namespace hetsample
