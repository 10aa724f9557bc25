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

#include "hetsample/sample_io.hpp"

#include <algorithm>
#include <fstream>

#include "hetsample/error.hpp"
#include "hetsample/graph_io.hpp"

namespace hetsample {

namespace {

nlohmann::ordered_json stats_json(const PhaseStats& s) {
  nlohmann::ordered_json j;
  j["leaders"] = s.leaders;
  j["seed_fallback"] = s.seed_fallback;
  j["bne"] = s.bne;
  j["mgne"] = s.mgne;
  j["walk"] = s.walk;
  j["baseline"] = s.baseline;
  j["fill"] = s.fill;
  j["truncated_walks"] = s.truncated_walks;
  j["leaders_dropped"] = s.leaders_dropped;
  j["budget_reached"] = s.budget_reached;
  return j;
}

PhaseStats stats_from_json(const nlohmann::json& j) {
  PhaseStats s;
  s.leaders = j.at("leaders").get<std::size_t>();
  s.seed_fallback = j.at("seed_fallback").get<std::size_t>();
  s.bne = j.at("bne").get<std::size_t>();
  s.mgne = j.at("mgne").get<std::size_t>();
  s.walk = j.at("walk").get<std::size_t>();
  s.baseline = j.at("baseline").get<std::size_t>();
  s.fill = j.at("fill").get<std::size_t>();
  s.truncated_walks = j.at("truncated_walks").get<std::size_t>();
  s.leaders_dropped = j.at("leaders_dropped").get<std::size_t>();
  s.budget_reached = j.at("budget_reached").get<bool>();
  return s;
}

}  // namespace

nlohmann::ordered_json sample_sidecar(const HeteroGraph& graph, const SampleResult& sample, const std::string& method) {
  nlohmann::ordered_json doc;
  doc["method"] = method;
  doc["num_nodes"] = sample.nodes.size();
  doc["num_edges"] = sample.edges.size();
  doc["achieved_ratio"] = sample.achieved_ratio;
  doc["phase_stats"] = stats_json(sample.stats);
  nlohmann::ordered_json provenance = nlohmann::ordered_json::object();
  for (auto tag : {Provenance::leader, Provenance::seed_fallback, Provenance::bne, Provenance::mgne, Provenance::walk,
                   Provenance::baseline, Provenance::fill}) {
    auto labels = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < sample.nodes.size(); ++i)
      if (sample.provenance[i] == tag) labels.push_back(graph.node_label(sample.nodes[i]));
    if (!labels.empty()) provenance[std::string(to_string(tag))] = std::move(labels);
  }
  doc["provenance"] = std::move(provenance);
  return doc;
}

void write_sample_files(const std::filesystem::path& dir, const HeteroGraph& graph, const SampleResult& sample,
                        const std::string& method) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());
  std::ofstream nodes(dir / "nodes.tsv", std::ios::binary | std::ios::trunc);
  std::ofstream edges(dir / "edges.tsv", std::ios::binary | std::ios::trunc);
  std::ofstream side(dir / "sample.json", std::ios::binary | std::ios::trunc);
  if (!nodes || !edges || !side) throw IoError("cannot write sample files under '" + dir.string() + "'");
  const auto& schema = graph.schema();
  for (NodeId v : sample.nodes) nodes << graph.node_label(v) << '\t' << schema.node_type_label(graph.node_type(v)) << '\n';
  for (EdgeId id : sample.edges) {
    const auto& e = graph.edge(id);
    edges << graph.node_label(e.src) << '\t' << graph.node_label(e.dst) << '\t' << schema.edge_type(e.type).label
          << '\n';
  }
  side << sample_sidecar(graph, sample, method).dump(2) << '\n';
  if (!nodes || !edges || !side) throw IoError("failed writing sample files under '" + dir.string() + "'");
}

SampleResult read_sample_files(const std::filesystem::path& dir, const HeteroGraph& original) {
  const auto sub = load_graph_files(dir / "nodes.tsv", dir / "edges.tsv", original.schema());
  SampleResult out;
  std::vector<bool> mask(original.num_nodes(), false);
  for (NodeId v = 0; v < sub.num_nodes(); ++v) {
    const auto& label = sub.node_label(v);
    if (!original.has_node(label)) throw MismatchError("sample node '" + label + "' is not in the original graph");
    const NodeId id = original.node_id(label);
    if (original.node_type(id) != sub.node_type(v))
      throw MismatchError("sample node '" + label + "' has a different type than in the original graph");
    mask[id] = true;
  }
  for (NodeId v = 0; v < original.num_nodes(); ++v)
    if (mask[v]) out.nodes.push_back(v);
  for (const auto& e : sub.edges()) {
    const NodeId u = original.node_id(sub.node_label(e.src));
    const NodeId w = original.node_id(sub.node_label(e.dst));
    const EdgeId id = original.find_edge(u, w);
    if (id == HeteroGraph::npos || original.edge(id).type != e.type)
      throw MismatchError("sample edge " + sub.node_label(e.src) + "-" + sub.node_label(e.dst) +
                          " is not in the original graph");
    out.edges.push_back(id);
  }
  std::sort(out.edges.begin(), out.edges.end());
  out.provenance.assign(out.nodes.size(), Provenance::baseline);
  out.achieved_ratio = original.num_nodes()
                           ? static_cast<double>(out.nodes.size()) / static_cast<double>(original.num_nodes())
                           : 0.0;

  std::ifstream side(dir / "sample.json", std::ios::binary);
  if (side) {
    try {
      const auto doc = nlohmann::json::parse(side);
      out.stats = stats_from_json(doc.at("phase_stats"));
      for (const auto& [tag, labels] : doc.at("provenance").items()) {
        const auto why = provenance_from_string(tag);
        for (const auto& label : labels) {
          const NodeId id = original.node_id(label.get<std::string>());
          auto it = std::lower_bound(out.nodes.begin(), out.nodes.end(), id);
          if (it != out.nodes.end() && *it == id) out.provenance[static_cast<std::size_t>(it - out.nodes.begin())] = why;
        }
      }
    } catch (const nlohmann::json::exception& e) {
      throw SchemaError(std::string("malformed sample.json: ") + e.what());
    } catch (const LookupError& e) {
      throw MismatchError(std::string("sample.json: ") + e.what());
    }
  }
  return out;
}

}  // namespace hetsample
