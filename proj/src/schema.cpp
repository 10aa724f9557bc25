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

#include "hetsample/schema.hpp"

#include "json.hpp"

#include <algorithm>

#include "hetsample/error.hpp"

namespace hetsample {

SchemaGraph::SchemaGraph(std::vector<std::string> node_types, std::vector<EdgeTypeDef> edge_types)
    : node_types_(std::move(node_types)), edge_types_(std::move(edge_types)) {
  if (node_types_.empty()) throw SchemaError("schema declares no node types");
  for (NodeTypeId t = 0; t < node_types_.size(); ++t) {
    const auto& label = node_types_[t];
    if (label.empty()) throw SchemaError("empty node type label");
    if (!node_type_index_.emplace(label, t).second)
      throw DuplicateError("duplicate node type '" + label + "'");
  }
  const std::size_t m = node_types_.size();
  compatibility_.assign(m * m, {});
  incident_.assign(m, {});
  for (EdgeTypeId r = 0; r < edge_types_.size(); ++r) {
    const auto& def = edge_types_[r];
    if (def.label.empty()) throw SchemaError("empty edge type label");
    if (def.first >= m || def.second >= m)
      throw SchemaError("edge type '" + def.label + "' references an unknown node type");
    if (!edge_type_index_.emplace(def.label, r).second)
      throw DuplicateError("duplicate edge type '" + def.label + "'");
    compatibility_[pair_index(def.first, def.second)].push_back(r);
    if (def.first != def.second) compatibility_[pair_index(def.second, def.first)].push_back(r);
    incident_[def.first].push_back(r);
    if (def.first != def.second) incident_[def.second].push_back(r);
  }
}

const std::string& SchemaGraph::node_type_label(NodeTypeId t) const {
  if (t >= node_types_.size()) throw LookupError("unknown node type id " + std::to_string(t));
  return node_types_[t];
}

const EdgeTypeDef& SchemaGraph::edge_type(EdgeTypeId r) const {
  if (r >= edge_types_.size()) throw LookupError("unknown edge type id " + std::to_string(r));
  return edge_types_[r];
}

NodeTypeId SchemaGraph::node_type_id(std::string_view label) const {
  auto it = node_type_index_.find(std::string(label));
  if (it == node_type_index_.end()) throw LookupError("unknown node type '" + std::string(label) + "'");
  return it->second;
}

EdgeTypeId SchemaGraph::edge_type_id(std::string_view label) const {
  auto it = edge_type_index_.find(std::string(label));
  if (it == edge_type_index_.end()) throw LookupError("unknown edge type '" + std::string(label) + "'");
  return it->second;
}

bool SchemaGraph::has_node_type(std::string_view label) const {
  return node_type_index_.contains(std::string(label));
}

bool SchemaGraph::has_edge_type(std::string_view label) const {
  return edge_type_index_.contains(std::string(label));
}

std::span<const EdgeTypeId> SchemaGraph::compatible(NodeTypeId a, NodeTypeId b) const {
  if (a >= node_types_.size() || b >= node_types_.size())
    throw LookupError("unknown node type id in compatibility query");
  return compatibility_[pair_index(a, b)];
}

std::span<const EdgeTypeId> SchemaGraph::incident(NodeTypeId t) const {
  if (t >= node_types_.size()) throw LookupError("unknown node type id " + std::to_string(t));
  return incident_[t];
}

bool SchemaGraph::operator==(const SchemaGraph& other) const {
  if (node_types_ != other.node_types_ || edge_types_.size() != other.edge_types_.size()) return false;
  for (std::size_t i = 0; i < edge_types_.size(); ++i) {
    const auto& a = edge_types_[i];
    const auto& b = other.edge_types_[i];
    if (a.label != b.label || !a.connects(b.first, b.second)) return false;
  }
  return true;
}

SchemaGraph read_schema(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("schema is not valid JSON: ") + e.what());
  }
  try {
    auto node_types = doc.at("node_types").get<std::vector<std::string>>();
    std::unordered_map<std::string, NodeTypeId> index;
    for (NodeTypeId t = 0; t < node_types.size(); ++t) index.emplace(node_types[t], t);
    std::vector<EdgeTypeDef> edge_types;
    for (const auto& entry : doc.at("edge_types")) {
      auto label = entry.at("label").get<std::string>();
      auto ends = entry.at("endpoints").get<std::vector<std::string>>();
      if (ends.size() != 2) throw SchemaError("edge type '" + label + "' must list two endpoints");
      auto a = index.find(ends[0]);
      auto b = index.find(ends[1]);
      if (a == index.end() || b == index.end())
        throw SchemaError("edge type '" + label + "' references an undeclared node type");
      edge_types.push_back({label, a->second, b->second});
    }
    return SchemaGraph(std::move(node_types), std::move(edge_types));
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("malformed schema document: ") + e.what());
  }
}

void write_schema(std::ostream& out, const SchemaGraph& schema) {
  nlohmann::ordered_json doc;
  doc["node_types"] = schema.node_type_labels();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& def : schema.edge_types()) {
    nlohmann::ordered_json e;
    e["label"] = def.label;
    e["endpoints"] = {schema.node_type_label(def.first), schema.node_type_label(def.second)};
    edges.push_back(std::move(e));
  }
  doc["edge_types"] = std::move(edges);
  out << doc.dump(2) << '\n';
}

}  // namespace hetsample
