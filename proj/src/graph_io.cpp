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

#include "hetsample/graph_io.hpp"

#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "hetsample/error.hpp"

namespace hetsample {

namespace {

// Splits a tab-separated line; returns false for blank and comment lines.
bool split_record(std::string& line, std::vector<std::string_view>& fields) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  fields.clear();
  if (line.empty() || line.front() == '#') return false;
  std::string_view rest(line);
  while (true) {
    auto tab = rest.find('\t');
    fields.push_back(rest.substr(0, tab));
    if (tab == std::string_view::npos) break;
    rest.remove_prefix(tab + 1);
  }
  return true;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  return out;
}

}  // namespace

HeteroGraph load_graph(std::istream& nodes, std::istream& edges, const SchemaGraph& schema, BuildStats* stats) {
  GraphBuilder builder(schema);
  std::string line;
  std::vector<std::string_view> fields;

  for (std::size_t lineno = 1; std::getline(nodes, line); ++lineno) {
    if (!split_record(line, fields)) continue;
    if (fields.size() != 2 || fields[0].empty())
      throw SchemaError("nodes: expected '<node_id>\\t<type_label>'", lineno);
    if (!schema.has_node_type(fields[1]))
      throw SchemaError("nodes: unknown node type '" + std::string(fields[1]) + "'", lineno);
    if (builder.find(fields[0]) != GraphBuilder::npos)
      throw DuplicateError("nodes: duplicate node id '" + std::string(fields[0]) + "'", lineno);
    builder.add_node(std::string(fields[0]), schema.node_type_id(fields[1]));
  }

  for (std::size_t lineno = 1; std::getline(edges, line); ++lineno) {
    if (!split_record(line, fields)) continue;
    if (fields.size() != 3) throw SchemaError("edges: expected '<src_id>\\t<dst_id>\\t<edge_type_label>'", lineno);
    if (!schema.has_edge_type(fields[2]))
      throw SchemaError("edges: unknown edge type '" + std::string(fields[2]) + "'", lineno);
    NodeId ends[2];
    for (int i = 0; i < 2; ++i) {
      ends[i] = builder.find(fields[i]);
      if (ends[i] == GraphBuilder::npos)
        throw ReferenceError("edges: undeclared node '" + std::string(fields[i]) + "'", lineno);
    }
    try {
      builder.add_edge(ends[0], ends[1], schema.edge_type_id(fields[2]));
    } catch (const SchemaError& e) {
      throw SchemaError(std::string("edges: ") + e.what(), lineno);
    }
  }
  if (stats) *stats = builder.stats();
  return std::move(builder).build();
}

void write_graph(std::ostream& nodes, std::ostream& edges, const HeteroGraph& graph) {
  const auto& schema = graph.schema();
  for (NodeId v = 0; v < graph.num_nodes(); ++v)
    nodes << graph.node_label(v) << '\t' << schema.node_type_label(graph.node_type(v)) << '\n';
  for (const auto& e : graph.edges())
    edges << graph.node_label(e.src) << '\t' << graph.node_label(e.dst) << '\t' << schema.edge_type(e.type).label
          << '\n';
}

SchemaGraph read_schema_file(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_schema(in);
}

void write_schema_file(const std::filesystem::path& path, const SchemaGraph& schema) {
  auto out = open_out(path);
  write_schema(out, schema);
}

HeteroGraph load_graph_files(const std::filesystem::path& nodes, const std::filesystem::path& edges,
                             const SchemaGraph& schema, BuildStats* stats) {
  auto nodes_in = open_in(nodes);
  auto edges_in = open_in(edges);
  return load_graph(nodes_in, edges_in, schema, stats);
}

void write_graph_files(const std::filesystem::path& nodes, const std::filesystem::path& edges,
                       const HeteroGraph& graph) {
  auto nodes_out = open_out(nodes);
  auto edges_out = open_out(edges);
  write_graph(nodes_out, edges_out, graph);
  if (!nodes_out || !edges_out) throw IoError("failed writing graph files");
}

}  // namespace hetsample
