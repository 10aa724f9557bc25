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

#include <filesystem>
#include <istream>
#include <ostream>

#include "hetsample/graph.hpp"

namespace hetsample {

// Nodes file: "<node_id>\t<type_label>" per line.
// Edges file: "<src_id>\t<dst_id>\t<edge_type_label>" per line.
// Lines starting with '#' and blank lines are skipped. Node ids are assigned
// densely in file order. Errors carry the offending line number.
HeteroGraph load_graph(std::istream& nodes, std::istream& edges, const SchemaGraph& schema,
                       BuildStats* stats = nullptr);

// Writes the same TSV pair: nodes in ascending id, edges ascending by
// (src, dst) with src < dst. Output is byte-stable for a given graph.
void write_graph(std::ostream& nodes, std::ostream& edges, const HeteroGraph& graph);

SchemaGraph read_schema_file(const std::filesystem::path& path);
void write_schema_file(const std::filesystem::path& path, const SchemaGraph& schema);

HeteroGraph load_graph_files(const std::filesystem::path& nodes, const std::filesystem::path& edges,
                             const SchemaGraph& schema, BuildStats* stats = nullptr);
void write_graph_files(const std::filesystem::path& nodes, const std::filesystem::path& edges,
                       const HeteroGraph& graph);

}  // namespace hetsample
