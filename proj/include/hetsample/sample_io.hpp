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
#include <string>

#include "json.hpp"

#include "hetsample/graph.hpp"
#include "hetsample/sample_result.hpp"

namespace hetsample {

/// Provenance (node labels grouped by tag), phase statistics and achieved
/// ratio. Contains nothing run-dependent, so identical samples serialize
/// identically.
nlohmann::ordered_json sample_sidecar(const HeteroGraph& graph, const SampleResult& sample, const std::string& method);

/// Writes <dir>/nodes.tsv, <dir>/edges.tsv (the sampled subgraph with original
/// labels, canonical order) and <dir>/sample.json.
void write_sample_files(const std::filesystem::path& dir, const HeteroGraph& graph, const SampleResult& sample,
                        const std::string& method);

/// Reads a sample directory back against its original graph. Malformed TSV
/// raises SchemaError with the line number; nodes or edges absent from the
/// original (or with a different type) raise MismatchError. Provenance and
/// statistics come from sample.json when present.
SampleResult read_sample_files(const std::filesystem::path& dir, const HeteroGraph& original);

}  // namespace hetsample
