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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hetsample/baselines.hpp"
#include "hetsample/heterosample.hpp"
#include "hetsample/importance.hpp"
#include "hetsample/synthetic.hpp"

namespace hetsample::cli {

inline const std::vector<std::string> kMethods = {"heterosample", "irv", "rdn", "rpn", "re", "rw", "ff"};

bool is_known_method(const std::string& name);

struct GraphPaths {
  std::filesystem::path nodes;
  std::filesystem::path edges;
  std::filesystem::path schema;
};

struct SweepSpec {
  std::vector<std::string> methods;
  std::vector<double> ratios;
  std::vector<std::uint64_t> seeds;
};

struct BenchSpec {
  std::vector<std::string> methods;
  std::optional<double> ratio;
  std::size_t repeats = 5;
};

/// Parsed run configuration. Fields that need the graph schema (alpha, W,
/// meta-paths) stay as JSON until build_importance() resolves them.
struct RunConfig {
  std::filesystem::path source;
  std::optional<GraphPaths> graph;
  std::filesystem::path output = "out";
  std::string method = "heterosample";
  std::optional<double> ratio;
  std::uint64_t seed = 0;
  double epsilon = 1e-9;
  SamplerParams sampler;
  BaselineParams baseline;
  std::optional<SweepSpec> sweep;
  BenchSpec bench;
  std::optional<SyntheticParams> synth;
  nlohmann::json importance;  // null when absent
};

/// Parses a config document. Relative paths resolve against `base_dir`.
/// Throws ConfigError naming the offending field.
RunConfig parse_run_config(const nlohmann::json& doc, const std::filesystem::path& base_dir);
RunConfig load_run_config(const std::filesystem::path& path);

/// alpha, W, meta-paths and beta resolved against the schema, normalized
/// when importance.normalize is true, and validated.
ImportanceConfig build_importance(const RunConfig& config, const SchemaGraph& schema);

/// Only the meta-paths (for evaluation); empty when none are configured.
std::vector<MetaPathSchema> build_metapaths(const RunConfig& config, const SchemaGraph& schema);

}  // namespace hetsample::cli
