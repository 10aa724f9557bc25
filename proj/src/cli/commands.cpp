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

#include "hetsample/cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "hetsample/baselines.hpp"
#include "hetsample/cli/config.hpp"
#include "hetsample/error.hpp"
#include "hetsample/graph_io.hpp"
#include "hetsample/heterosample.hpp"
#include "hetsample/metrics.hpp"
#include "hetsample/sample_io.hpp"
#include "hetsample/synthetic.hpp"

namespace hetsample::cli {

namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

struct GlobalFlags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<double> ratio;
  std::optional<std::string> method;
  std::optional<std::string> out;
  std::size_t threads = 1;
  bool check_config = false;
};

RunConfig resolve_config(const GlobalFlags& flags) {
  RunConfig config;
  if (!flags.config.empty()) config = load_run_config(flags.config);
  if (flags.seed) config.seed = *flags.seed;
  if (flags.ratio) {
    if (!(*flags.ratio > 0 && *flags.ratio <= 1)) throw ConfigError("--ratio: must lie in (0, 1]");
    config.ratio = *flags.ratio;
  }
  if (flags.method) {
    if (!is_known_method(*flags.method)) throw ConfigError("--method: unknown method '" + *flags.method + "'");
    config.method = *flags.method;
  }
  if (flags.out) config.output = *flags.out;
  return config;
}

struct LoadedGraph {
  SchemaGraph schema;
  HeteroGraph graph;
};

LoadedGraph load_input(const RunConfig& config, std::ostream& err) {
  if (!config.graph) throw ConfigError("graph: missing field");
  LoadedGraph loaded;
  loaded.schema = read_schema_file(config.graph->schema);
  BuildStats stats;
  loaded.graph = load_graph_files(config.graph->nodes, config.graph->edges, loaded.schema, &stats);
  if (stats.duplicate_edges || stats.self_loops)
    err << "warning: dropped " << stats.duplicate_edges << " duplicate edge(s) and " << stats.self_loops
        << " self-loop(s) while loading\n";
  return loaded;
}

double required_ratio(const RunConfig& config) {
  if (!config.ratio) throw ConfigError("ratio: missing field");
  return *config.ratio;
}

// One sampling run by method name. `importance` is required for heterosample.
SampleResult run_method(const std::string& method, const HeteroGraph& graph, const RunConfig& config,
                        const ImportanceConfig* importance, double ratio, std::uint64_t seed) {
  if (method == "heterosample") {
    if (!importance) throw ConfigError("importance.alpha: missing field");
    SamplerParams params = config.sampler;
    params.ratio = ratio;
    params.seed = seed;
    return sample(graph, *importance, params);
  }
  auto baseline = parse_baseline(method);
  if (!baseline) throw ConfigError("method: unknown method '" + method + "'");
  BaselineParams params = config.baseline;
  params.ratio = ratio;
  params.seed = seed;
  return run_baseline(*baseline, graph, params);
}

std::optional<ImportanceConfig> importance_if_needed(const RunConfig& config, const SchemaGraph& schema,
                                                     const std::vector<std::string>& methods) {
  if (std::find(methods.begin(), methods.end(), "heterosample") == methods.end()) return std::nullopt;
  return build_importance(config, schema);
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text)) throw IoError("cannot write '" + path.string() + "'");
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

int cmd_sample(const GlobalFlags& flags, std::ostream& out, std::ostream& err) {
  const auto config = resolve_config(flags);
  const auto input = load_input(config, err);
  const auto importance = importance_if_needed(config, input.schema, {config.method});
  const double ratio = required_ratio(config);
  SampleResult result;
  const double runtime_ms = time_sampling([&] {
    result = run_method(config.method, input.graph, config, importance ? &*importance : nullptr, ratio, config.seed);
  });
  write_sample_files(config.output, input.graph, result, config.method);
  ordered_json timing;
  timing["runtime_ms"] = round_sig9(runtime_ms);
  write_text(config.output / "timing.json", timing.dump(2) + "\n");

  ordered_json summary;
  summary["method"] = config.method;
  summary["nodes"] = result.nodes.size();
  summary["edges"] = result.edges.size();
  summary["achieved_ratio"] = round_sig9(result.achieved_ratio);
  summary["output"] = config.output.string();
  out << summary.dump() << '\n';
  if (result.stats.leaders_dropped)
    err << "warning: budget below m*k; dropped " << result.stats.leaders_dropped << " leader(s)\n";
  return kOk;
}

int cmd_evaluate(const GlobalFlags& flags, const std::string& sample_dir, const std::string& csv_path,
                 std::ostream& out, std::ostream& err) {
  const auto config = resolve_config(flags);
  const auto input = load_input(config, err);
  const auto paths = build_metapaths(config, input.schema);
  const fs::path dir = sample_dir.empty() ? config.output : fs::path(sample_dir);
  const auto sampled = read_sample_files(dir, input.graph);

  std::optional<double> runtime_ms;
  if (std::ifstream timing(dir / "timing.json"); timing) {
    try {
      const auto doc = nlohmann::json::parse(timing);
      if (doc.contains("runtime_ms") && doc["runtime_ms"].is_number()) runtime_ms = doc["runtime_ms"].get<double>();
    } catch (const nlohmann::json::exception&) {
      err << "warning: ignoring unreadable timing.json\n";
    }
  }
  const auto report = evaluate(input.graph, sampled, paths, config.epsilon, runtime_ms);
  const auto doc = to_json(report);
  write_text(dir / "report.json", doc.dump(2) + "\n");
  out << doc.dump(2) << '\n';
  if (!csv_path.empty()) {
    const bool fresh = !fs::exists(csv_path);
    std::ofstream csv(csv_path, std::ios::binary | std::ios::app);
    if (!csv) throw IoError("cannot append to '" + csv_path + "'");
    if (fresh) csv << csv_header() << '\n';
    csv << csv_row(config.method, config.ratio.value_or(sampled.achieved_ratio), config.seed, report) << '\n';
  }
  return kOk;
}

struct CellKey {
  std::string method;
  std::string ratio;
  std::uint64_t seed;

  bool operator<(const CellKey& o) const {
    if (method != o.method) return method < o.method;
    const double a = std::stod(ratio), b = std::stod(o.ratio);
    if (a != b) return a < b;
    return seed < o.seed;
  }
};

std::optional<CellKey> parse_key(const std::string& row) {
  std::stringstream ss(row);
  std::string method, ratio, seed;
  if (!std::getline(ss, method, ',') || !std::getline(ss, ratio, ',') || !std::getline(ss, seed, ',')) return std::nullopt;
  try {
    return CellKey{method, format_number(std::stod(ratio)), std::stoull(seed)};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

int cmd_sweep(const GlobalFlags& flags, std::ostream& out, std::ostream& err) {
  const auto config = resolve_config(flags);
  if (!config.sweep) throw ConfigError("sweep: missing field");
  const auto& spec = *config.sweep;
  const auto input = load_input(config, err);
  const auto importance = importance_if_needed(config, input.schema, spec.methods);
  const auto paths = build_metapaths(config, input.schema);

  std::error_code ec;
  fs::create_directories(config.output, ec);
  if (ec) throw IoError("cannot create output directory '" + config.output.string() + "'");
  const fs::path csv_path = config.output / "sweep.csv";

  // Existing rows are kept and their cells skipped.
  std::map<CellKey, std::string> rows;
  if (std::ifstream existing(csv_path); existing) {
    std::string line;
    while (std::getline(existing, line)) {
      if (line.empty() || line == csv_header()) continue;
      if (auto key = parse_key(line)) rows.emplace(*key, line);
    }
  }

  struct Cell {
    std::string method;
    double ratio;
    std::uint64_t seed;
  };
  std::vector<Cell> todo;
  for (const auto& method : spec.methods)
    for (double ratio : spec.ratios)
      for (auto seed : spec.seeds)
        if (!rows.contains(CellKey{method, format_number(ratio), seed})) todo.push_back({method, ratio, seed});

  std::mutex writer;
  std::ofstream csv;
  {
    const bool fresh = !fs::exists(csv_path) || fs::file_size(csv_path) == 0;
    csv.open(csv_path, std::ios::binary | std::ios::app);
    if (!csv) throw IoError("cannot append to '" + csv_path.string() + "'");
    if (fresh) csv << csv_header() << '\n' << std::flush;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= todo.size()) return;
      const auto& cell = todo[i];
      try {
        SampleResult result;
        const double ms = time_sampling([&] {
          result = run_method(cell.method, input.graph, config, importance ? &*importance : nullptr, cell.ratio,
                              cell.seed);
        });
        const auto report = evaluate(input.graph, result, paths, config.epsilon, ms);
        auto row = csv_row(cell.method, cell.ratio, cell.seed, report);
        std::lock_guard lock(writer);
        csv << row << '\n' << std::flush;
        rows.emplace(CellKey{cell.method, format_number(cell.ratio), cell.seed}, std::move(row));
      } catch (...) {
        std::lock_guard lock(writer);
        if (!failure) failure = std::current_exception();
        next = todo.size();
        return;
      }
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(flags.threads, todo.size()));
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  csv.close();
  if (failure) std::rethrow_exception(failure);

  // Canonical order: sorted by (method, ratio, seed).
  std::string text = csv_header() + "\n";
  for (const auto& [key, row] : rows) text += row + "\n";
  write_text(csv_path, text);
  out << text;
  err << "sweep: " << todo.size() << " cell(s) run, " << rows.size() - todo.size() << " reused\n";
  return kOk;
}

int cmd_synth(const GlobalFlags& flags, std::ostream& out) {
  const auto config = resolve_config(flags);
  if (!config.synth) throw ConfigError("synth: missing field");
  auto params = *config.synth;
  if (flags.seed) params.seed = *flags.seed;
  const auto graph = generate_synthetic(params);
  std::error_code ec;
  fs::create_directories(config.output, ec);
  if (ec) throw IoError("cannot create output directory '" + config.output.string() + "'");
  write_graph_files(config.output / "nodes.tsv", config.output / "edges.tsv", graph);
  write_schema_file(config.output / "schema.json", graph.schema());
  ordered_json summary;
  summary["nodes"] = graph.num_nodes();
  summary["edges"] = graph.num_edges();
  summary["seed"] = params.seed;
  summary["output"] = config.output.string();
  out << summary.dump() << '\n';
  return kOk;
}

int cmd_bench(const GlobalFlags& flags, std::ostream& out, std::ostream& err) {
  const auto config = resolve_config(flags);
  std::vector<std::string> methods = config.bench.methods;
  if (flags.method) methods = {*flags.method};
  if (methods.empty()) methods = kMethods;
  double ratio = config.bench.ratio.value_or(0.0);
  if (flags.ratio || !config.bench.ratio) ratio = required_ratio(config);
  const auto input = load_input(config, err);
  const auto importance = importance_if_needed(config, input.schema, methods);

  ordered_json table = ordered_json::array();
  std::string csv = "method,ratio,repeats,median_runtime_ms,min_runtime_ms,max_runtime_ms\n";
  err << "method         median_ms       min_ms       max_ms\n";
  for (const auto& method : methods) {
    std::vector<double> times;
    for (std::size_t i = 0; i < config.bench.repeats; ++i)
      times.push_back(time_sampling([&] {
        (void)run_method(method, input.graph, config, importance ? &*importance : nullptr, ratio, config.seed);
      }));
    std::sort(times.begin(), times.end());
    const std::size_t n = times.size();
    const double median = n % 2 ? times[n / 2] : 0.5 * (times[n / 2 - 1] + times[n / 2]);
    csv += method + "," + format_number(ratio) + "," + std::to_string(n) + "," + format_number(median) + "," +
           format_number(times.front()) + "," + format_number(times.back()) + "\n";
    char line[128];
    std::snprintf(line, sizeof line, "%-12s %12.3f %12.3f %12.3f\n", method.c_str(), median, times.front(),
                  times.back());
    err << line;
  }
  std::error_code ec;
  fs::create_directories(config.output, ec);
  if (!ec) write_text(config.output / "bench.csv", csv);
  out << csv;
  return kOk;
}

int cmd_check(const GlobalFlags& flags, std::ostream& out, std::ostream& err) {
  const auto config = resolve_config(flags);
  ordered_json summary;
  summary["config"] = flags.config;
  summary["method"] = config.method;
  if (config.graph) {
    const auto schema = read_schema_file(config.graph->schema);
    std::vector<std::string> methods{config.method};
    if (config.sweep) methods.insert(methods.end(), config.sweep->methods.begin(), config.sweep->methods.end());
    methods.insert(methods.end(), config.bench.methods.begin(), config.bench.methods.end());
    if (importance_if_needed(config, schema, methods)) summary["importance"] = "valid";
    summary["metapaths"] = build_metapaths(config, schema).size();
  } else {
    err << "note: no graph section; schema-dependent fields not checked\n";
  }
  summary["status"] = "ok";
  out << summary.dump() << '\n';
  return kOk;
}

int exit_code_for(const Error& e) {
  if (dynamic_cast<const ConfigError*>(&e) || dynamic_cast<const ParameterError*>(&e)) return kConfigError;
  if (dynamic_cast<const MismatchError*>(&e)) return kMismatch;
  return kIoError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Heterogeneous graph sampling toolkit", "hetsample"};
  app.fallthrough();
  GlobalFlags flags;
  std::uint64_t seed = 0;
  double ratio = 0;
  std::string method;
  std::string out_dir;
  auto* seed_opt = app.add_option("--seed", seed, "Random seed (overrides config)");
  auto* ratio_opt = app.add_option("--ratio", ratio, "Sampling ratio in (0, 1] (overrides config)");
  auto* method_opt = app.add_option("--method", method, "heterosample|irv|rdn|rpn|re|rw|ff");
  auto* out_opt = app.add_option("--out", out_dir, "Output directory (overrides config)");
  app.add_option("--config", flags.config, "JSON run configuration");
  app.add_option("--threads", flags.threads, "Worker threads for sweep cells")->check(CLI::PositiveNumber);
  app.add_flag("--check-config", flags.check_config, "Validate the configuration and exit");

  auto* sample_cmd = app.add_subcommand("sample", "Sample a graph and write the subgraph with provenance");
  auto* evaluate_cmd = app.add_subcommand("evaluate", "Compute NTDS, ETDS, MPR and GRE for a sample");
  std::string sample_dir;
  std::string csv_path;
  evaluate_cmd->add_option("--sample", sample_dir, "Sample directory (default: output directory)");
  evaluate_cmd->add_option("--csv", csv_path, "Append a CSV row to this file");
  auto* sweep_cmd = app.add_subcommand("sweep", "Run every (method, ratio, seed) cell and collect a CSV");
  auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic heterogeneous graph");
  auto* bench_cmd = app.add_subcommand("bench", "Median-of-N sampling runtime per method");
  app.require_subcommand(0, 1);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }
  if (*seed_opt) flags.seed = seed;
  if (*ratio_opt) flags.ratio = ratio;
  if (*method_opt) flags.method = method;
  if (*out_opt) flags.out = out_dir;

  try {
    if (flags.check_config) return cmd_check(flags, out, err);
    if (*sample_cmd) return cmd_sample(flags, out, err);
    if (*evaluate_cmd) return cmd_evaluate(flags, sample_dir, csv_path, out, err);
    if (*sweep_cmd) return cmd_sweep(flags, out, err);
    if (*synth_cmd) return cmd_synth(flags, out);
    if (*bench_cmd) return cmd_bench(flags, out, err);
    err << app.help();
    return kConfigError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
}

}  // namespace hetsample::cli
