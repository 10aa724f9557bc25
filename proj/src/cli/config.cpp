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

#include "hetsample/cli/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "hetsample/error.hpp"

namespace hetsample::cli {

namespace {

using json = nlohmann::json;

void reject_unknown(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) throw ConfigError(where + ": expected an object");
  std::set<std::string> keys(allowed.begin(), allowed.end());
  for (const auto& [key, value] : obj.items())
    if (!keys.contains(key)) throw ConfigError((where.empty() ? key : where + "." + key) + ": unknown field");
}

template <typename T>
T get(const json& obj, const std::string& key, const std::string& field) {
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    if (!obj.contains(key)) throw ConfigError(field + ": missing field");
    throw ConfigError(field + ": wrong type");
  }
}

template <typename T>
void read_opt(const json& obj, const std::string& key, const std::string& field, T& target) {
  if (obj.contains(key)) target = get<T>(obj, key, field);
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  std::filesystem::path path(p);
  return path.is_absolute() ? path : base / path;
}

double ratio_value(const json& v, const std::string& field) {
  if (!v.is_number()) throw ConfigError(field + ": wrong type");
  const double r = v.get<double>();
  if (!(r > 0 && r <= 1)) throw ConfigError(field + ": ratio must lie in (0, 1]");
  return r;
}

std::vector<std::string> method_list(const json& v, const std::string& field) {
  if (!v.is_array()) throw ConfigError(field + ": expected a list of method names");
  std::vector<std::string> out;
  for (const auto& m : v) {
    if (!m.is_string()) throw ConfigError(field + ": expected a list of method names");
    if (!is_known_method(m.get<std::string>()))
      throw ConfigError(field + ": unknown method '" + m.get<std::string>() + "'");
    out.push_back(m.get<std::string>());
  }
  return out;
}

void parse_sampler(const json& s, SamplerParams& p) {
  reject_unknown(s, "sampler", {"k", "delta", "max_len", "k_mp", "walks", "mode", "ablation"});
  if (s.contains("k")) p.k = get<std::size_t>(s, "k", "sampler.k");
  read_opt(s, "delta", "sampler.delta", p.delta);
  read_opt(s, "max_len", "sampler.max_len", p.max_len);
  read_opt(s, "k_mp", "sampler.k_mp", p.k_mp);
  read_opt(s, "walks", "sampler.walks", p.walks);
  if (s.contains("mode")) {
    const auto mode = get<std::string>(s, "mode", "sampler.mode");
    if (mode == "deterministic")
      p.mode = SamplingMode::deterministic;
    else if (mode == "stochastic")
      p.mode = SamplingMode::stochastic;
    else
      throw ConfigError("sampler.mode: expected 'deterministic' or 'stochastic'");
  }
  if (s.contains("ablation")) {
    const auto& a = s.at("ablation");
    reject_unknown(a, "sampler.ablation", {"disable_ts", "disable_bne", "disable_mgne", "disable_mp"});
    read_opt(a, "disable_ts", "sampler.ablation.disable_ts", p.ablation.disable_ts);
    read_opt(a, "disable_bne", "sampler.ablation.disable_bne", p.ablation.disable_bne);
    read_opt(a, "disable_mgne", "sampler.ablation.disable_mgne", p.ablation.disable_mgne);
    read_opt(a, "disable_mp", "sampler.ablation.disable_mp", p.ablation.disable_mp);
  }
  if (p.k && *p.k < 1) throw ConfigError("sampler.k: must be at least 1");
  if (p.max_len < 1) throw ConfigError("sampler.max_len: must be at least 1");
  if (p.k_mp < 1) throw ConfigError("sampler.k_mp: must be at least 1");
  if (p.walks < 1) throw ConfigError("sampler.walks: must be at least 1");
}

void parse_baseline(const json& b, BaselineParams& p) {
  reject_unknown(b, "baseline", {"damping", "iterations", "restart", "burn"});
  read_opt(b, "damping", "baseline.damping", p.damping);
  read_opt(b, "iterations", "baseline.iterations", p.pagerank_iterations);
  read_opt(b, "restart", "baseline.restart", p.restart);
  read_opt(b, "burn", "baseline.burn", p.burn);
  if (!(p.damping >= 0 && p.damping < 1)) throw ConfigError("baseline.damping: must lie in [0, 1)");
  if (!(p.restart >= 0 && p.restart <= 1)) throw ConfigError("baseline.restart: must lie in [0, 1]");
  if (!(p.burn > 0 && p.burn < 1)) throw ConfigError("baseline.burn: must lie in (0, 1)");
}

SyntheticParams parse_synth(const json& s) {
  reject_unknown(s, "synth", {"node_types", "edge_types", "skew", "seed"});
  SyntheticParams p;
  if (!s.contains("node_types") || !s.at("node_types").is_array()) throw ConfigError("synth.node_types: missing field");
  for (const auto& t : s.at("node_types"))
    p.node_types.push_back({get<std::string>(t, "label", "synth.node_types.label"),
                            get<std::size_t>(t, "count", "synth.node_types.count")});
  if (s.contains("edge_types")) {
    for (const auto& e : s.at("edge_types")) {
      auto ends = get<std::vector<std::string>>(e, "endpoints", "synth.edge_types.endpoints");
      if (ends.size() != 2) throw ConfigError("synth.edge_types.endpoints: expected two node types");
      p.edge_types.push_back({get<std::string>(e, "label", "synth.edge_types.label"), ends[0], ends[1],
                              get<std::size_t>(e, "count", "synth.edge_types.count")});
    }
  }
  read_opt(s, "skew", "synth.skew", p.skew);
  read_opt(s, "seed", "synth.seed", p.seed);
  try {
    p.validate();
    (void)p.schema();
  } catch (const Error& e) {
    throw ConfigError(std::string("synth: ") + e.what());
  }
  return p;
}

}  // namespace

bool is_known_method(const std::string& name) {
  return std::find(kMethods.begin(), kMethods.end(), name) != kMethods.end();
}

RunConfig parse_run_config(const json& doc, const std::filesystem::path& base_dir) {
  reject_unknown(doc, "", {"graph", "output", "method", "ratio", "seed", "epsilon", "importance", "sampler",
                           "baseline", "sweep", "bench", "synth"});
  RunConfig config;
  if (doc.contains("graph")) {
    const auto& g = doc.at("graph");
    reject_unknown(g, "graph", {"nodes", "edges", "schema"});
    config.graph = GraphPaths{resolve(base_dir, get<std::string>(g, "nodes", "graph.nodes")),
                              resolve(base_dir, get<std::string>(g, "edges", "graph.edges")),
                              resolve(base_dir, get<std::string>(g, "schema", "graph.schema"))};
  }
  if (doc.contains("output")) config.output = resolve(base_dir, get<std::string>(doc, "output", "output"));
  read_opt(doc, "method", "method", config.method);
  if (!is_known_method(config.method)) throw ConfigError("method: unknown method '" + config.method + "'");
  if (doc.contains("ratio")) config.ratio = ratio_value(doc.at("ratio"), "ratio");
  read_opt(doc, "seed", "seed", config.seed);
  read_opt(doc, "epsilon", "epsilon", config.epsilon);
  if (!(config.epsilon > 0)) throw ConfigError("epsilon: must be positive");
  if (doc.contains("importance")) {
    config.importance = doc.at("importance");
    reject_unknown(config.importance, "importance", {"alpha", "W", "metapaths", "normalize"});
  }
  if (doc.contains("sampler")) parse_sampler(doc.at("sampler"), config.sampler);
  if (doc.contains("baseline")) parse_baseline(doc.at("baseline"), config.baseline);
  if (doc.contains("sweep")) {
    const auto& s = doc.at("sweep");
    reject_unknown(s, "sweep", {"methods", "ratios", "seeds"});
    SweepSpec spec;
    spec.methods = method_list(s.contains("methods") ? s.at("methods") : json::array({config.method}), "sweep.methods");
    if (!s.contains("ratios") || !s.at("ratios").is_array() || s.at("ratios").empty())
      throw ConfigError("sweep.ratios: expected a non-empty list");
    for (const auto& r : s.at("ratios")) spec.ratios.push_back(ratio_value(r, "sweep.ratios"));
    spec.seeds = s.contains("seeds") ? get<std::vector<std::uint64_t>>(s, "seeds", "sweep.seeds")
                                     : std::vector<std::uint64_t>{config.seed};
    if (spec.methods.empty() || spec.seeds.empty()) throw ConfigError("sweep: methods and seeds must be non-empty");
    config.sweep = std::move(spec);
  }
  if (doc.contains("bench")) {
    const auto& b = doc.at("bench");
    reject_unknown(b, "bench", {"methods", "ratio", "repeats"});
    if (b.contains("methods")) config.bench.methods = method_list(b.at("methods"), "bench.methods");
    if (b.contains("ratio")) config.bench.ratio = ratio_value(b.at("ratio"), "bench.ratio");
    read_opt(b, "repeats", "bench.repeats", config.bench.repeats);
    if (config.bench.repeats < 1) throw ConfigError("bench.repeats: must be at least 1");
  }
  if (doc.contains("synth")) config.synth = parse_synth(doc.at("synth"));
  return config;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path.string() + ": not valid JSON: " + e.what());
  }
  try {
    auto config = parse_run_config(doc, path.parent_path());
    config.source = path;
    return config;
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

namespace {

std::pair<std::vector<MetaPathSchema>, std::vector<double>> parse_paths(const json& imp, const SchemaGraph& schema,
                                                                         bool need_beta) {
  std::vector<MetaPathSchema> paths;
  std::vector<double> beta;
  if (!imp.is_object() || !imp.contains("metapaths")) return {paths, beta};
  const auto& list = imp.at("metapaths");
  if (!list.is_array()) throw ConfigError("importance.metapaths: expected a list");
  for (const auto& entry : list) {
    std::string text;
    if (entry.is_string()) {
      text = entry.get<std::string>();
      if (need_beta) throw ConfigError("importance.metapaths: '" + text + "' has no beta weight");
    } else {
      reject_unknown(entry, "importance.metapaths[]", {"path", "beta"});
      text = get<std::string>(entry, "path", "importance.metapaths.path");
      if (entry.contains("beta")) beta.push_back(get<double>(entry, "beta", "importance.metapaths.beta"));
      else if (need_beta) throw ConfigError("importance.metapaths: '" + text + "' has no beta weight");
    }
    try {
      paths.push_back(MetaPathSchema::parse(text, schema));
    } catch (const ConfigError& e) {
      throw ConfigError(std::string("importance.metapaths: ") + e.what());
    }
  }
  return {paths, beta};
}

}  // namespace

std::vector<MetaPathSchema> build_metapaths(const RunConfig& config, const SchemaGraph& schema) {
  return parse_paths(config.importance, schema, false).first;
}

ImportanceConfig build_importance(const RunConfig& config, const SchemaGraph& schema) {
  const auto& imp = config.importance;
  if (imp.is_null()) throw ConfigError("importance.alpha: missing field");
  ImportanceConfig out;
  const std::size_t m = schema.num_node_types();

  if (!imp.contains("alpha")) throw ConfigError("importance.alpha: missing field");
  const auto& alpha = imp.at("alpha");
  if (!alpha.is_object()) throw ConfigError("importance.alpha: expected an object keyed by node type");
  out.alpha.assign(m, 0.0);
  std::vector<bool> seen(m, false);
  for (const auto& [label, value] : alpha.items()) {
    if (!schema.has_node_type(label)) throw ConfigError("importance.alpha: unknown node type '" + label + "'");
    if (!value.is_number()) throw ConfigError("importance.alpha." + label + ": wrong type");
    const auto t = schema.node_type_id(label);
    out.alpha[t] = value.get<double>();
    seen[t] = true;
  }
  for (NodeTypeId t = 0; t < m; ++t)
    if (!seen[t]) throw ConfigError("importance.alpha: no weight for node type '" + schema.node_type_label(t) + "'");

  if (!imp.contains("W")) throw ConfigError("importance.W: missing field");
  const auto& w = imp.at("W");
  if (!w.is_object()) throw ConfigError("importance.W: expected an object keyed by 'A-B' node type pairs");
  out.weights = EdgeTypeWeights(m);
  for (const auto& [key, value] : w.items()) {
    const auto dash = key.find('-');
    if (dash == std::string::npos) throw ConfigError("importance.W." + key + ": expected 'A-B'");
    const auto a = key.substr(0, dash);
    const auto b = key.substr(dash + 1);
    if (!schema.has_node_type(a) || !schema.has_node_type(b))
      throw ConfigError("importance.W." + key + ": unknown node type");
    if (!value.is_number()) throw ConfigError("importance.W." + key + ": wrong type");
    try {
      out.weights.set(schema.node_type_id(a), schema.node_type_id(b), value.get<double>());
    } catch (const ConfigError& e) {
      throw ConfigError("importance.W." + key + ": " + e.what());
    }
  }

  std::tie(out.paths, out.beta) = parse_paths(imp, schema, true);

  bool normalize = false;
  if (imp.contains("normalize")) normalize = get<bool>(imp, "normalize", "importance.normalize");
  if (normalize) out.normalize();
  try {
    out.validate(schema);
  } catch (const ConfigError& e) {
    throw ConfigError(std::string("importance.") + e.what());
  }
  return out;
}

}  // namespace hetsample::cli
