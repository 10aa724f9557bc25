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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "hetsample/cli/commands.hpp"
#include "hetsample/graph_io.hpp"
#include "hetsample/metrics.hpp"
#include "hetsample/sample_io.hpp"
#include "hetsample/synthetic.hpp"
#include "json.hpp"

namespace hetsample {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "hetsample");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << text;
}

SyntheticParams fixture_params() {
  SyntheticParams p;
  p.node_types = {{"A", 120}, {"P", 90}, {"V", 15}};
  p.edge_types = {{"AP", "A", "P", 300}, {"PV", "P", "V", 90}};
  p.seed = 4;
  return p;
}

json base_config() {
  return json::parse(R"({
    "graph": {"nodes": "nodes.tsv", "edges": "edges.tsv", "schema": "schema.json"},
    "output": "out",
    "method": "heterosample",
    "ratio": 0.3,
    "seed": 7,
    "importance": {
      "alpha": {"A": 0.4, "P": 0.4, "V": 0.2},
      "W": {"A-P": 0.35, "P-V": 0.15},
      "metapaths": [{"path": "A-P-A", "beta": 0.6}, {"path": "A-P-V-P-A", "beta": 0.4}]
    },
    "sampler": {"delta": 6, "k_mp": 2}
  })");
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("hetsample_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    graph_ = generate_synthetic(fixture_params());
    write_graph_files(dir_ / "nodes.tsv", dir_ / "edges.tsv", graph_);
    write_schema_file(dir_ / "schema.json", graph_.schema());
    write_config(base_config());
  }
  void TearDown() override { fs::remove_all(dir_); }

  void write_config(const json& doc, const std::string& name = "config.json") { spit(dir_ / name, doc.dump(2)); }
  std::string config_path(const std::string& name = "config.json") const { return (dir_ / name).string(); }

  fs::path dir_;
  HeteroGraph graph_;
};

TEST_F(CliTest, SampleWritesReloadableFiles) {
  auto r = run_cli({"--config", config_path(), "sample"});
  ASSERT_EQ(r.code, 0) << r.err;
  for (auto f : {"nodes.tsv", "edges.tsv", "sample.json", "timing.json"}) EXPECT_TRUE(fs::exists(dir_ / "out" / f));
  auto back = read_sample_files(dir_ / "out", graph_);
  auto summary = json::parse(r.out);
  EXPECT_EQ(summary["nodes"].get<std::size_t>(), back.nodes.size());
  EXPECT_LE(back.nodes.size(), sample_budget(0.3, graph_.num_nodes()));
  auto sidecar = json::parse(slurp(dir_ / "out" / "sample.json"));
  EXPECT_EQ(sidecar["method"], "heterosample");
  EXPECT_TRUE(sidecar["provenance"].contains("leader"));
}

TEST_F(CliTest, MissingAlphaIsConfigError) {
  auto doc = base_config();
  doc["importance"].erase("alpha");
  write_config(doc);
  auto r = run_cli({"--config", config_path(), "sample"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("importance.alpha"), std::string::npos) << r.err;
}

TEST_F(CliTest, ConfigErrorsExitTwo) {
  auto doc = base_config();
  doc["ratoi"] = 0.3;
  write_config(doc, "typo.json");
  auto typo = run_cli({"--config", config_path("typo.json"), "sample"});
  EXPECT_EQ(typo.code, 2);
  EXPECT_NE(typo.err.find("ratoi"), std::string::npos);
  EXPECT_EQ(run_cli({"--config", config_path(), "--ratio", "1.5", "sample"}).code, 2);
  EXPECT_EQ(run_cli({"--config", config_path(), "--method", "tls", "sample"}).code, 2);
  EXPECT_EQ(run_cli({"--bogus-flag"}).code, 2);
  auto bad_w = base_config();
  bad_w["importance"]["W"] = {{"A-P", 0.35}};
  write_config(bad_w, "bad_w.json");
  EXPECT_EQ(run_cli({"--config", config_path("bad_w.json"), "sample"}).code, 2);
  spit(dir_ / "broken.json", "{\"ratio\": ");
  EXPECT_EQ(run_cli({"--config", config_path("broken.json"), "sample"}).code, 2);
}

TEST_F(CliTest, MissingInputIsIoError) {
  auto doc = base_config();
  doc["graph"]["nodes"] = "absent.tsv";
  write_config(doc);
  EXPECT_EQ(run_cli({"--config", config_path(), "sample"}).code, 1);
  EXPECT_EQ(run_cli({"--config", config_path("nope.json"), "sample"}).code, 1);
}

TEST_F(CliTest, FullRatioReproducesInputByteIdentically) {
  auto r = run_cli({"--config", config_path(), "--ratio", "1", "sample"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(slurp(dir_ / "out" / "nodes.tsv"), slurp(dir_ / "nodes.tsv"));
  EXPECT_EQ(slurp(dir_ / "out" / "edges.tsv"), slurp(dir_ / "edges.tsv"));
}

TEST_F(CliTest, RepeatedRunsAreByteIdenticalAcrossThreadCounts) {
  std::vector<std::string> reference;
  for (int run = 0; run < 5; ++run) {
    const std::string out = (dir_ / ("run" + std::to_string(run))).string();
    auto r = run_cli({"--config", config_path(), "--threads", std::to_string(1 + run), "--out", out, "sample"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::vector<std::string> files;
    for (auto f : {"nodes.tsv", "edges.tsv", "sample.json"}) files.push_back(slurp(fs::path(out) / f));
    if (run == 0) reference = files;
    EXPECT_EQ(files, reference);
  }
}

TEST_F(CliTest, EvaluateMatchesLibraryAndFullSampleIsPerfect) {
  ASSERT_EQ(run_cli({"--config", config_path(), "sample"}).code, 0);
  auto r = run_cli({"--config", config_path(), "evaluate", "--csv", (dir_ / "rows.csv").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  auto sampled = read_sample_files(dir_ / "out", graph_);
  std::vector<MetaPathSchema> paths{MetaPathSchema::parse("A-P-A", graph_.schema()),
                                    MetaPathSchema::parse("A-P-V-P-A", graph_.schema())};
  auto timing = json::parse(slurp(dir_ / "out" / "timing.json"));
  auto expected = to_json(evaluate(graph_, sampled, paths, 1e-9, timing["runtime_ms"].get<double>()));
  EXPECT_EQ(json::parse(r.out), json::parse(expected.dump()));
  EXPECT_EQ(json::parse(slurp(dir_ / "out" / "report.json")), json::parse(expected.dump()));
  auto csv = slurp(dir_ / "rows.csv");
  EXPECT_EQ(csv.rfind(csv_header() + "\n", 0), 0u);

  ASSERT_EQ(run_cli({"--config", config_path(), "--ratio", "1", "--out", (dir_ / "full").string(), "sample"}).code, 0);
  auto full = run_cli({"--config", config_path(), "evaluate", "--sample", (dir_ / "full").string()});
  ASSERT_EQ(full.code, 0) << full.err;
  auto report = json::parse(full.out);
  EXPECT_EQ(report["ntds"].get<double>(), 0.0);
  EXPECT_EQ(report["etds"].get<double>(), 0.0);
  EXPECT_EQ(report["gre"].get<double>(), 0.0);
  EXPECT_EQ(report["mpr"]["macro"].get<double>(), 1.0);
}

TEST_F(CliTest, CorruptedSampleIsIoErrorWithLine) {
  ASSERT_EQ(run_cli({"--config", config_path(), "sample"}).code, 0);
  auto nodes = slurp(dir_ / "out" / "nodes.tsv");
  spit(dir_ / "out" / "nodes.tsv", nodes + "broken-line-without-tab\n");
  auto r = run_cli({"--config", config_path(), "evaluate"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("line"), std::string::npos) << r.err;
}

TEST_F(CliTest, SampleFromAnotherGraphIsMismatch) {
  ASSERT_EQ(run_cli({"--config", config_path(), "sample"}).code, 0);
  auto nodes = slurp(dir_ / "out" / "nodes.tsv");
  spit(dir_ / "out" / "nodes.tsv", nodes + "stranger_1\tA\n");
  EXPECT_EQ(run_cli({"--config", config_path(), "evaluate"}).code, 3);
  // a well-typed P-V edge absent from the original
  NodeId p = 0, v = 0;
  for (NodeId cand_p : graph_.nodes_of_type(1))
    for (NodeId cand_v : graph_.nodes_of_type(2))
      if (graph_.find_edge(cand_p, cand_v) == HeteroGraph::npos) {
        p = cand_p;
        v = cand_v;
      }
  ASSERT_NE(p, v);
  spit(dir_ / "out" / "nodes.tsv", graph_.node_label(p) + "\tP\n" + graph_.node_label(v) + "\tV\n");
  spit(dir_ / "out" / "edges.tsv", graph_.node_label(p) + "\t" + graph_.node_label(v) + "\tPV\n");
  fs::remove(dir_ / "out" / "sample.json");
  auto r = run_cli({"--config", config_path(), "evaluate"});
  EXPECT_EQ(r.code, 3) << r.err;
}

std::string strip_runtime(const std::string& csv) {
  std::stringstream in(csv);
  std::string line, out;
  while (std::getline(in, line)) out += line.substr(0, line.rfind(',')) + "\n";
  return out;
}

TEST_F(CliTest, SweepProducesAllCellsAndResumes) {
  auto doc = base_config();
  doc["sweep"] = {{"methods", {"heterosample", "irv"}}, {"ratios", {0.1, 0.2, 0.3, 0.4, 0.5}}, {"seeds", {1, 2, 3}}};
  write_config(doc);
  auto first = run_cli({"--config", config_path(), "--threads", "3", "sweep"});
  ASSERT_EQ(first.code, 0) << first.err;
  const auto full = slurp(dir_ / "out" / "sweep.csv");
  EXPECT_EQ(std::count(full.begin(), full.end(), '\n'), 31);
  EXPECT_EQ(first.out, full);

  // simulate an interruption: keep the header and 11 rows
  std::stringstream in(full);
  std::string line, partial;
  for (int i = 0; i < 12 && std::getline(in, line); ++i) partial += line + "\n";
  spit(dir_ / "out" / "sweep.csv", partial);
  auto resumed = run_cli({"--config", config_path(), "sweep"});
  ASSERT_EQ(resumed.code, 0) << resumed.err;
  const auto after = slurp(dir_ / "out" / "sweep.csv");
  EXPECT_EQ(strip_runtime(after), strip_runtime(full));
  EXPECT_NE(resumed.err.find("19 cell(s) run, 11 reused"), std::string::npos) << resumed.err;

  auto again = run_cli({"--config", config_path(), "sweep"});
  EXPECT_EQ(slurp(dir_ / "out" / "sweep.csv"), after);
  EXPECT_NE(again.err.find("0 cell(s) run"), std::string::npos);
}

TEST_F(CliTest, SynthIsDeterministic) {
  auto doc = json::parse(R"({
    "output": "g1",
    "synth": {"node_types": [{"label": "A", "count": 100}, {"label": "B", "count": 50}],
              "edge_types": [{"label": "AB", "endpoints": ["A", "B"], "count": 200}], "seed": 7}
  })");
  write_config(doc, "synth.json");
  ASSERT_EQ(run_cli({"--config", config_path("synth.json"), "synth"}).code, 0);
  ASSERT_EQ(run_cli({"--config", config_path("synth.json"), "--out", (dir_ / "g2").string(), "synth"}).code, 0);
  EXPECT_EQ(slurp(dir_ / "g1" / "nodes.tsv"), slurp(dir_ / "g2" / "nodes.tsv"));
  EXPECT_EQ(slurp(dir_ / "g1" / "edges.tsv"), slurp(dir_ / "g2" / "edges.tsv"));
  auto schema = read_schema_file(dir_ / "g1" / "schema.json");
  auto g = load_graph_files(dir_ / "g1" / "nodes.tsv", dir_ / "g1" / "edges.tsv", schema);
  EXPECT_EQ(g.num_nodes(), 150u);
  EXPECT_EQ(g.num_edges(), 200u);
}

TEST_F(CliTest, BenchListsMethodsAndRejectsUnknown) {
  auto doc = base_config();
  doc["bench"] = {{"methods", {"heterosample", "irv", "ff"}}, {"repeats", 3}};
  write_config(doc);
  auto r = run_cli({"--config", config_path(), "bench"});
  ASSERT_EQ(r.code, 0) << r.err;
  for (auto m : {"heterosample,", "irv,", "ff,"}) EXPECT_NE(r.out.find(std::string("\n") + m), std::string::npos);
  EXPECT_TRUE(fs::exists(dir_ / "out" / "bench.csv"));
  doc["bench"]["methods"] = {"irv", "tls-e"};
  write_config(doc);
  EXPECT_EQ(run_cli({"--config", config_path(), "bench"}).code, 2);
  EXPECT_EQ(run_cli({"--config", config_path(), "--method", "mystery", "bench"}).code, 2);
}

TEST_F(CliTest, CheckConfig) {
  auto ok = run_cli({"--config", config_path(), "--check-config"});
  ASSERT_EQ(ok.code, 0) << ok.err;
  EXPECT_EQ(json::parse(ok.out)["status"], "ok");
  auto doc = base_config();
  doc["importance"]["metapaths"] = {{{"path", "A-V"}, {"beta", 1.0}}};
  write_config(doc);
  EXPECT_EQ(run_cli({"--config", config_path(), "--check-config"}).code, 2);
}

TEST_F(CliTest, BaselineMethodsRunWithoutImportance) {
  auto doc = base_config();
  doc.erase("importance");
  doc["method"] = "rw";
  write_config(doc);
  auto r = run_cli({"--config", config_path(), "sample"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto sidecar = json::parse(slurp(dir_ / "out" / "sample.json"));
  EXPECT_EQ(sidecar["method"], "rw");
  EXPECT_EQ(sidecar["num_nodes"].get<std::size_t>(), sample_budget(0.3, graph_.num_nodes()));
}

TEST_F(CliTest, HelpExitsZero) {
  auto r = run_cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("sweep"), std::string::npos);
}

}  // namespace
}  // namespace hetsample
