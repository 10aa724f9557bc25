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

#include <random>

#include "fixtures.hpp"
#include "hetsample/error.hpp"
#include "hetsample/importance.hpp"
#include "hetsample/metapath.hpp"

namespace hetsample {
namespace {

using testing::dblp_schema;
using testing::graph_from_text;

EdgeTypeWeights dblp_weights(double ap, double pc, double pt) {
  EdgeTypeWeights w(4);
  w.set(0, 1, ap);
  w.set(1, 2, pc);
  w.set(1, 3, pt);
  return w;
}

std::size_t brute_walk_count(const SchemaGraph& s, NodeTypeId t, std::size_t len) {
  if (len == 0) return 0;
  std::size_t total = 0;
  for (auto r : s.incident(t)) {
    const auto& def = s.edge_type(r);
    // a self-typed edge type can be crossed only one way at the type level
    total += 1 + brute_walk_count(s, def.other(t), len - 1);
  }
  return total;
}

TEST(Enumerate, SingleEdgeType) {
  auto s = testing::ap_schema();
  auto out = enumerate_schemas(s, 0, 1);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].label(s), "A-P");
}

TEST(Enumerate, DblpLengthTwoFromAuthor) {
  auto s = dblp_schema();
  auto out = enumerate_schemas(s, 0, 2);
  std::vector<std::string> labels;
  for (const auto& p : out) labels.push_back(p.label(s));
  EXPECT_EQ(labels, (std::vector<std::string>{"A-P", "A-P-A", "A-P-C", "A-P-T"}));
}

TEST(Enumerate, ZeroLengthAndUnknownType) {
  EXPECT_THROW(enumerate_schemas(dblp_schema(), 0, 0), ParameterError);
  EXPECT_THROW(enumerate_schemas(dblp_schema(), 9, 2), LookupError);
}

TEST(Enumerate, SizeMatchesTypeGraphWalkCountAndIsSorted) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const auto types = 1 + rng() % 5;
    auto s = testing::random_schema(rng, types, 1 + rng() % 5);
    for (NodeTypeId t = 0; t < types; ++t)
      for (std::size_t l = 1; l <= 3; ++l) {
        auto out = enumerate_schemas(s, t, l);
        EXPECT_EQ(out.size(), brute_walk_count(s, t, l));
        EXPECT_TRUE(std::is_sorted(out.begin(), out.end()));
        EXPECT_EQ(std::adjacent_find(out.begin(), out.end()), out.end());
        for (const auto& p : out) EXPECT_NO_THROW(p.validate(s));
      }
  }
}

TEST(SchemaImportance, DirectProducts) {
  auto s = dblp_schema();
  auto w = dblp_weights(0.4, 0.1, 0.1);
  EXPECT_DOUBLE_EQ(schema_importance(MetaPathSchema::parse("A-P", s), w), 0.4);
  EXPECT_NEAR(schema_importance(MetaPathSchema::parse("A-P-A", s), w), 0.16, 1e-15);
  EXPECT_NEAR(schema_importance(MetaPathSchema::parse("A-P-C-P-A", s), w), 0.4 * 0.1 * 0.1 * 0.4, 1e-15);
}

TEST(SchemaImportance, MissingWeightIsConfigError) {
  auto s = dblp_schema();
  EdgeTypeWeights w(4);
  w.set(0, 1, 0.5);
  EXPECT_THROW(schema_importance(MetaPathSchema::parse("A-P-C", s), w), ConfigError);
}

TEST(SchemaImportance, ConcatenationIsMultiplicative) {
  auto s = dblp_schema();
  auto w = dblp_weights(0.3, 0.15, 0.05);
  for (const auto& head : enumerate_schemas(s, 0, 3))
    for (const auto& tail : enumerate_schemas(s, head.node_types().back(), 2))
      EXPECT_NEAR(schema_importance(head.concat(tail), w), schema_importance(head, w) * schema_importance(tail, w),
                  1e-15);
}

TEST(WeightedImportance, BetaScaling) {
  auto s = dblp_schema();
  EdgeTypeWeights w(4);
  w.set(0, 1, 0.4);
  w.set(1, 2, 0.5);
  w.set(1, 3, 0.1);
  std::vector<MetaPathSchema> paths{MetaPathSchema::parse("A-P-A", s), MetaPathSchema::parse("P-C-P", s)};
  std::vector<double> beta{0.7, 0.3};
  EXPECT_NEAR(weighted_schema_importance(0, beta, paths, w), 0.112, 1e-12);
  EXPECT_NEAR(weighted_schema_importance(1, beta, paths, w), 0.075, 1e-12);
  std::vector<double> zero{0.0, 1.0};
  EXPECT_EQ(weighted_schema_importance(0, zero, paths, w), 0.0);
  std::vector<double> one{1.0};
  std::span<const MetaPathSchema> first(paths.data(), 1);
  EXPECT_DOUBLE_EQ(weighted_schema_importance(0, one, first, w), schema_importance(paths[0], w));
  EXPECT_THROW(weighted_schema_importance(2, beta, paths, w), ParameterError);
}

TEST(Parse, ExplicitAndInferredForms) {
  auto s = dblp_schema();
  auto a = MetaPathSchema::parse("A-P-A", s);
  auto b = MetaPathSchema::parse("A-[PA]-P-[PA]-A", s);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.length(), 2u);
  EXPECT_THROW(MetaPathSchema::parse("A-C", s), ConfigError);
  EXPECT_THROW(MetaPathSchema::parse("A", s), ConfigError);
  EXPECT_THROW(MetaPathSchema::parse("A-X", s), ConfigError);
  SchemaGraph two({"A", "P"}, {{"W", 0, 1}, {"R", 0, 1}});
  EXPECT_THROW(MetaPathSchema::parse("A-P", two), ConfigError);
  auto explicit_path = MetaPathSchema::parse("A-[R]-P", two);
  EXPECT_EQ(explicit_path.label(two), "A-[R]-P");
}

TEST(CountInstances, TwoAuthorFixture) {
  auto g = testing::two_author_graph();
  auto apa = MetaPathSchema::parse("A-P-A", g.schema());
  EXPECT_EQ(count_instances(g, apa), 4u);
  EXPECT_EQ(count_instances(g, MetaPathSchema::parse("A-P", g.schema())), 2u);
  std::vector<NodeId> kept{g.node_id("a1"), g.node_id("p1")};
  EXPECT_EQ(instances_preserved(g, kept, apa), 1u);
  EXPECT_EQ(instances_preserved(g, {}, apa), 0u);
  std::vector<NodeId> all{0, 1, 2};
  EXPECT_EQ(instances_preserved(g, all, apa), 4u);
}

TEST(CountInstances, ZeroEdgesOfStepType) {
  auto g = graph_from_text(dblp_schema(), "a1\tA\np1\tP\nc1\tC\n", "p1\ta1\tPA\n");
  EXPECT_EQ(count_instances(g, MetaPathSchema::parse("A-P-C", g.schema())), 0u);
}

TEST(CountInstances, LengthOneIsTwiceTheEdgeCount) {
  std::mt19937_64 rng(30);
  SchemaGraph s({"A"}, {{"AA", 0, 0}});
  auto g = testing::random_graph(rng, s, 30, 60);
  EXPECT_EQ(count_instances(g, MetaPathSchema::parse("A-A", s)), 2 * g.num_edges());
  auto d = testing::random_graph(rng, dblp_schema(), 30, 60);
  auto ap = MetaPathSchema::parse("A-P", d.schema());
  auto pa = MetaPathSchema::parse("P-A", d.schema());
  EXPECT_EQ(count_instances(d, ap) + count_instances(d, pa), 2 * d.edge_type_counts()[0]);
}

TEST(CountInstances, MatrixMethodEqualsExhaustiveDfs) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const auto types = 1 + rng() % 4;
    auto s = testing::random_schema(rng, types, 1 + rng() % 4);
    auto g = testing::random_graph(rng, s, 5 + rng() % 46, rng() % 120);
    std::vector<bool> mask(g.num_nodes());
    for (std::size_t v = 0; v < mask.size(); ++v) mask[v] = rng() % 3 != 0;
    for (NodeTypeId t = 0; t < types; ++t)
      for (const auto& p : enumerate_schemas(s, t, 3)) {
        EXPECT_EQ(count_instances(g, p), testing::dfs_count(g, p));
        EXPECT_EQ(count_instances(g, p, mask), testing::dfs_count(g, p, mask));
      }
  }
}

TEST(CountInstances, PreservedIsMonotoneInKeptSet) {
  std::mt19937_64 rng(77);
  auto s = dblp_schema();
  for (int trial = 0; trial < 20; ++trial) {
    auto g = testing::random_graph(rng, s, 40, 90);
    std::vector<NodeId> small, large;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      const auto coin = rng() % 3;
      if (coin == 0) small.push_back(v);
      if (coin <= 1) large.push_back(v);
    }
    for (const auto& p : enumerate_schemas(s, 0, 4))
      EXPECT_LE(instances_preserved(g, small, p), instances_preserved(g, large, p));
  }
}

TEST(CountInstances, OverflowIsDomainError) {
  // complete bipartite 200x200: A-P-A-...-A of length 20 has 200^21 walks
  GraphBuilder b(testing::ap_schema());
  for (int i = 0; i < 200; ++i) b.add_node("a" + std::to_string(i), 0);
  for (int i = 0; i < 200; ++i) b.add_node("p" + std::to_string(i), 1);
  for (NodeId a = 0; a < 200; ++a)
    for (NodeId p = 200; p < 400; ++p) b.add_edge(a, p, 0);
  auto g = std::move(b).build();
  std::string text = "A";
  for (int i = 0; i < 10; ++i) text += "-P-A";
  EXPECT_THROW(count_instances(g, MetaPathSchema::parse(text, g.schema())), DomainError);
}

TEST(GuidedWalk, NoConformingNeighborTruncates) {
  auto g = graph_from_text(testing::ap_schema(), "a1\tA\n", "");
  auto w = guided_walk(g, 0, MetaPathSchema::parse("A-P-A", g.schema()));
  EXPECT_EQ(w.nodes, std::vector<NodeId>{0});
  EXPECT_TRUE(w.edges.empty());
  EXPECT_TRUE(w.truncated);
}

TEST(GuidedWalk, DegreeRuleOnPathGraph) {
  auto apa = MetaPathSchema::parse("A-P-A", testing::ap_schema());
  // a2 has the extra paper, so it outranks a1 at the second hop
  auto g = graph_from_text(testing::ap_schema(), "a1\tA\np1\tP\na2\tA\np2\tP\n",
                           "a1\tp1\tAP\np1\ta2\tAP\na2\tp2\tAP\n");
  auto w = guided_walk(g, g.node_id("a1"), apa);
  EXPECT_EQ(w.nodes, (std::vector<NodeId>{g.node_id("a1"), g.node_id("p1"), g.node_id("a2")}));
  EXPECT_FALSE(w.truncated);
  EXPECT_EQ(w.edges.size(), 2u);
  // equal degrees: the lower id, a1 itself, wins
  auto flat = graph_from_text(testing::ap_schema(), "a1\tA\np1\tP\na2\tA\n", "a1\tp1\tAP\np1\ta2\tAP\n");
  auto w2 = guided_walk(flat, flat.node_id("a1"), apa);
  EXPECT_EQ(w2.nodes, (std::vector<NodeId>{0, 1, 0}));
}

TEST(GuidedWalk, StartTypeMismatchIsRejected) {
  auto g = testing::two_author_graph();
  EXPECT_THROW(guided_walk(g, g.node_id("p1"), MetaPathSchema::parse("A-P-A", g.schema())), ParameterError);
}

TEST(GuidedWalk, ConformsToSchemaAndIsPure) {
  std::mt19937_64 rng(8);
  auto s = dblp_schema();
  auto g = testing::random_graph(rng, s, 60, 200);
  for (NodeTypeId t = 0; t < 4; ++t)
    for (const auto& p : enumerate_schemas(s, t, 4))
      for (NodeId v : g.nodes_of_type(t)) {
        auto w = guided_walk(g, v, p);
        EXPECT_EQ(w.nodes.size(), w.edges.size() + 1);
        EXPECT_EQ(w.truncated, w.edges.size() < p.length());
        for (std::size_t i = 0; i < w.nodes.size(); ++i) EXPECT_EQ(g.node_type(w.nodes[i]), p.node_types()[i]);
        for (std::size_t i = 0; i < w.edges.size(); ++i) {
          const auto& e = g.edge(w.edges[i]);
          EXPECT_EQ(e.type, p.edge_types()[i]);
          EXPECT_TRUE((e.src == w.nodes[i] && e.dst == w.nodes[i + 1]) ||
                      (e.dst == w.nodes[i] && e.src == w.nodes[i + 1]));
        }
        auto again = guided_walk(g, v, p);
        EXPECT_EQ(again.nodes, w.nodes);
        EXPECT_EQ(again.edges, w.edges);
      }
}

TEST(GuidedWalk, ViaFirstHopAndCandidateRanking) {
  auto g = graph_from_text(testing::ap_schema(), "a1\tA\np1\tP\np2\tP\na2\tA\n",
                           "a1\tp1\tAP\na1\tp2\tAP\na2\tp2\tAP\n");
  auto apa = MetaPathSchema::parse("A-P-A", g.schema());
  auto ranked = ranked_step_candidates(g, g.node_id("a1"), apa, 0);
  EXPECT_EQ(ranked, (std::vector<NodeId>{g.node_id("p2"), g.node_id("p1")}));
  auto via = guided_walk_via(g, g.node_id("a1"), g.node_id("p1"), apa);
  EXPECT_EQ(via.nodes, (std::vector<NodeId>{g.node_id("a1"), g.node_id("p1"), g.node_id("a1")}));
}

TEST(ImportanceConfig, Validation) {
  auto s = dblp_schema();
  auto cfg = ImportanceConfig::uniform(s);
  EXPECT_NO_THROW(cfg.validate(s));
  cfg.alpha[0] = 0.9;
  EXPECT_THROW(cfg.validate(s), ConfigError);
  cfg.normalize();
  EXPECT_NO_THROW(cfg.validate(s));
  auto missing = ImportanceConfig::uniform(s);
  missing.weights = EdgeTypeWeights(4);
  missing.weights.set(0, 1, 0.5);
  EXPECT_THROW(missing.validate(s), ConfigError);
  auto neg = ImportanceConfig::uniform(s);
  neg.alpha = {1.5, -0.5, 0.0, 0.0};
  EXPECT_THROW(neg.validate(s), ConfigError);
}

}  // namespace
}  // namespace hetsample
