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

#include <algorithm>

#include "fixtures.hpp"
#include "hetsample/error.hpp"
#include "hetsample/synthetic.hpp"

namespace hetsample {
namespace {

SyntheticParams two_type(std::size_t a, std::size_t b, std::size_t edges, std::uint64_t seed = 7) {
  SyntheticParams p;
  p.node_types = {{"A", a}, {"B", b}};
  p.edge_types = {{"AB", "A", "B", edges}};
  p.seed = seed;
  return p;
}

TEST(Synthetic, SameSeedIsByteIdentical) {
  auto p = two_type(100, 50, 200);
  EXPECT_EQ(testing::serialize(generate_synthetic(p)), testing::serialize(generate_synthetic(p)));
  auto q = p;
  q.seed = 8;
  EXPECT_NE(testing::serialize(generate_synthetic(p)), testing::serialize(generate_synthetic(q)));
}

TEST(Synthetic, ExactNodeAndEdgeCounts) {
  auto g = generate_synthetic(two_type(100, 50, 200));
  EXPECT_EQ(g.num_nodes(), 150u);
  EXPECT_EQ(g.node_type_counts(), (std::vector<std::size_t>{100, 50}));
  EXPECT_EQ(g.num_edges(), 200u);
}

TEST(Synthetic, ConfiguredProportions) {
  SyntheticParams p;
  p.node_types = {{"A", 600}, {"B", 300}, {"C", 100}};
  p.edge_types = {{"AB", "A", "B", 1500}, {"BC", "B", "C", 500}, {"AA", "A", "A", 400}};
  p.seed = 3;
  auto g = generate_synthetic(p);
  auto d = node_type_distribution(g);
  EXPECT_NEAR(d[0], 0.6, 1e-3);
  EXPECT_NEAR(d[1], 0.3, 1e-3);
  EXPECT_NEAR(d[2], 0.1, 1e-3);
  EXPECT_EQ(g.edge_type_counts(), (std::vector<std::size_t>{1500, 500, 400}));
  for (const auto& e : g.edges()) EXPECT_NE(e.src, e.dst);
}

TEST(Synthetic, SkewProducesHubs) {
  auto g = generate_synthetic(two_type(500, 500, 3000, 11));
  std::vector<std::size_t> deg;
  for (NodeId v = 0; v < g.num_nodes(); ++v) deg.push_back(g.degree(v));
  std::sort(deg.begin(), deg.end());
  EXPECT_GT(deg.back(), deg[deg.size() / 2]);
}

TEST(Synthetic, DenseRequestUsesEnumeration) {
  auto g = generate_synthetic(two_type(10, 10, 95));
  EXPECT_EQ(g.num_edges(), 95u);
  auto full = generate_synthetic(two_type(10, 10, 100));
  EXPECT_EQ(full.num_edges(), 100u);
}

TEST(Synthetic, InfeasibleCountsAreParameterErrors) {
  EXPECT_THROW(generate_synthetic(two_type(10, 10, 101)), ParameterError);
  SyntheticParams p;
  p.node_types = {{"A", 4}};
  p.edge_types = {{"AA", "A", "A", 7}};  // capacity 4*3/2 = 6
  EXPECT_THROW(generate_synthetic(p), ParameterError);
  p.edge_types[0].count = 6;
  EXPECT_EQ(generate_synthetic(p).num_edges(), 6u);
  auto bad = two_type(10, 10, 5);
  bad.edge_types[0].second = "Z";
  EXPECT_THROW(bad.validate(), ParameterError);
}

}  // namespace
}  // namespace hetsample
