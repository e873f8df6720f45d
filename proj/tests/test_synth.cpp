// Copyright 2026 The hetgraph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "hetgraph/error.hpp"
#include "hetgraph/metrics.hpp"
#include "hetgraph/synth.hpp"

using namespace hetgraph;

TEST_CASE("fig2 structure") {
  Dataset d = build_fig2();
  CHECK(d.graph.num_nodes() == kFig2Nodes);
  CHECK(d.graph.num_edges() == kFig2Edges);
  CHECK(d.labels.num_classes() == 3);
  CHECK(d.class_names == std::vector<std::string>{"green", "orange", "red"});
  CHECK(d.labels.class_sizes() == std::vector<std::size_t>{64, 24, 25});

  auto n0 = d.graph.neighbors(0);
  CHECK(std::vector<NodeId>(n0.begin(), n0.end()) == std::vector<NodeId>{1, 2, 3, 4, 5, 6, 7, 8});
  for (NodeId v : n0) CHECK(d.labels[v] != d.labels[0]);
  CHECK(d.graph.degree(1) == 25);
  CHECK(d.graph.degree(9) == 40);
  CHECK(d.graph.degree(33) == 20);
  CHECK(d.graph.degree(97) == 32);
}

TEST_CASE("fig2 node 0 headline values") {
  Dataset d = build_fig2();
  CHECK(local_homophily(d.graph, d.labels, 0) == 0.0);
  CHECK(two_ncs_node(d.graph, d.labels, 0) ==
        doctest::Approx((0.0 / 8.0 + 8.0 * 24.0 / 25.0) / 9.0).epsilon(1e-14));
  CHECK(ccns_node(d.graph, d.labels, 0) ==
        doctest::Approx(8.0 / std::sqrt(1088.0)).epsilon(1e-14));
}

TEST_CASE("planted partition extremes") {
  Dataset cliques = build_planted_partition({{5, 7}, 1.0, 0.0, 0});
  CHECK(cliques.graph.num_edges() == 10 + 21);
  CHECK(edge_homophily(cliques.graph, cliques.labels) == 1.0);

  Dataset bip = build_planted_partition({{6, 6}, 0.0, 1.0, 0});
  CHECK(bip.graph.num_edges() == 36);
  CHECK(edge_homophily(bip.graph, bip.labels) == 0.0);
}

TEST_CASE("planted partition at moderate density") {
  PlantedPartitionSpec spec{{50, 50}, 0.5, 0.05, 42};
  const double expected = (2.0 * 1225.0 * 0.5) / (2.0 * 1225.0 * 0.5 + 2500.0 * 0.05);
  CHECK(expected_homophily(spec) == doctest::Approx(expected).epsilon(1e-15));
  Dataset d = build_planted_partition(spec);
  const double h = edge_homophily(d.graph, d.labels);
  CHECK(h > 0.7);
  CHECK(std::abs(h - expected) < 0.05);
}

TEST_CASE("planted partition layout and determinism") {
  PlantedPartitionSpec spec{{3, 4, 2, 1, 1, 1, 1, 1, 1, 1, 2}, 0.6, 0.2, 5};
  Dataset a = build_planted_partition(spec);
  Dataset b = build_planted_partition(spec);
  CHECK(a.graph == b.graph);
  CHECK(a.labels == b.labels);
  CHECK(a.class_names.front() == "00");
  CHECK(a.class_names.back() == "10");
  CHECK(std::is_sorted(a.class_names.begin(), a.class_names.end()));
  CHECK(a.labels[0] == 0);
  CHECK(a.labels[3] == 1);
  CHECK(a.labels[7] == 2);
  spec.seed = 6;
  CHECK_FALSE(build_planted_partition(spec).graph == a.graph);

  CHECK_THROWS_AS(build_planted_partition({{5}, 1.5, 0.0, 0}), InputError);
  CHECK_THROWS_AS(build_planted_partition({{}, 0.5, 0.0, 0}), InputError);
}
