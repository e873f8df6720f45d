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

#include <cmath>
#include <numeric>

#include "doctest.h"
#include "hetgraph/error.hpp"
#include "hetgraph/metrics.hpp"
#include "hetgraph/synth.hpp"
#include "oracles.hpp"

using namespace hetgraph;

namespace {

// 0 - 1 - 2 with labels A A B.
struct Path3 {
  Graph g = build_graph(3, std::vector<Edge>{{0, 1}, {1, 2}});
  LabelSet y{{0, 0, 1}, 2};
};

std::vector<bool> visibility(const LabelSet& y) {
  std::vector<bool> v(y.size());
  for (NodeId u = 0; u < y.size(); ++u) v[u] = y.visible(u);
  return v;
}

}  // namespace

TEST_CASE("edge homophily examples") {
  Path3 p;
  CHECK(edge_homophily(p.g, p.y) == 0.5);
  CHECK(local_homophily(p.g, p.y, 1) == 0.5);
  CHECK(local_homophily(p.g, p.y, 0) == 1.0);
  CHECK(local_homophily(p.g, p.y, 2) == 0.0);

  Graph tri = build_graph(3, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}});
  CHECK(edge_homophily(tri, LabelSet({0, 0, 0}, 1)) == 1.0);
  CHECK(edge_homophily(tri, LabelSet({0, 1, 2}, 3)) == 0.0);

  Graph empty = build_graph(3, {});
  CHECK_THROWS_AS(edge_homophily(empty, LabelSet({0, 0, 0}, 1)), UndefinedError);
  CHECK_THROWS_AS(local_homophily(empty, LabelSet({0, 0, 0}, 1), 1), UndefinedError);
}

TEST_CASE("edge homophily ignores the mask") {
  Path3 p;
  LabelSet masked = p.y.with_visible(std::vector<NodeId>{0});
  CHECK(edge_homophily(p.g, masked) == 0.5);
  CHECK(local_homophily(p.g, masked, 1) == 0.5);
}

TEST_CASE("two_ncs examples on a path") {
  Path3 p;
  CHECK(two_ncs_node(p.g, p.y, 0) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(two_ncs_node(p.g, p.y, 1) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(two_ncs_node(p.g, p.y, 2) == 0.0);
  AveragedMetric avg = two_ncs_graph(p.g, p.y);
  CHECK(avg.value == doctest::Approx(1.25 / 3.0).epsilon(1e-15));
  CHECK(avg.evaluated == 3);
  CHECK(avg.undefined == 0);
}

TEST_CASE("two_ncs undefined cases") {
  // Isolated node: N'(u) = {u}, and N'(u) \ {u} is empty.
  Graph g = build_graph(3, std::vector<Edge>{{0, 1}});
  LabelSet y({0, 0, 1}, 2);
  CHECK_THROWS_AS(two_ncs_node(g, y, 2), UndefinedError);
  AveragedMetric avg = two_ncs_graph(g, y);
  CHECK(avg.evaluated == 2);
  CHECK(avg.undefined == 1);
  CHECK(avg.value == 1.0);

  Graph none = build_graph(2, {});
  CHECK_THROWS_AS(two_ncs_graph(none, LabelSet({0, 1}, 2)), UndefinedError);
  CHECK_THROWS_AS(two_ncs_graph(g, y, std::span<const NodeId>{}), InputError);
}

TEST_CASE("two_ncs with hidden labels") {
  Path3 p;
  // Hide node 2: for u = 1, term v=0 sees {0}, v=1 sees {0}, v=2 sees nothing.
  LabelSet masked = p.y.with_visible(std::vector<NodeId>{0, 1});
  CHECK(two_ncs_node(p.g, masked, 1) == 1.0);
  // u = 0: v=0 -> {1} same, v=1 -> {1} same (2 hidden, 0 excluded).
  CHECK(two_ncs_node(p.g, masked, 0) == 1.0);
  // Default subset is the visible nodes.
  AveragedMetric avg = two_ncs_graph(p.g, masked);
  CHECK(avg.evaluated == 2);
}

TEST_CASE("fig2 metric values") {
  Dataset d = build_fig2();
  const Graph& g = d.graph;
  const LabelSet& y = d.labels;
  CHECK(g.num_edges() == 1480);
  CHECK(edge_homophily(g, y) == 0.0);
  CHECK(local_homophily(g, y, 0) == 0.0);
  CHECK(local_homophily(g, y, 9) == 0.0);
  CHECK(two_ncs_node(g, y, 0) == doctest::Approx(0.8533333333333333).epsilon(1e-12));
  CHECK(ccns_node(g, y, 0) == doctest::Approx(0.24253562503633297).epsilon(1e-12));
  CHECK(label_histogram(g, y, 0) == std::vector<std::uint32_t>{0, 8, 0});
  CHECK(label_histogram(g, y, 9) == std::vector<std::uint32_t>{32, 8, 0});

  CcnsMatrix s = ccns_matrix(g, y);
  const double expected[3][3] = {
      {1.0, 0.27735009811261185, 0.15134118429629909},
      {0.27735009811261185, 0.5555555555555556, 0.6208912000930162},
      {0.15134118429629909, 0.6208912000930162, 0.9418267360027907}};
  for (ClassId a = 0; a < 3; ++a) {
    for (ClassId b = 0; b < 3; ++b) {
      CHECK(s(a, b) == doctest::Approx(expected[a][b]).epsilon(1e-12));
    }
  }
  CHECK(s(2, 2) ==
        doctest::Approx((577.0 + 48.0 * 8.0 / std::sqrt(1088.0)) / 625.0).epsilon(1e-12));
  CHECK(ccns_graph(s) == doctest::Approx(0.8324607638527821).epsilon(1e-12));
  CHECK(ccns_graph(s, CcnsReduction::kFullMean) ==
        doctest::Approx(0.5107274729513556).epsilon(1e-12));
  CHECK(ccns_graph(s, CcnsReduction::kWeightedDiag) ==
        doctest::Approx(0.8927345286141868).epsilon(1e-12));

  CHECK(two_ncs_graph(g, y).value == doctest::Approx(0.660222374934225).epsilon(1e-12));
  CHECK(two_ncs_class(g, y, 0).value == doctest::Approx(0.8119047619047619).epsilon(1e-12));
  CHECK(two_ncs_class(g, y, 1).value == doctest::Approx(0.29132672882672866).epsilon(1e-12));
  CHECK(two_ncs_class(g, y, 2).value == doctest::Approx(0.6260552845528461).epsilon(1e-12));
}

TEST_CASE("ccns reductions by name") {
  CHECK(parse_ccns_reduction("diag_mean") == CcnsReduction::kDiagMean);
  CHECK(parse_ccns_reduction("full_mean") == CcnsReduction::kFullMean);
  CHECK(parse_ccns_reduction("weighted_diag") == CcnsReduction::kWeightedDiag);
  CHECK_FALSE(parse_ccns_reduction("median"));
  for (auto r : {CcnsReduction::kDiagMean, CcnsReduction::kFullMean,
                 CcnsReduction::kWeightedDiag}) {
    CHECK(parse_ccns_reduction(to_string(r)) == r);
  }
}

TEST_CASE("cosine similarity") {
  std::vector<double> a{1, 0}, b{0, 1}, z{0, 0}, c{2, 0};
  CHECK(cosine_similarity(a, b) == 0.0);
  CHECK(cosine_similarity(a, c) == 1.0);
  CHECK(cosine_similarity(a, z) == 0.0);
  CHECK(cosine_similarity(z, z) == 0.0);
}

TEST_CASE("singleton class has undefined node CCNS") {
  Path3 p;
  CHECK_THROWS_AS(ccns_node(p.g, p.y, 2), UndefinedError);
  // Nodes 0 and 1 have histograms (1, 0) and (1, 1).
  CHECK(ccns_node(p.g, p.y, 0) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("two_ncs_class on a class absent from the subset") {
  Path3 p;
  std::vector<NodeId> only_a{0, 1};
  CHECK_THROWS_AS(two_ncs_class(p.g, p.y, 1, std::span<const NodeId>(only_a)), UndefinedError);
}

TEST_CASE("metrics match brute-force oracles on random graphs") {
  Rng rng(20261016);
  for (int trial = 0; trial < 200; ++trial) {
    oracle::Fixture f = oracle::random_fixture(rng, 24, 4);
    Graph g = build_graph(f.n, f.edges);
    std::optional<std::vector<std::uint8_t>> mask;
    if (trial % 2 == 1) {
      mask.emplace(f.n);
      for (auto& m : *mask) m = rng.bernoulli(0.7) ? 1 : 0;
    }
    LabelSet y(f.y, f.k, mask);
    auto adj = oracle::dense_adjacency(f.n, f.edges);
    CAPTURE(trial);

    if (g.num_edges() > 0) CHECK(edge_homophily(g, y) == oracle::edge_homophily(adj, f.y));

    auto vis = visibility(y);
    for (NodeId u = 0; u < f.n; ++u) {
      auto expect = oracle::two_ncs(adj, f.y, vis, u);
      if (expect) {
        // Same summation order, so the cached path must agree bit for bit.
        CHECK(two_ncs_node(g, y, u) == *expect);
      } else {
        CHECK_THROWS_AS(two_ncs_node(g, y, u), UndefinedError);
      }
    }

    auto s = ccns_matrix(g, y, 1 + trial % 3);
    auto expect = oracle::ccns_matrix(adj, f.y, f.k);
    for (std::size_t i = 0; i < expect.size(); ++i) {
      CHECK(s.values()[i] == doctest::Approx(expect[i]).epsilon(1e-12));
    }
  }
}

TEST_CASE("full visibility mask equals no mask") {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    oracle::Fixture f = oracle::random_fixture(rng, 30, 4);
    Graph g = build_graph(f.n, f.edges);
    LabelSet plain(f.y, f.k);
    LabelSet full(f.y, f.k, std::vector<std::uint8_t>(f.n, 1));
    CHECK(two_ncs_nodes(g, plain) == two_ncs_nodes(g, full));
    for (NodeId u = 0; u < f.n; ++u) {
      CHECK(label_histogram(g, plain, u) == label_histogram(g, full, u));
    }
  }
}

TEST_CASE("metric ranges and symmetry") {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    oracle::Fixture f = oracle::random_fixture(rng, 30, 5);
    Graph g = build_graph(f.n, f.edges);
    LabelSet y(f.y, f.k);
    NodeMetrics m = node_metrics(g, y, 2);
    for (NodeId u = 0; u < f.n; ++u) {
      for (const auto* col : {&m.local_h, &m.ccns, &m.two_ncs}) {
        if ((*col)[u]) {
          CHECK((*col)[u].value() >= 0.0);
          CHECK((*col)[u].value() <= 1.0);
        }
      }
      CHECK(m.local_h[u].has_value() == (g.degree(u) > 0));
    }
    CcnsMatrix s = ccns_matrix(g, y);
    for (ClassId a = 0; a < f.k; ++a) {
      for (ClassId b = 0; b < f.k; ++b) {
        CHECK(s(a, b) == s(b, a));
        CHECK(s(a, b) >= 0.0);
        CHECK(s(a, b) <= 1.0 + 1e-12);
      }
    }
    for (auto r : {CcnsReduction::kDiagMean, CcnsReduction::kFullMean,
                   CcnsReduction::kWeightedDiag}) {
      double v = ccns_graph(s, r);
      CHECK(v >= 0.0);
      CHECK(v <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("binary labels: complement flips 2NCS") {
  // With two classes and full visibility, each defined term for label y_u
  // and for the flipped label sums to 1, so the node values do too.
  Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    oracle::Fixture f = oracle::random_fixture(rng, 25, 1);
    for (auto& c : f.y) c = static_cast<ClassId>(rng.below(2));
    Graph g = build_graph(f.n, f.edges);
    LabelSet y(f.y, 2);
    std::vector<ClassId> flipped;
    for (ClassId c : f.y) flipped.push_back(1 - c);
    LabelSet z(flipped, 2);
    auto a = two_ncs_nodes(g, y);
    for (NodeId u = 0; u < f.n; ++u) {
      // Flip every label but u's: the reference class is swapped relative to
      // all other nodes.
      std::vector<ClassId> others = flipped;
      others[u] = f.y[u];
      auto b = two_ncs_nodes(g, LabelSet(others, 2));
      if (a[u]) {
        REQUIRE(b[u]);
        CHECK(*a[u] + *b[u] == doctest::Approx(1.0).epsilon(1e-12));
      }
    }
    if (g.num_edges() > 0) CHECK(edge_homophily(g, y) == edge_homophily(g, z));
  }
}

TEST_CASE("metrics are invariant under node relabeling") {
  Rng rng(123);
  for (int trial = 0; trial < 50; ++trial) {
    oracle::Fixture f = oracle::random_fixture(rng, 30, 4);
    Graph g = build_graph(f.n, f.edges);
    LabelSet y(f.y, f.k);
    std::vector<NodeId> perm(f.n);
    std::iota(perm.begin(), perm.end(), NodeId{0});
    rng.shuffle(std::span<NodeId>(perm));
    auto [pg, py] = permute(g, y, perm);

    if (g.num_edges() > 0) CHECK(edge_homophily(pg, py) == edge_homophily(g, y));
    CcnsMatrix a = ccns_matrix(g, y), b = ccns_matrix(pg, py);
    for (std::size_t i = 0; i < a.values().size(); ++i) {
      CHECK(b.values()[i] == doctest::Approx(a.values()[i]).epsilon(1e-12));
    }
    auto na = node_metrics(g, y), nb = node_metrics(pg, py);
    for (NodeId u = 0; u < f.n; ++u) {
      const NodeId v = perm[u];
      CHECK(na.local_h[u] == nb.local_h[v]);
      REQUIRE(na.two_ncs[u].has_value() == nb.two_ncs[v].has_value());
      if (na.two_ncs[u]) {
        CHECK(*nb.two_ncs[v] == doctest::Approx(*na.two_ncs[u]).epsilon(1e-12));
      }
      REQUIRE(na.ccns[u].has_value() == nb.ccns[v].has_value());
      if (na.ccns[u]) CHECK(*nb.ccns[v] == doctest::Approx(*na.ccns[u]).epsilon(1e-12));
    }
  }
}

TEST_CASE("parallel results equal serial results") {
  Dataset d = build_planted_partition({{60, 50, 40}, 0.2, 0.05, 3});
  auto serial = node_metrics(d.graph, d.labels, 1);
  auto parallel = node_metrics(d.graph, d.labels, 4);
  CHECK(serial.two_ncs == parallel.two_ncs);
  CHECK(serial.ccns == parallel.ccns);
  CHECK(ccns_matrix(d.graph, d.labels, 1).values()[4] ==
        ccns_matrix(d.graph, d.labels, 4).values()[4]);
  CHECK(two_ncs_graph(d.graph, d.labels, std::nullopt, 1).value ==
        two_ncs_graph(d.graph, d.labels, std::nullopt, 3).value);
}
