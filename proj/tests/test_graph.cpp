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
#include <numeric>

#include "doctest.h"
#include "hetgraph/error.hpp"
#include "hetgraph/graph.hpp"
#include "hetgraph/random.hpp"
#include "hetgraph/synth.hpp"
#include "oracles.hpp"

using namespace hetgraph;

namespace {

std::vector<NodeId> as_vec(std::span<const NodeId> s) { return {s.begin(), s.end()}; }

std::vector<NodeId> iota_range(NodeId first, NodeId last) {
  std::vector<NodeId> v(last - first + 1);
  std::iota(v.begin(), v.end(), first);
  return v;
}

Graph path3() { return build_graph(3, std::vector<Edge>{{0, 1}, {1, 2}}); }

void check_invariants(const Graph& g) {
  std::size_t degree_sum = 0;
  auto offsets = g.row_offsets();
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    CHECK(offsets[u] <= offsets[u + 1]);
    auto nbrs = g.neighbors(u);
    degree_sum += nbrs.size();
    CHECK(std::is_sorted(nbrs.begin(), nbrs.end()));
    CHECK(std::adjacent_find(nbrs.begin(), nbrs.end()) == nbrs.end());
    for (NodeId v : nbrs) {
      CHECK(v != u);
      CHECK(v < g.num_nodes());
      CHECK(g.has_edge(v, u));
    }
    CHECK(g.closed_neighborhood(u).size() == g.degree(u) + 1);
  }
  CHECK(degree_sum == 2 * g.num_edges());
  CHECK(offsets.back() == 2 * g.num_edges());
}

}  // namespace

TEST_CASE("build_graph symmetrizes, deduplicates and strips self-loops") {
  BuildStats stats;
  Graph g = build_graph(3, std::vector<Edge>{{0, 1}, {1, 0}, {1, 1}, {1, 2}}, &stats);
  CHECK(g.num_edges() == 2);
  CHECK(as_vec(g.neighbors(1)) == std::vector<NodeId>{0, 2});
  CHECK(stats.input_pairs == 4);
  CHECK(stats.self_loops == 1);
  CHECK(stats.duplicate_pairs == 1);
  // (1,2) has no reverse in the input; (0,1) does.
  CHECK(stats.asymmetric_pairs == 1);
  check_invariants(g);
}

TEST_CASE("build_graph on an empty edge list") {
  Graph g = build_graph(2, std::vector<Edge>{});
  CHECK(g.num_nodes() == 2);
  CHECK(g.num_edges() == 0);
  CHECK(g.neighbors(0).empty());
  CHECK(g.neighbors(1).empty());
}

TEST_CASE("build_graph rejects out-of-range endpoints and names the pair") {
  try {
    build_graph(3, std::vector<Edge>{{0, 1}, {2, 7}});
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("(2, 7)") != std::string::npos);
    CHECK(std::string(e.what()).find("#1") != std::string::npos);
  }
}

TEST_CASE("neighbors and closed_neighborhood") {
  Graph g = path3();
  CHECK(as_vec(g.neighbors(1)) == std::vector<NodeId>{0, 2});
  CHECK(g.closed_neighborhood(0) == std::vector<NodeId>{0, 1});
  CHECK(g.closed_neighborhood(1) == std::vector<NodeId>{0, 1, 2});

  Graph iso = build_graph(4, std::vector<Edge>{{0, 1}});
  CHECK(iso.neighbors(3).empty());
  CHECK(iso.closed_neighborhood(3) == std::vector<NodeId>{3});

  CHECK_THROWS_AS(g.neighbors(3), InputError);
  CHECK_THROWS_AS(g.closed_neighborhood(99), InputError);
}

TEST_CASE("fig2 neighborhoods") {
  const Dataset ds = build_fig2();
  const Graph& g = ds.graph;
  CHECK(as_vec(g.neighbors(0)) == iota_range(1, 8));

  // Enumerated from the construction: 9 is tied to the orange hub and the
  // first green group.
  std::vector<NodeId> expect9 = iota_range(1, 8);
  auto green = iota_range(33, 64);
  expect9.insert(expect9.end(), green.begin(), green.end());
  CHECK(as_vec(g.neighbors(9)) == expect9);

  auto closed1 = g.closed_neighborhood(1);
  std::vector<NodeId> expect1{0, 1};
  auto reds = iota_range(9, 32);
  expect1.insert(expect1.end(), reds.begin(), reds.end());
  CHECK(closed1 == expect1);
  CHECK(closed1.size() == 26);
  check_invariants(g);
}

TEST_CASE("build_graph is idempotent on its own edge set") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = oracle::random_fixture(rng, 40, 4);
    Graph g = build_graph(f.n, f.edges);
    check_invariants(g);
    Graph again = build_graph(f.n, g.edges());
    CHECK(again == g);
  }
}

TEST_CASE("permute: identity, swap and inverse") {
  Graph g = path3();
  LabelSet labels({0, 0, 1}, 2);

  std::vector<NodeId> identity{0, 1, 2};
  auto [gi, li] = permute(g, labels, identity);
  CHECK(gi == g);
  CHECK(li == labels);

  std::vector<NodeId> swap01{1, 0, 2};
  auto [gs, ls] = permute(g, labels, swap01);
  std::vector<std::size_t> deg, deg_swapped;
  for (NodeId u = 0; u < 3; ++u) {
    deg.push_back(g.degree(u));
    deg_swapped.push_back(gs.degree(u));
  }
  std::sort(deg.begin(), deg.end());
  std::sort(deg_swapped.begin(), deg_swapped.end());
  CHECK(deg == deg_swapped);
  CHECK(gs.has_edge(1, 0));
  CHECK(gs.has_edge(0, 2));  // old edge (1, 2)

  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    auto f = oracle::random_fixture(rng, 30, 3);
    Graph h = build_graph(f.n, f.edges);
    LabelSet y(f.y, f.k);
    std::vector<NodeId> perm(f.n);
    std::iota(perm.begin(), perm.end(), NodeId{0});
    rng.shuffle(std::span<NodeId>(perm));
    auto [hp, yp] = permute(h, y, perm);
    auto inv = inverse_permutation(perm);
    auto [back, yback] = permute(hp, yp, inv);
    CHECK(back == h);
    CHECK(yback == y);
  }
}

TEST_CASE("permute rejects non-bijections") {
  Graph g = path3();
  LabelSet labels({0, 0, 1}, 2);
  CHECK_THROWS_AS(permute(g, labels, std::vector<NodeId>{0, 0, 2}), InputError);
  CHECK_THROWS_AS(permute(g, labels, std::vector<NodeId>{0, 1, 3}), InputError);
  CHECK_THROWS_AS(permute(g, labels, std::vector<NodeId>{0, 1}), InputError);
}

TEST_CASE("LabelSet validation and masks") {
  CHECK_THROWS_AS(LabelSet({0, 2}, 2), InputError);
  CHECK_THROWS_AS(LabelSet({0}, 0), InputError);

  LabelSet y({0, 1, 1, 0}, 2);
  CHECK_FALSE(y.has_mask());
  CHECK(y.visible(3));
  CHECK(y.class_sizes() == std::vector<std::size_t>{2, 2});

  LabelSet masked = y.with_visible(std::vector<NodeId>{1, 3});
  CHECK(masked.has_mask());
  CHECK_FALSE(masked.visible(0));
  CHECK(masked.visible(1));
  CHECK(masked.visible_nodes() == std::vector<NodeId>{1, 3});
  CHECK(masked.without_mask() == y);
  CHECK_THROWS_AS(y.with_visible(std::vector<NodeId>{4}), InputError);
}
