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

#include "hetgraph/synth.hpp"

#include <cmath>
#include <string>

#include "hetgraph/error.hpp"
#include "hetgraph/random.hpp"

namespace hetgraph {
namespace {

void connect_all(std::vector<Edge>& edges, NodeId a_first, NodeId a_last,
                 const std::vector<NodeId>& others) {
  for (NodeId a = a_first; a <= a_last; ++a) {
    for (NodeId b : others) edges.emplace_back(a, b);
  }
}

std::vector<NodeId> range(NodeId first, NodeId last) {
  std::vector<NodeId> out;
  for (NodeId v = first; v <= last; ++v) out.push_back(v);
  return out;
}

std::vector<NodeId> join(std::vector<NodeId> a, const std::vector<NodeId>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

Dataset build_fig2() {
  enum : ClassId { kGreen = 0, kOrange = 1, kRed = 2 };

  std::vector<ClassId> y(kFig2Nodes);
  auto paint = [&](NodeId first, NodeId last, ClassId c) {
    for (NodeId v = first; v <= last; ++v) y[v] = c;
  };
  paint(0, 0, kRed);
  paint(1, 8, kOrange);
  paint(9, 32, kRed);
  paint(33, 96, kGreen);
  paint(97, 112, kOrange);

  std::vector<Edge> edges;
  connect_all(edges, 1, 8, join({0}, range(9, 32)));
  connect_all(edges, 33, 64, join(range(9, 20), range(97, 104)));
  connect_all(edges, 65, 96, join(range(21, 32), range(105, 112)));

  Dataset ds;
  ds.graph = build_graph(kFig2Nodes, edges, &ds.build);
  ds.labels = LabelSet(std::move(y), 3);
  ds.class_names = {"green", "orange", "red"};
  return ds;
}

Dataset build_planted_partition(const PlantedPartitionSpec& spec) {
  auto valid = [](double p) { return std::isfinite(p) && p >= 0.0 && p <= 1.0; };
  if (!valid(spec.p_in) || !valid(spec.p_out)) {
    throw InputError("planted-partition probabilities must lie in [0, 1]");
  }
  if (spec.class_sizes.empty()) throw InputError("planted partition needs at least one class");

  std::vector<ClassId> y;
  for (std::size_t c = 0; c < spec.class_sizes.size(); ++c) {
    y.insert(y.end(), spec.class_sizes[c], static_cast<ClassId>(c));
  }
  const std::size_t n = y.size();

  Rng rng(spec.seed);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      // One draw per pair, always, so the stream does not depend on p.
      const double p = y[u] == y[v] ? spec.p_in : spec.p_out;
      if (rng.uniform01() < p) edges.emplace_back(u, v);
    }
  }

  const std::size_t k = spec.class_sizes.size();
  const std::size_t width = std::to_string(k - 1).size();
  Dataset ds;
  ds.graph = build_graph(n, edges, &ds.build);
  ds.labels = LabelSet(std::move(y), k);
  for (std::size_t c = 0; c < k; ++c) {
    std::string name = std::to_string(c);
    ds.class_names.push_back(std::string(width - name.size(), '0') + name);
  }
  return ds;
}

double expected_homophily(const PlantedPartitionSpec& spec) {
  double intra_pairs = 0.0;
  double total = 0.0;
  for (std::size_t s : spec.class_sizes) {
    intra_pairs += 0.5 * static_cast<double>(s) * static_cast<double>(s - (s ? 1 : 0));
    total += static_cast<double>(s);
  }
  const double cross_pairs = 0.5 * total * (total - 1.0) - intra_pairs;
  const double intra = spec.p_in * intra_pairs;
  const double denom = intra + spec.p_out * cross_pairs;
  if (denom == 0.0) throw UndefinedError("planted partition has no expected edges");
  return intra / denom;
}

}  // namespace hetgraph
