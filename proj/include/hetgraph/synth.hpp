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

#ifndef HETGRAPH_SYNTH_HPP_
#define HETGRAPH_SYNTH_HPP_

#include <cstdint>
#include <vector>

#include "hetgraph/ingest.hpp"

namespace hetgraph {

// Counterexample graph on 113 nodes where node 0 has no same-class neighbor
// yet every one of its neighbors is tied to many red nodes. Groups:
//
//   red    {0}, {9..20}, {21..32}
//   orange {1..8}, {97..104}, {105..112}
//   green  {33..64}, {65..96}
//
// Each "densely connected" relation is a complete bipartite block:
//
//   {1..8}   x ({0} u {9..32})
//   {33..64} x ({9..20} u {97..104})
//   {65..96} x ({21..32} u {105..112})
//
// giving 200 + 640 + 640 = 1480 edges. Node 0 then has local
// homophily 0, node CCNS 8/sqrt(1088) ~ 0.2425 and 2NCS (8 * 24/25) / 9
// ~ 0.8533.
//
// Class names are "green", "orange", "red" (indices 0, 1, 2).
Dataset build_fig2();

inline constexpr NodeId kFig2Nodes = 113;
inline constexpr std::size_t kFig2Edges = 1480;

struct PlantedPartitionSpec {
  std::vector<std::size_t> class_sizes;
  double p_in = 0.0;   // edge probability within a class
  double p_out = 0.0;  // edge probability across classes
  std::uint64_t seed = 0;
};

// Independent Bernoulli edge per unordered pair. Nodes are numbered class by
// class; class names are zero-padded indices ("0", "1", ... or "00", "01",
// ...) so that the lexicographic order matches the index order.
Dataset build_planted_partition(const PlantedPartitionSpec& spec);

// Expected edge homophily of a planted-partition spec (ratio of expected
// intra-class edges to expected edges).
double expected_homophily(const PlantedPartitionSpec& spec);

}  // namespace hetgraph

#endif  // HETGRAPH_SYNTH_HPP_
