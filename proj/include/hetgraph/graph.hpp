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

#ifndef HETGRAPH_GRAPH_HPP_
#define HETGRAPH_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace hetgraph {

using NodeId = std::uint32_t;
using ClassId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

// What build_graph did to its input pairs.
struct BuildStats {
  std::size_t input_pairs = 0;
  std::size_t self_loops = 0;
  // Pairs (u, v) whose reverse (v, u) was not present in the input.
  std::size_t asymmetric_pairs = 0;
  // Undirected edges listed more than once (in either direction).
  std::size_t duplicate_pairs = 0;
};

// Undirected simple graph in compressed sparse row form. Immutable once
// built; neighbor lists are sorted ascending and never contain the row node.
class Graph {
 public:
  Graph() = default;

  std::size_t num_nodes() const noexcept { return row_offsets_.empty() ? 0 : row_offsets_.size() - 1; }
  // Undirected edge count, each edge counted once.
  std::size_t num_edges() const noexcept { return neighbor_ids_.size() / 2; }

  std::size_t degree(NodeId u) const;
  std::span<const NodeId> neighbors(NodeId u) const;
  // N(u) with u merged in, ascending.
  std::vector<NodeId> closed_neighborhood(NodeId u) const;
  bool has_edge(NodeId u, NodeId v) const;

  std::span<const std::size_t> row_offsets() const noexcept { return row_offsets_; }
  std::span<const NodeId> neighbor_ids() const noexcept { return neighbor_ids_; }

  // Each undirected edge once as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph build_graph(std::size_t, std::span<const Edge>, BuildStats*);

  void check_node(NodeId u) const;

  std::vector<std::size_t> row_offsets_{0};
  std::vector<NodeId> neighbor_ids_;
};

// Symmetrizes, deduplicates and strips self-loops. Throws InputError naming
// the offending pair when an endpoint is >= n.
Graph build_graph(std::size_t n, std::span<const Edge> edges,
                  BuildStats* stats = nullptr);

// Per-node class assignment with an optional visibility mask.
class LabelSet {
 public:
  LabelSet() = default;
  LabelSet(std::vector<ClassId> y, std::size_t num_classes,
           std::optional<std::vector<std::uint8_t>> known = std::nullopt);

  std::size_t size() const noexcept { return y_.size(); }
  std::size_t num_classes() const noexcept { return num_classes_; }
  ClassId operator[](NodeId u) const { return y_[u]; }
  std::span<const ClassId> values() const noexcept { return y_; }

  bool has_mask() const noexcept { return known_.has_value(); }
  bool visible(NodeId u) const { return !known_ || (*known_)[u] != 0; }
  const std::optional<std::vector<std::uint8_t>>& mask() const noexcept { return known_; }

  // Copy whose visible labels are exactly `nodes`.
  LabelSet with_visible(std::span<const NodeId> nodes) const;
  LabelSet without_mask() const;

  std::vector<NodeId> visible_nodes() const;
  std::vector<std::size_t> class_sizes() const;
  std::vector<NodeId> members(ClassId c) const;

  friend bool operator==(const LabelSet&, const LabelSet&) = default;

 private:
  std::vector<ClassId> y_;
  std::size_t num_classes_ = 1;
  std::optional<std::vector<std::uint8_t>> known_;
};

// Renames node u to perm[u]. Throws InputError if perm is not a bijection on
// [0, n) or the label set has the wrong length.
std::pair<Graph, LabelSet> permute(const Graph& g, const LabelSet& labels,
                                   std::span<const NodeId> perm);

std::vector<NodeId> inverse_permutation(std::span<const NodeId> perm);

}  // namespace hetgraph

#endif  // HETGRAPH_GRAPH_HPP_
