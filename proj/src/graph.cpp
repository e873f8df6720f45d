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

#include "hetgraph/graph.hpp"

#include <algorithm>
#include <string>

#include "hetgraph/error.hpp"

namespace hetgraph {

void Graph::check_node(NodeId u) const {
  if (u >= num_nodes()) {
    throw InputError("node " + std::to_string(u) + " out of range (n=" +
                     std::to_string(num_nodes()) + ")");
  }
}

std::size_t Graph::degree(NodeId u) const {
  check_node(u);
  return row_offsets_[u + 1] - row_offsets_[u];
}

std::span<const NodeId> Graph::neighbors(NodeId u) const {
  check_node(u);
  return std::span<const NodeId>(neighbor_ids_).subspan(
      row_offsets_[u], row_offsets_[u + 1] - row_offsets_[u]);
}

std::vector<NodeId> Graph::closed_neighborhood(NodeId u) const {
  auto nbrs = neighbors(u);
  std::vector<NodeId> out;
  out.reserve(nbrs.size() + 1);
  auto split = std::lower_bound(nbrs.begin(), nbrs.end(), u);
  out.insert(out.end(), nbrs.begin(), split);
  out.push_back(u);
  out.insert(out.end(), split, nbrs.end());
  return out;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  auto nbrs = neighbors(u);
  check_node(v);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (NodeId u = 0; u < num_nodes(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph build_graph(std::size_t n, std::span<const Edge> edges, BuildStats* stats) {
  BuildStats local;
  local.input_pairs = edges.size();

  std::vector<Edge> directed;
  directed.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (u >= n || v >= n) {
      throw InputError("edge #" + std::to_string(i) + " (" + std::to_string(u) +
                       ", " + std::to_string(v) + ") has an endpoint outside [0, " +
                       std::to_string(n) + ")");
    }
    if (u == v) {
      ++local.self_loops;
      continue;
    }
    directed.emplace_back(u, v);
  }

  // Asymmetry and duplicate accounting on the directed input.
  std::sort(directed.begin(), directed.end());
  directed.erase(std::unique(directed.begin(), directed.end()), directed.end());
  for (auto [u, v] : directed) {
    if (!std::binary_search(directed.begin(), directed.end(), Edge{v, u})) {
      ++local.asymmetric_pairs;
    }
  }

  std::vector<Edge> sym;
  sym.reserve(2 * directed.size());
  for (auto [u, v] : directed) {
    sym.emplace_back(u, v);
    sym.emplace_back(v, u);
  }
  std::sort(sym.begin(), sym.end());
  sym.erase(std::unique(sym.begin(), sym.end()), sym.end());

  Graph g;
  g.row_offsets_.assign(n + 1, 0);
  g.neighbor_ids_.reserve(sym.size());
  for (auto [u, v] : sym) {
    ++g.row_offsets_[u + 1];
    g.neighbor_ids_.push_back(v);
  }
  for (std::size_t u = 0; u < n; ++u) g.row_offsets_[u + 1] += g.row_offsets_[u];

  // (0,1) and (1,0) name the same undirected edge, so one of them counts.
  local.duplicate_pairs = local.input_pairs - local.self_loops - g.num_edges();
  if (stats) *stats = local;
  return g;
}

LabelSet::LabelSet(std::vector<ClassId> y, std::size_t num_classes,
                   std::optional<std::vector<std::uint8_t>> known)
    : y_(std::move(y)), num_classes_(num_classes), known_(std::move(known)) {
  if (num_classes_ == 0) throw InputError("num_classes must be >= 1");
  for (std::size_t u = 0; u < y_.size(); ++u) {
    if (y_[u] >= num_classes_) {
      throw InputError("label " + std::to_string(y_[u]) + " of node " +
                       std::to_string(u) + " >= num_classes " +
                       std::to_string(num_classes_));
    }
  }
  if (known_ && known_->size() != y_.size()) {
    throw InputError("label mask length does not match label count");
  }
}

LabelSet LabelSet::with_visible(std::span<const NodeId> nodes) const {
  std::vector<std::uint8_t> mask(y_.size(), 0);
  for (NodeId u : nodes) {
    if (u >= y_.size()) {
      throw InputError("mask node " + std::to_string(u) + " out of range (n=" +
                       std::to_string(y_.size()) + ")");
    }
    mask[u] = 1;
  }
  return LabelSet(y_, num_classes_, std::move(mask));
}

LabelSet LabelSet::without_mask() const { return LabelSet(y_, num_classes_); }

std::vector<NodeId> LabelSet::visible_nodes() const {
  std::vector<NodeId> out;
  out.reserve(y_.size());
  for (NodeId u = 0; u < y_.size(); ++u) {
    if (visible(u)) out.push_back(u);
  }
  return out;
}

std::vector<std::size_t> LabelSet::class_sizes() const {
  std::vector<std::size_t> sizes(num_classes_, 0);
  for (ClassId c : y_) ++sizes[c];
  return sizes;
}

std::vector<NodeId> LabelSet::members(ClassId c) const {
  std::vector<NodeId> out;
  for (NodeId u = 0; u < y_.size(); ++u) {
    if (y_[u] == c) out.push_back(u);
  }
  return out;
}

std::vector<NodeId> inverse_permutation(std::span<const NodeId> perm) {
  std::vector<NodeId> inv(perm.size(), 0);
  std::vector<std::uint8_t> seen(perm.size(), 0);
  for (NodeId u = 0; u < perm.size(); ++u) {
    NodeId p = perm[u];
    if (p >= perm.size() || seen[p]) {
      throw InputError("permutation is not a bijection (entry " +
                       std::to_string(u) + " -> " + std::to_string(p) + ")");
    }
    seen[p] = 1;
    inv[p] = u;
  }
  return inv;
}

std::pair<Graph, LabelSet> permute(const Graph& g, const LabelSet& labels,
                                   std::span<const NodeId> perm) {
  const std::size_t n = g.num_nodes();
  if (perm.size() != n) throw InputError("permutation length does not match node count");
  if (labels.size() != n) throw InputError("label count does not match node count");
  inverse_permutation(perm);  // validates bijectivity

  std::vector<Edge> edges = g.edges();
  for (auto& [u, v] : edges) {
    u = perm[u];
    v = perm[v];
  }
  Graph pg = build_graph(n, edges);

  std::vector<ClassId> y(n);
  std::optional<std::vector<std::uint8_t>> known;
  if (labels.has_mask()) known.emplace(n, 0);
  for (NodeId u = 0; u < n; ++u) {
    y[perm[u]] = labels[u];
    if (known) (*known)[perm[u]] = labels.visible(u) ? 1 : 0;
  }
  return {std::move(pg), LabelSet(std::move(y), labels.num_classes(), std::move(known))};
}

}  // namespace hetgraph
