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

#ifndef HETGRAPH_METRICS_HPP_
#define HETGRAPH_METRICS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hetgraph/graph.hpp"

namespace hetgraph {

// Edge homophily ratio: fraction of undirected edges whose endpoints share a
// label. All labels are used regardless of any mask. Throws UndefinedError
// when the graph has no edges.
double edge_homophily(const Graph& g, const LabelSet& labels);

// Fraction of u's neighbors sharing u's label. UndefinedError for isolated u.
double local_homophily(const Graph& g, const LabelSet& labels, NodeId u);

// counts[c] = number of neighbors of u with label c. Neighbors whose label is
// hidden by the mask are not counted.
std::vector<std::uint32_t> label_histogram(const Graph& g, const LabelSet& labels,
                                           NodeId u);

// Cosine similarity of two nonnegative count vectors; 0 if either is zero.
double cosine_similarity(std::span<const double> a, std::span<const double> b);

// Cross-class neighborhood similarity s(c, c'): mean cosine similarity of
// neighbor-label histograms over all ordered pairs u in V_c, v in V_c'
// (u = v included on the diagonal). Computed on unmasked labels.
class CcnsMatrix {
 public:
  CcnsMatrix() = default;
  CcnsMatrix(std::size_t num_classes, std::vector<double> values,
             std::vector<std::size_t> class_sizes);

  std::size_t num_classes() const noexcept { return k_; }
  double operator()(ClassId a, ClassId b) const { return s_[a * k_ + b]; }
  std::span<const double> values() const noexcept { return s_; }
  std::span<const std::size_t> class_sizes() const noexcept { return sizes_; }
  // Rows of empty classes hold zeros.
  bool empty_class(ClassId c) const { return sizes_[c] == 0; }

 private:
  std::size_t k_ = 0;
  std::vector<double> s_;
  std::vector<std::size_t> sizes_;
};

CcnsMatrix ccns_matrix(const Graph& g, const LabelSet& labels, int threads = 1);

enum class CcnsReduction {
  kDiagMean,      // unweighted mean of s(c, c)
  kFullMean,      // mean of all |C|^2 entries
  kWeightedDiag,  // sum_c |V_c| s(c, c) / n
};

std::string_view to_string(CcnsReduction r);
std::optional<CcnsReduction> parse_ccns_reduction(std::string_view name);

double ccns_graph(const CcnsMatrix& s, CcnsReduction reduction = CcnsReduction::kDiagMean);
double ccns_graph(const Graph& g, const LabelSet& labels,
                  CcnsReduction reduction = CcnsReduction::kDiagMean);

// Mean cosine similarity between u's histogram and those of every other node
// in u's class. UndefinedError when u's class has a single member.
double ccns_node(const Graph& g, const LabelSet& labels, NodeId u);

// 2-hop neighbor class similarity of u:
//
//   1/|T| * sum_{v in T} |{z in N'(v)\{u}, visible, y_z = y_u}|
//                        / |{z in N'(v)\{u}, visible}|
//
// over the members v of N'(u) whose visible denominator is nonzero (T).
// u's own label is always the reference, masked or not. UndefinedError when
// T is empty.
double two_ncs_node(const Graph& g, const LabelSet& labels, NodeId u);

// A graph- or class-level average over node values that may be undefined.
struct AveragedMetric {
  double value = 0.0;
  std::size_t evaluated = 0;  // nodes contributing to value
  std::size_t undefined = 0;  // nodes in the subset whose value is undefined
};

// Mean of the defined two_ncs_node values over `over`, which defaults to the
// nodes with visible labels. UndefinedError if no node has a defined value;
// InputError on an empty subset.
AveragedMetric two_ncs_graph(const Graph& g, const LabelSet& labels,
                             std::optional<std::span<const NodeId>> over = std::nullopt,
                             int threads = 1);

// Same, restricted to members of class c within `over`.
AveragedMetric two_ncs_class(const Graph& g, const LabelSet& labels, ClassId c,
                             std::optional<std::span<const NodeId>> over = std::nullopt,
                             int threads = 1);

// All node-level metrics at once; std::nullopt marks an undefined value.
struct NodeMetrics {
  std::vector<std::optional<double>> local_h;
  std::vector<std::optional<double>> ccns;
  std::vector<std::optional<double>> two_ncs;
};

NodeMetrics node_metrics(const Graph& g, const LabelSet& labels, int threads = 1);
std::vector<std::optional<double>> two_ncs_nodes(const Graph& g, const LabelSet& labels,
                                                 int threads = 1);

}  // namespace hetgraph

#endif  // HETGRAPH_METRICS_HPP_
