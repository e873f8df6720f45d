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

#include "hetgraph/metrics.hpp"

#include <cmath>
#include <string>

#include "hetgraph/error.hpp"
#include "parallel.hpp"

namespace hetgraph {
namespace {

void check_inputs(const Graph& g, const LabelSet& labels) {
  if (labels.size() != g.num_nodes()) {
    throw InputError("label count " + std::to_string(labels.size()) +
                     " does not match node count " + std::to_string(g.num_nodes()));
  }
}

void check_node(const Graph& g, NodeId u) {
  if (u >= g.num_nodes()) {
    throw InputError("node " + std::to_string(u) + " out of range (n=" +
                     std::to_string(g.num_nodes()) + ")");
  }
}

// Visits N'(u) in ascending order.
template <typename F>
void for_each_closed(const Graph& g, NodeId u, F&& f) {
  bool placed = false;
  for (NodeId v : g.neighbors(u)) {
    if (!placed && u < v) {
      f(u);
      placed = true;
    }
    f(v);
  }
  if (!placed) f(u);
}

// Row-major n x |C| neighbor-label counts over N(u), ignoring any mask.
std::vector<double> open_histograms(const Graph& g, const LabelSet& labels) {
  const std::size_t k = labels.num_classes();
  std::vector<double> h(g.num_nodes() * k, 0.0);
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    for (NodeId v : g.neighbors(u)) h[u * k + labels[v]] += 1.0;
  }
  return h;
}

std::vector<double> squared_norms(std::span<const double> hist, std::size_t k) {
  const std::size_t n = k ? hist.size() / k : 0;
  std::vector<double> out(n, 0.0);
  for (std::size_t u = 0; u < n; ++u) {
    double s = 0.0;
    for (std::size_t c = 0; c < k; ++c) s += hist[u * k + c] * hist[u * k + c];
    out[u] = s;
  }
  return out;
}

// cos = dot / sqrt(|a|^2 |b|^2). With integer counts the product under the
// root is exact, so identical histograms give exactly 1.
double cosine_from(std::span<const double> a, double a_sq,
                   std::span<const double> b, double b_sq) {
  if (a_sq == 0.0 || b_sq == 0.0) return 0.0;
  double dot = 0.0;
  for (std::size_t c = 0; c < a.size(); ++c) dot += a[c] * b[c];
  return dot / std::sqrt(a_sq * b_sq);
}

// Visible counts over closed neighborhoods: total[v] and per-class[v][c].
struct ClosedCounts {
  std::size_t k = 0;
  std::vector<std::uint32_t> total;
  std::vector<std::uint32_t> per_class;
};

ClosedCounts closed_counts(const Graph& g, const LabelSet& labels) {
  ClosedCounts cc;
  cc.k = labels.num_classes();
  const std::size_t n = g.num_nodes();
  cc.total.assign(n, 0);
  cc.per_class.assign(n * cc.k, 0);
  for (NodeId v = 0; v < n; ++v) {
    for_each_closed(g, v, [&](NodeId z) {
      if (!labels.visible(z)) return;
      ++cc.total[v];
      ++cc.per_class[v * cc.k + labels[z]];
    });
  }
  return cc;
}

// Shared by the single-node and batched paths so both produce identical
// values: same integer counts, same summation order.
template <typename CountFn>
std::optional<double> two_ncs_from_counts(const Graph& g, const LabelSet& labels,
                                          NodeId u, CountFn&& counts) {
  const ClassId yu = labels[u];
  const std::uint32_t self = labels.visible(u) ? 1 : 0;
  double sum = 0.0;
  std::size_t terms = 0;
  for_each_closed(g, u, [&](NodeId v) {
    auto [total, same] = counts(v, yu);
    // u lies in N'(v) and carries label yu, so remove it from both counts.
    const std::uint32_t den = total - self;
    if (den == 0) return;
    const std::uint32_t num = same - self;
    sum += static_cast<double>(num) / static_cast<double>(den);
    ++terms;
  });
  if (terms == 0) return std::nullopt;
  return sum / static_cast<double>(terms);
}

std::optional<double> two_ncs_cached(const Graph& g, const LabelSet& labels,
                                     const ClosedCounts& cc, NodeId u) {
  return two_ncs_from_counts(g, labels, u, [&](NodeId v, ClassId c) {
    return std::pair<std::uint32_t, std::uint32_t>{cc.total[v], cc.per_class[v * cc.k + c]};
  });
}

std::optional<double> local_h_value(const Graph& g, const LabelSet& labels, NodeId u) {
  auto nbrs = g.neighbors(u);
  if (nbrs.empty()) return std::nullopt;
  std::size_t same = 0;
  for (NodeId v : nbrs) same += labels[v] == labels[u];
  return static_cast<double>(same) / static_cast<double>(nbrs.size());
}

std::optional<double> ccns_node_value(const LabelSet& labels, std::span<const double> hist,
                                      std::span<const double> sq,
                                      std::span<const NodeId> peers, NodeId u) {
  if (peers.size() < 2) return std::nullopt;
  const std::size_t k = labels.num_classes();
  auto row = [&](NodeId v) { return hist.subspan(v * k, k); };
  double sum = 0.0;
  for (NodeId v : peers) {
    if (v == u) continue;
    sum += cosine_from(row(u), sq[u], row(v), sq[v]);
  }
  return sum / static_cast<double>(peers.size() - 1);
}

std::vector<NodeId> resolve_subset(const Graph& g, const LabelSet& labels,
                                   std::optional<std::span<const NodeId>> over) {
  std::vector<NodeId> nodes;
  if (over) {
    nodes.assign(over->begin(), over->end());
    for (NodeId u : nodes) check_node(g, u);
  } else {
    nodes = labels.visible_nodes();
  }
  if (nodes.empty()) throw InputError("node subset for 2NCS averaging is empty");
  return nodes;
}

AveragedMetric average_two_ncs(const Graph& g, const LabelSet& labels,
                               std::span<const NodeId> nodes, int threads) {
  const ClosedCounts cc = closed_counts(g, labels);
  std::vector<std::optional<double>> values(nodes.size());
  detail::parallel_for(nodes.size(), threads, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) values[i] = two_ncs_cached(g, labels, cc, nodes[i]);
  });
  AveragedMetric out;
  double sum = 0.0;
  for (const auto& v : values) {
    if (v) {
      sum += *v;
      ++out.evaluated;
    } else {
      ++out.undefined;
    }
  }
  if (out.evaluated == 0) throw UndefinedError("2NCS is undefined for every node in the subset");
  out.value = sum / static_cast<double>(out.evaluated);
  return out;
}

}  // namespace

double edge_homophily(const Graph& g, const LabelSet& labels) {
  check_inputs(g, labels);
  if (g.num_edges() == 0) throw UndefinedError("edge homophily is undefined for a graph without edges");
  std::size_t same = 0;
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    for (NodeId v : g.neighbors(u)) {
      if (u < v && labels[u] == labels[v]) ++same;
    }
  }
  return static_cast<double>(same) / static_cast<double>(g.num_edges());
}

double local_homophily(const Graph& g, const LabelSet& labels, NodeId u) {
  check_inputs(g, labels);
  check_node(g, u);
  auto v = local_h_value(g, labels, u);
  if (!v) throw UndefinedError("local homophily is undefined for isolated node " + std::to_string(u));
  return *v;
}

std::vector<std::uint32_t> label_histogram(const Graph& g, const LabelSet& labels, NodeId u) {
  check_inputs(g, labels);
  std::vector<std::uint32_t> counts(labels.num_classes(), 0);
  for (NodeId v : g.neighbors(u)) {
    if (labels.visible(v)) ++counts[labels[v]];
  }
  return counts;
}

double cosine_similarity(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw InputError("cosine_similarity: length mismatch");
  double a_sq = 0.0, b_sq = 0.0;
  for (double x : a) a_sq += x * x;
  for (double x : b) b_sq += x * x;
  return cosine_from(a, a_sq, b, b_sq);
}

CcnsMatrix::CcnsMatrix(std::size_t num_classes, std::vector<double> values,
                       std::vector<std::size_t> class_sizes)
    : k_(num_classes), s_(std::move(values)), sizes_(std::move(class_sizes)) {
  if (s_.size() != k_ * k_ || sizes_.size() != k_) {
    throw InputError("CCNS matrix dimensions do not match class count");
  }
}

CcnsMatrix ccns_matrix(const Graph& g, const LabelSet& labels, int threads) {
  check_inputs(g, labels);
  const std::size_t k = labels.num_classes();
  const std::vector<double> hist = open_histograms(g, labels);
  const std::vector<double> sq = squared_norms(hist, k);
  std::vector<std::vector<NodeId>> members(k);
  for (NodeId u = 0; u < g.num_nodes(); ++u) members[labels[u]].push_back(u);

  std::vector<std::pair<ClassId, ClassId>> pairs;
  for (ClassId a = 0; a < k; ++a) {
    for (ClassId b = a; b < k; ++b) pairs.emplace_back(a, b);
  }

  std::vector<double> s(k * k, 0.0);
  auto row = [&](NodeId v) { return std::span<const double>(hist).subspan(v * k, k); };
  detail::parallel_for(pairs.size(), threads, [&](std::size_t b, std::size_t e) {
    for (std::size_t p = b; p < e; ++p) {
      auto [ca, cb] = pairs[p];
      const auto& va = members[ca];
      const auto& vb = members[cb];
      if (va.empty() || vb.empty()) continue;
      double sum = 0.0;
      for (NodeId u : va) {
        for (NodeId v : vb) sum += cosine_from(row(u), sq[u], row(v), sq[v]);
      }
      const double value =
          sum / (static_cast<double>(va.size()) * static_cast<double>(vb.size()));
      s[ca * k + cb] = value;
      s[cb * k + ca] = value;
    }
  });
  return CcnsMatrix(k, std::move(s), labels.class_sizes());
}

std::string_view to_string(CcnsReduction r) {
  switch (r) {
    case CcnsReduction::kDiagMean: return "diag_mean";
    case CcnsReduction::kFullMean: return "full_mean";
    case CcnsReduction::kWeightedDiag: return "weighted_diag";
  }
  return "unknown";
}

std::optional<CcnsReduction> parse_ccns_reduction(std::string_view name) {
  for (auto r : {CcnsReduction::kDiagMean, CcnsReduction::kFullMean, CcnsReduction::kWeightedDiag}) {
    if (name == to_string(r)) return r;
  }
  return std::nullopt;
}

double ccns_graph(const CcnsMatrix& s, CcnsReduction reduction) {
  const std::size_t k = s.num_classes();
  if (k == 0) throw UndefinedError("CCNS of an empty class set");
  double sum = 0.0;
  switch (reduction) {
    case CcnsReduction::kDiagMean:
      for (ClassId c = 0; c < k; ++c) sum += s(c, c);
      return sum / static_cast<double>(k);
    case CcnsReduction::kFullMean:
      for (double x : s.values()) sum += x;
      return sum / static_cast<double>(k * k);
    case CcnsReduction::kWeightedDiag: {
      std::size_t n = 0;
      for (ClassId c = 0; c < k; ++c) {
        sum += static_cast<double>(s.class_sizes()[c]) * s(c, c);
        n += s.class_sizes()[c];
      }
      if (n == 0) throw UndefinedError("CCNS of a graph without nodes");
      return sum / static_cast<double>(n);
    }
  }
  throw InputError("unknown CCNS reduction");
}

double ccns_graph(const Graph& g, const LabelSet& labels, CcnsReduction reduction) {
  return ccns_graph(ccns_matrix(g, labels), reduction);
}

double ccns_node(const Graph& g, const LabelSet& labels, NodeId u) {
  check_inputs(g, labels);
  check_node(g, u);
  const std::size_t k = labels.num_classes();
  const std::vector<NodeId> peers = labels.members(labels[u]);
  // Only u and its peers need histograms.
  std::vector<double> hist(g.num_nodes() * k, 0.0);
  for (NodeId v : peers) {
    for (NodeId z : g.neighbors(v)) hist[v * k + labels[z]] += 1.0;
  }
  const std::vector<double> sq = squared_norms(hist, k);
  auto v = ccns_node_value(labels, hist, sq, peers, u);
  if (!v) throw UndefinedError("CCNS of node " + std::to_string(u) + " is undefined: its class has one member");
  return *v;
}

double two_ncs_node(const Graph& g, const LabelSet& labels, NodeId u) {
  check_inputs(g, labels);
  check_node(g, u);
  auto value = two_ncs_from_counts(g, labels, u, [&](NodeId v, ClassId c) {
    std::uint32_t total = 0, same = 0;
    for_each_closed(g, v, [&](NodeId z) {
      if (!labels.visible(z)) return;
      ++total;
      same += labels[z] == c;
    });
    return std::pair<std::uint32_t, std::uint32_t>{total, same};
  });
  if (!value) {
    throw UndefinedError("2NCS of node " + std::to_string(u) +
                         " is undefined: no visible 2-hop neighbors");
  }
  return *value;
}

AveragedMetric two_ncs_graph(const Graph& g, const LabelSet& labels,
                             std::optional<std::span<const NodeId>> over, int threads) {
  check_inputs(g, labels);
  const std::vector<NodeId> nodes = resolve_subset(g, labels, over);
  return average_two_ncs(g, labels, nodes, threads);
}

AveragedMetric two_ncs_class(const Graph& g, const LabelSet& labels, ClassId c,
                             std::optional<std::span<const NodeId>> over, int threads) {
  check_inputs(g, labels);
  if (c >= labels.num_classes()) {
    throw InputError("class " + std::to_string(c) + " out of range");
  }
  std::vector<NodeId> nodes;
  for (NodeId u : resolve_subset(g, labels, over)) {
    if (labels[u] == c) nodes.push_back(u);
  }
  if (nodes.empty()) throw UndefinedError("class " + std::to_string(c) + " has no nodes in the subset");
  return average_two_ncs(g, labels, nodes, threads);
}

std::vector<std::optional<double>> two_ncs_nodes(const Graph& g, const LabelSet& labels,
                                                 int threads) {
  check_inputs(g, labels);
  const ClosedCounts cc = closed_counts(g, labels);
  std::vector<std::optional<double>> out(g.num_nodes());
  detail::parallel_for(g.num_nodes(), threads, [&](std::size_t b, std::size_t e) {
    for (std::size_t u = b; u < e; ++u) {
      out[u] = two_ncs_cached(g, labels, cc, static_cast<NodeId>(u));
    }
  });
  return out;
}

NodeMetrics node_metrics(const Graph& g, const LabelSet& labels, int threads) {
  check_inputs(g, labels);
  const std::size_t n = g.num_nodes();
  const std::size_t k = labels.num_classes();
  const std::vector<double> hist = open_histograms(g, labels);
  const std::vector<double> sq = squared_norms(hist, k);
  std::vector<std::vector<NodeId>> members(k);
  for (NodeId u = 0; u < n; ++u) members[labels[u]].push_back(u);

  NodeMetrics out;
  out.local_h.resize(n);
  out.ccns.resize(n);
  out.two_ncs = two_ncs_nodes(g, labels, threads);
  detail::parallel_for(n, threads, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      const auto u = static_cast<NodeId>(i);
      out.local_h[u] = local_h_value(g, labels, u);
      out.ccns[u] = ccns_node_value(labels, hist, sq, members[labels[u]], u);
    }
  });
  return out;
}

}  // namespace hetgraph
