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

#include "hetgraph/sgcn.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "hetgraph/error.hpp"
#include "hetgraph/random.hpp"
#include "parallel.hpp"

namespace hetgraph {
namespace {

constexpr double kLogClamp = 1e-12;
constexpr double kInitScale = 0.01;

void check_weights(const Graph& g, const DenseMatrix& w) {
  if (w.rows() != g.num_nodes()) {
    throw InputError("weight matrix has " + std::to_string(w.rows()) + " rows, graph has " +
                     std::to_string(g.num_nodes()) + " nodes");
  }
  if (w.cols() == 0) throw InputError("weight matrix has no class columns");
}

// Rejects out-of-range, hidden-label and repeated nodes.
void check_batch(const LabelSet& labels, std::span<const NodeId> batch) {
  if (batch.empty()) throw InputError("batch is empty");
  std::vector<std::uint8_t> seen(labels.size(), 0);
  for (NodeId z : batch) {
    if (z >= labels.size()) throw InputError("batch node " + std::to_string(z) + " out of range");
    if (!labels.visible(z)) throw InputError("batch node " + std::to_string(z) + " has a hidden label");
    if (seen[z]) throw InputError("batch node " + std::to_string(z) + " repeated");
    seen[z] = 1;
  }
}

void softmax_inplace(std::span<double> z) {
  const double mx = *std::max_element(z.begin(), z.end());
  double sum = 0.0;
  for (double& x : z) {
    x = std::exp(x - mx);
    sum += x;
  }
  for (double& x : z) x /= sum;
}

// Softmax of the aggregated closed-neighborhood weights of u, into out.
void node_probs(const Graph& g, const DenseMatrix& w, NodeId u, std::span<double> out) {
  std::fill(out.begin(), out.end(), 0.0);
  auto add = [&](NodeId v) {
    auto wv = w.row(v);
    for (std::size_t c = 0; c < out.size(); ++c) out[c] += wv[c];
  };
  bool placed = false;
  for (NodeId v : g.neighbors(u)) {
    if (!placed && u < v) {
      add(u);
      placed = true;
    }
    add(v);
  }
  if (!placed) add(u);
  softmax_inplace(out);
}

}  // namespace

void TrainConfig::validate() const {
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw InputError("learning rate must be a positive finite number");
  }
  if (epochs == 0) throw InputError("epochs must be >= 1");
}

DenseMatrix forward(const Graph& g, const DenseMatrix& weights, int threads) {
  check_weights(g, weights);
  DenseMatrix h(g.num_nodes(), weights.cols());
  detail::parallel_for(g.num_nodes(), threads, [&](std::size_t b, std::size_t e) {
    for (std::size_t u = b; u < e; ++u) node_probs(g, weights, static_cast<NodeId>(u), h.row(u));
  });
  return h;
}

double cross_entropy(const DenseMatrix& probs, const LabelSet& labels,
                     std::span<const NodeId> batch) {
  if (probs.rows() != labels.size() || probs.cols() != labels.num_classes()) {
    throw InputError("probability matrix shape does not match labels");
  }
  check_batch(labels, batch);
  double sum = 0.0;
  for (NodeId z : batch) sum -= std::log(std::max(probs(z, labels[z]), kLogClamp));
  return sum / static_cast<double>(batch.size());
}

DenseMatrix gradient(const Graph& g, const DenseMatrix& weights, const LabelSet& labels,
                     std::span<const NodeId> batch, int threads) {
  check_weights(g, weights);
  if (labels.size() != g.num_nodes() || weights.cols() != labels.num_classes()) {
    throw InputError("weight matrix shape does not match labels");
  }
  check_batch(labels, batch);
  const std::size_t n = g.num_nodes();
  const std::size_t k = weights.cols();

  // Residuals H_z - onehot(y_z) for batch members only.
  DenseMatrix residual(n, k);
  std::vector<std::uint8_t> in_batch(n, 0);
  detail::parallel_for(batch.size(), threads, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      const NodeId z = batch[i];
      auto r = residual.row(z);
      node_probs(g, weights, z, r);
      r[labels[z]] -= 1.0;
    }
  });
  for (NodeId z : batch) in_batch[z] = 1;

  // Gather: G_v sums residuals of batch members in N'(v), ascending.
  const double scale = 1.0 / static_cast<double>(batch.size());
  DenseMatrix grad(n, k);
  detail::parallel_for(n, threads, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      const auto v = static_cast<NodeId>(i);
      auto gv = grad.row(v);
      bool touched = false;
      auto add = [&](NodeId z) {
        if (!in_batch[z]) return;
        touched = true;
        auto r = residual.row(z);
        for (std::size_t c = 0; c < k; ++c) gv[c] += r[c];
      };
      bool placed = false;
      for (NodeId z : g.neighbors(v)) {
        if (!placed && v < z) {
          add(v);
          placed = true;
        }
        add(z);
      }
      if (!placed) add(v);
      if (touched) {
        for (double& x : gv) x *= scale;
      }
    }
  });
  return grad;
}

TrainResult train(const Graph& g, const LabelSet& labels, std::span<const NodeId> train_nodes,
                  const TrainConfig& cfg, std::span<const NodeId> val_nodes) {
  cfg.validate();
  if (labels.size() != g.num_nodes()) throw InputError("label count does not match node count");
  check_batch(labels, train_nodes);
  for (NodeId v : val_nodes) {
    if (v >= g.num_nodes()) throw InputError("validation node " + std::to_string(v) + " out of range");
  }

  const std::size_t n = g.num_nodes();
  const std::size_t k = labels.num_classes();
  Rng rng(cfg.seed);

  TrainResult out;
  out.weights = DenseMatrix(n, k);
  if (cfg.init == WeightInit::kUniform) {
    for (double& x : out.weights.data()) x = (2.0 * rng.uniform01() - 1.0) * kInitScale;
  }
  DenseMatrix& w = out.weights;

  std::vector<NodeId> order(train_nodes.begin(), train_nodes.end());
  const std::size_t batch_size =
      cfg.batch_size == 0 ? order.size() : std::min(cfg.batch_size, order.size());

  auto record = [&](bool initial) {
    DenseMatrix h = forward(g, w, cfg.threads);
    const double loss = cross_entropy(h, labels, train_nodes);
    if (initial) {
      out.history.initial_loss = loss;
      return;
    }
    std::vector<ClassId> pred(n);
    for (NodeId u = 0; u < n; ++u) {
      auto row = h.row(u);
      pred[u] = static_cast<ClassId>(std::max_element(row.begin(), row.end()) - row.begin());
    }
    out.history.loss.push_back(loss);
    out.history.train_accuracy.push_back(accuracy(pred, labels, train_nodes));
    if (!val_nodes.empty()) out.history.val_accuracy.push_back(accuracy(pred, labels, val_nodes));
  };

  record(true);
  std::vector<NodeId> batch;
  for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    rng.shuffle(std::span<NodeId>(order));
    for (std::size_t start = 0; start < order.size(); start += batch_size) {
      const std::size_t end = std::min(order.size(), start + batch_size);
      batch.assign(order.begin() + start, order.begin() + end);
      std::sort(batch.begin(), batch.end());
      const DenseMatrix grad = gradient(g, w, labels, batch, cfg.threads);
      auto wd = w.data();
      auto gd = grad.data();
      for (std::size_t i = 0; i < wd.size(); ++i) wd[i] -= cfg.learning_rate * gd[i];
    }
    record(false);
  }
  return out;
}

std::vector<ClassId> predict(const Graph& g, const DenseMatrix& weights, int threads) {
  const DenseMatrix h = forward(g, weights, threads);
  std::vector<ClassId> pred(g.num_nodes());
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    auto row = h.row(u);
    // max_element returns the first maximum.
    pred[u] = static_cast<ClassId>(std::max_element(row.begin(), row.end()) - row.begin());
  }
  return pred;
}

double accuracy(std::span<const ClassId> pred, const LabelSet& labels,
                std::span<const NodeId> subset) {
  if (subset.empty()) throw InputError("accuracy over an empty subset");
  if (pred.size() != labels.size()) throw InputError("prediction count does not match label count");
  std::size_t hits = 0;
  for (NodeId u : subset) {
    if (u >= pred.size()) throw InputError("node " + std::to_string(u) + " out of range");
    hits += pred[u] == labels[u];
  }
  return static_cast<double>(hits) / static_cast<double>(subset.size());
}

LeaveOneOutResult leave_one_out(const Graph& g, const LabelSet& labels, NodeId u,
                                const TrainConfig& cfg) {
  if (u >= g.num_nodes()) {
    throw InputError("node " + std::to_string(u) + " out of range (n=" +
                     std::to_string(g.num_nodes()) + ")");
  }
  if (g.num_nodes() < 2) throw InputError("leave-one-out needs at least two nodes");
  std::vector<NodeId> train_nodes;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (v != u && labels.visible(v)) train_nodes.push_back(v);
  }
  if (train_nodes.empty()) throw InputError("no visible labels left to train on");
  const TrainResult trained = train(g, labels, train_nodes, cfg);
  const std::vector<ClassId> pred = predict(g, trained.weights, cfg.threads);
  return {pred[u], pred[u] == labels[u]};
}

std::string format_weights(const DenseMatrix& weights) {
  std::string out;
  char buf[32];
  for (std::size_t r = 0; r < weights.rows(); ++r) {
    for (std::size_t c = 0; c < weights.cols(); ++c) {
      std::snprintf(buf, sizeof(buf), "%.17g", weights(r, c));
      if (c) out += ' ';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace hetgraph
