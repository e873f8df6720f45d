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

#ifndef HETGRAPH_SGCN_HPP_
#define HETGRAPH_SGCN_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hetgraph/graph.hpp"

namespace hetgraph {

// Row-major real matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<double> row(std::size_t r) { return std::span<double>(data_).subspan(r * cols_, cols_); }
  std::span<const double> row(std::size_t r) const {
    return std::span<const double>(data_).subspan(r * cols_, cols_);
  }
  std::span<const double> data() const noexcept { return data_; }
  std::span<double> data() noexcept { return data_; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

enum class WeightInit { kZeros, kUniform };

struct TrainConfig {
  double learning_rate = 0.1;
  std::size_t epochs = 200;
  std::size_t batch_size = 0;  // 0 = full batch
  std::uint64_t seed = 0;
  WeightInit init = WeightInit::kZeros;
  int threads = 1;

  // Throws InputError on a non-positive learning rate or zero epochs.
  void validate() const;
};

struct TrainHistory {
  double initial_loss = 0.0;  // training loss of the initial weights
  // One entry per epoch, measured on all training nodes after the epoch.
  std::vector<double> loss;
  std::vector<double> train_accuracy;
  std::vector<double> val_accuracy;  // empty when no validation nodes are given
};

struct TrainResult {
  DenseMatrix weights;
  TrainHistory history;
};

// H = softmax((A + I) W), one row per node: row u is the softmax of the sum
// of W_v over the closed neighborhood of u. W must have one row per node.
DenseMatrix forward(const Graph& g, const DenseMatrix& weights, int threads = 1);

// Mean of -ln H[z, y_z] over the batch, with the probability clamped at
// 1e-12. Every batch node must have a visible label.
double cross_entropy(const DenseMatrix& probs, const LabelSet& labels,
                     std::span<const NodeId> batch);

// Gradient of cross_entropy(forward(g, W), labels, batch) with respect to W:
//
//   G_v = 1/|B| * sum_{z in B, v in N'(z)} (H_z - onehot(y_z)).
//
// Rows of nodes with no batch member in their closed neighborhood are
// exactly zero.
DenseMatrix gradient(const Graph& g, const DenseMatrix& weights, const LabelSet& labels,
                     std::span<const NodeId> batch, int threads = 1);

// Plain gradient descent. Deterministic given cfg.seed.
TrainResult train(const Graph& g, const LabelSet& labels, std::span<const NodeId> train_nodes,
                  const TrainConfig& cfg, std::span<const NodeId> val_nodes = {});

// Row-wise argmax of forward(g, W); ties go to the smallest class index.
std::vector<ClassId> predict(const Graph& g, const DenseMatrix& weights, int threads = 1);

// Fraction of subset with pred == label. InputError on an empty subset.
double accuracy(std::span<const ClassId> pred, const LabelSet& labels,
                std::span<const NodeId> subset);

struct LeaveOneOutResult {
  ClassId predicted = 0;
  bool correct = false;
};

// Trains on every visible node except u (u stays in the graph), then
// predicts u.
LeaveOneOutResult leave_one_out(const Graph& g, const LabelSet& labels, NodeId u,
                                const TrainConfig& cfg);

// Space-separated rows, one per node, printed with round-trip precision.
std::string format_weights(const DenseMatrix& weights);

}  // namespace hetgraph

#endif  // HETGRAPH_SGCN_HPP_
