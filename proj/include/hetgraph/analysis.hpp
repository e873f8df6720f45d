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

#ifndef HETGRAPH_ANALYSIS_HPP_
#define HETGRAPH_ANALYSIS_HPP_

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hetgraph/graph.hpp"

namespace hetgraph {

// Sample Pearson correlation coefficient. InputError on a length mismatch,
// UndefinedError for fewer than two points or a constant series.
double pearson_r(std::span<const double> xs, std::span<const double> ys);

enum class CorrelationMethod {
  kPointBiserial,  // Pearson of metric against 0/1 correctness, per node
  kBinned,         // equal-width metric bins, Pearson of midpoints vs bin accuracy
};

std::string_view to_string(CorrelationMethod m);
std::optional<CorrelationMethod> parse_correlation_method(std::string_view name);

struct MetricBin {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t count = 0;
  double accuracy = 0.0;
  double midpoint() const { return 0.5 * (lo + hi); }
};

struct NodeCorrelation {
  double r = 0.0;
  CorrelationMethod method = CorrelationMethod::kPointBiserial;
  std::size_t used = 0;     // nodes with both a metric value and a prediction
  std::size_t dropped = 0;  // nodes with a prediction but an undefined metric
  double mean_metric = 0.0;
  double accuracy = 0.0;    // over the used nodes
  std::vector<MetricBin> bins;  // binned method only; empty bins omitted
};

// metric[u] empty = undefined metric; correct[u] empty = no prediction for u.
NodeCorrelation correlate_node_metric(std::span<const std::optional<double>> metric,
                                      std::span<const std::optional<bool>> correct,
                                      CorrelationMethod method, std::size_t bins = 10);

// Accuracy within each class, over `subset` (all nodes by default). Classes
// without nodes in the subset get std::nullopt.
std::vector<std::optional<double>> per_class_accuracy(
    std::span<const ClassId> pred, const LabelSet& labels,
    std::optional<std::span<const NodeId>> subset = std::nullopt);

// One dataset in a graph-level comparison.
struct GraphLevelRow {
  std::string dataset;
  double h = 0.0;
  double ccns = 0.0;
  double two_ncs = 0.0;
  std::map<std::string, double> accuracy;  // model name -> accuracy
};

struct GraphLevelCorrelation {
  std::string metric;  // "h", "ccns" or "two_ncs"
  std::string model;
  double r = 0.0;
};

struct MetricReport {
  std::vector<GraphLevelRow> rows;
  std::vector<GraphLevelCorrelation> correlations;
};

// Pearson r of each metric against each model's accuracy across datasets.
// UndefinedError with fewer than two datasets; InputError when datasets do
// not report the same set of models.
MetricReport graph_level_table(std::span<const GraphLevelRow> rows);

// Reads a predictions CSV with header "node_id,true_label,pred_label[,...]"
// or "node_id,correct". Returns per-node correctness for nodes [0, n); nodes
// absent from the file are std::nullopt. A "correct" column, when present,
// takes precedence over comparing the label columns.
std::vector<std::optional<bool>> load_external_predictions(const std::filesystem::path& path,
                                                           std::size_t n);

// A per-node metric CSV ("node_id,<metric>,...", empty cell = undefined).
struct NodeMetricTable {
  std::vector<std::string> columns;
  // values[c][u], indexed by node id; rows absent from the file stay empty.
  std::vector<std::vector<std::optional<double>>> values;
  std::size_t num_nodes() const { return values.empty() ? 0 : values.front().size(); }
};

NodeMetricTable load_node_metric_table(const std::filesystem::path& path);

}  // namespace hetgraph

#endif  // HETGRAPH_ANALYSIS_HPP_
