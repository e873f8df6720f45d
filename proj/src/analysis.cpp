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

#include "hetgraph/analysis.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>

#include "hetgraph/error.hpp"

namespace hetgraph {
namespace fs = std::filesystem;

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cell);
      cell.clear();
    } else if (ch != '\r') {
      cell += ch;
    }
  }
  out.push_back(cell);
  for (auto& c : out) {
    auto b = c.find_first_not_of(" \t");
    auto e = c.find_last_not_of(" \t");
    c = b == std::string::npos ? std::string() : c.substr(b, e - b + 1);
  }
  return out;
}

bool parse_node(const std::string& s, NodeId& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return !s.empty() && ec == std::errc() && ptr == s.data() + s.size();
}

std::optional<bool> parse_flag(const std::string& s) {
  if (s == "1" || s == "true") return true;
  if (s == "0" || s == "false") return false;
  return std::nullopt;
}

std::string where(const fs::path& path, std::size_t line) {
  return path.string() + ":" + std::to_string(line);
}

}  // namespace

double pearson_r(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw InputError("pearson_r: series lengths differ");
  const std::size_t n = xs.size();
  if (n < 2) throw UndefinedError("pearson_r needs at least two points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw UndefinedError("pearson_r is undefined for a constant series");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::string_view to_string(CorrelationMethod m) {
  return m == CorrelationMethod::kBinned ? "binned" : "point_biserial";
}

std::optional<CorrelationMethod> parse_correlation_method(std::string_view name) {
  if (name == "point_biserial") return CorrelationMethod::kPointBiserial;
  if (name == "binned") return CorrelationMethod::kBinned;
  return std::nullopt;
}

NodeCorrelation correlate_node_metric(std::span<const std::optional<double>> metric,
                                      std::span<const std::optional<bool>> correct,
                                      CorrelationMethod method, std::size_t bins) {
  if (metric.size() != correct.size()) {
    throw InputError("metric and correctness arrays are not aligned (" +
                     std::to_string(metric.size()) + " vs " + std::to_string(correct.size()) + ")");
  }
  NodeCorrelation out;
  out.method = method;
  std::vector<double> xs, ys;
  for (std::size_t u = 0; u < metric.size(); ++u) {
    if (!correct[u]) continue;
    if (!metric[u]) {
      ++out.dropped;
      continue;
    }
    xs.push_back(*metric[u]);
    ys.push_back(*correct[u] ? 1.0 : 0.0);
  }
  out.used = xs.size();
  if (out.used < 2) throw UndefinedError("fewer than two nodes with both a metric value and a prediction");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out.mean_metric += xs[i];
    out.accuracy += ys[i];
  }
  out.mean_metric /= static_cast<double>(out.used);
  out.accuracy /= static_cast<double>(out.used);

  if (method == CorrelationMethod::kPointBiserial) {
    out.r = pearson_r(xs, ys);
    return out;
  }

  if (bins == 0) throw InputError("bin count must be >= 1");
  const auto [lo_it, hi_it] = std::minmax_element(xs.begin(), xs.end());
  const double lo = *lo_it, hi = *hi_it;
  const double width = (hi - lo) / static_cast<double>(bins);
  std::vector<std::size_t> count(bins, 0), hits(bins, 0);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::size_t b = 0;
    if (width > 0.0) {
      b = std::min(bins - 1, static_cast<std::size_t>((xs[i] - lo) / width));
    }
    ++count[b];
    hits[b] += ys[i] != 0.0;
  }
  std::vector<double> mids, accs;
  for (std::size_t b = 0; b < bins; ++b) {
    if (count[b] == 0) continue;
    MetricBin bin;
    bin.lo = lo + width * static_cast<double>(b);
    bin.hi = b + 1 == bins ? hi : lo + width * static_cast<double>(b + 1);
    bin.count = count[b];
    bin.accuracy = static_cast<double>(hits[b]) / static_cast<double>(count[b]);
    mids.push_back(bin.midpoint());
    accs.push_back(bin.accuracy);
    out.bins.push_back(bin);
  }
  if (out.bins.size() < 2) throw UndefinedError("fewer than two non-empty metric bins");
  out.r = pearson_r(mids, accs);
  return out;
}

std::vector<std::optional<double>> per_class_accuracy(
    std::span<const ClassId> pred, const LabelSet& labels,
    std::optional<std::span<const NodeId>> subset) {
  if (pred.size() != labels.size()) throw InputError("prediction count does not match label count");
  std::vector<std::size_t> total(labels.num_classes(), 0), hits(labels.num_classes(), 0);
  auto visit = [&](NodeId u) {
    if (u >= labels.size()) throw InputError("node " + std::to_string(u) + " out of range");
    ++total[labels[u]];
    hits[labels[u]] += pred[u] == labels[u];
  };
  if (subset) {
    for (NodeId u : *subset) visit(u);
  } else {
    for (NodeId u = 0; u < labels.size(); ++u) visit(u);
  }
  std::vector<std::optional<double>> out(labels.num_classes());
  for (std::size_t c = 0; c < out.size(); ++c) {
    if (total[c]) out[c] = static_cast<double>(hits[c]) / static_cast<double>(total[c]);
  }
  return out;
}

MetricReport graph_level_table(std::span<const GraphLevelRow> rows) {
  if (rows.size() < 2) throw UndefinedError("graph-level correlation needs at least two datasets");
  std::set<std::string> models;
  for (const auto& [model, acc] : rows.front().accuracy) models.insert(model);
  for (const auto& row : rows) {
    std::set<std::string> here;
    for (const auto& [model, acc] : row.accuracy) here.insert(model);
    if (here != models) {
      throw InputError("dataset '" + row.dataset + "' reports a different set of models");
    }
  }
  if (models.empty()) throw InputError("no model accuracies supplied");

  MetricReport report;
  report.rows.assign(rows.begin(), rows.end());
  const std::pair<const char*, double GraphLevelRow::*> metrics[] = {
      {"h", &GraphLevelRow::h}, {"ccns", &GraphLevelRow::ccns}, {"two_ncs", &GraphLevelRow::two_ncs}};
  for (const auto& [name, field] : metrics) {
    std::vector<double> xs;
    for (const auto& row : rows) xs.push_back(row.*field);
    for (const auto& model : models) {
      std::vector<double> ys;
      for (const auto& row : rows) ys.push_back(row.accuracy.at(model));
      report.correlations.push_back({name, model, pearson_r(xs, ys)});
    }
  }
  return report;
}

std::vector<std::optional<bool>> load_external_predictions(const fs::path& path, std::size_t n) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw InputError(path.string() + ": empty predictions file");
  const auto header = split_csv(line);
  auto col = [&](std::string_view name) -> std::optional<std::size_t> {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) return std::nullopt;
    return static_cast<std::size_t>(it - header.begin());
  };
  const auto id_col = col("node_id");
  const auto correct_col = col("correct");
  const auto true_col = col("true_label");
  const auto pred_col = col("pred_label");
  if (id_col != std::size_t{0} || (!correct_col && !(true_col && pred_col))) {
    throw InputError(path.string() +
                     ": header must be node_id,true_label,pred_label or node_id,correct");
  }

  std::vector<std::optional<bool>> out(n);
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    const auto cells = split_csv(line);
    if (cells.size() != header.size()) {
      throw InputError(where(path, lineno) + ": expected " + std::to_string(header.size()) + " cells");
    }
    NodeId u = 0;
    if (!parse_node(cells[0], u)) throw InputError(where(path, lineno) + ": bad node id '" + cells[0] + "'");
    if (u >= n) {
      throw InputError(where(path, lineno) + ": unknown node id " + std::to_string(u) +
                       " (n=" + std::to_string(n) + ")");
    }
    if (out[u]) throw InputError(where(path, lineno) + ": node " + std::to_string(u) + " listed twice");
    if (correct_col) {
      auto flag = parse_flag(cells[*correct_col]);
      if (!flag) throw InputError(where(path, lineno) + ": correct must be 0/1 or true/false");
      out[u] = *flag;
    } else {
      out[u] = cells[*true_col] == cells[*pred_col];
    }
  }
  return out;
}

NodeMetricTable load_node_metric_table(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw InputError(path.string() + ": empty metrics file");
  auto header = split_csv(line);
  if (header.size() < 2 || header[0] != "node_id") {
    throw InputError(path.string() + ": header must start with node_id and name at least one metric");
  }

  struct Row {
    NodeId id;
    std::vector<std::optional<double>> cells;
  };
  std::vector<Row> rows;
  std::size_t n = 0;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    auto cells = split_csv(line);
    if (cells.size() != header.size()) {
      throw InputError(where(path, lineno) + ": expected " + std::to_string(header.size()) + " cells");
    }
    Row row{0, {}};
    if (!parse_node(cells[0], row.id)) throw InputError(where(path, lineno) + ": bad node id");
    for (std::size_t c = 1; c < cells.size(); ++c) {
      if (cells[c].empty()) {
        row.cells.emplace_back();
        continue;
      }
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(cells[c].data(), cells[c].data() + cells[c].size(), v);
      if (ec != std::errc() || ptr != cells[c].data() + cells[c].size()) {
        throw InputError(where(path, lineno) + ": bad value '" + cells[c] + "'");
      }
      row.cells.emplace_back(v);
    }
    n = std::max<std::size_t>(n, std::size_t{row.id} + 1);
    rows.push_back(std::move(row));
  }

  NodeMetricTable table;
  table.columns.assign(header.begin() + 1, header.end());
  table.values.assign(table.columns.size(), std::vector<std::optional<double>>(n));
  std::vector<std::uint8_t> seen(n, 0);
  for (const auto& row : rows) {
    if (seen[row.id]) throw InputError(path.string() + ": node " + std::to_string(row.id) + " listed twice");
    seen[row.id] = 1;
    for (std::size_t c = 0; c < row.cells.size(); ++c) table.values[c][row.id] = row.cells[c];
  }
  return table;
}

}  // namespace hetgraph
