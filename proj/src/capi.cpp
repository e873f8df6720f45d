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

#include "hetgraph/hetgraph.h"

#include <cmath>
#include <cstring>
#include <filesystem>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <new>
#include <string>
#include <vector>

#include "hetgraph/analysis.hpp"
#include "hetgraph/error.hpp"
#include "hetgraph/ingest.hpp"
#include "hetgraph/metrics.hpp"
#include "hetgraph/sgcn.hpp"
#include "hetgraph/synth.hpp"

struct hg_dataset {
  hetgraph::Dataset ds;
};

struct hg_model {
  hetgraph::TrainResult result;
};

struct hg_metric_table {
  std::vector<std::string> names;
  std::vector<std::vector<double>> columns;
  std::size_t n = 0;
};

namespace {

using hetgraph::NodeId;

thread_local std::string g_last_error;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

hg_status fail(hg_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename F>
hg_status guard(F&& body) {
  g_last_error.clear();
  try {
    body();
    return HG_OK;
  } catch (const hetgraph::Error& e) {
    return fail(e.kind() == hetgraph::ErrorKind::kUndefined ? HG_ERR_UNDEFINED : HG_ERR_INPUT,
                e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return fail(HG_ERR_INPUT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(HG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(HG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(HG_ERR_INTERNAL, "unknown error");
  }
}

void require(const void* p, const char* what) {
  if (!p) throw hetgraph::InputError(std::string(what) + " must not be NULL");
}

std::span<const NodeId> nodes_of(const uint32_t* nodes, size_t count) {
  if (count && !nodes) throw hetgraph::InputError("node array must not be NULL");
  return {nodes, count};
}

std::optional<std::span<const NodeId>> optional_subset(const uint32_t* subset, size_t count) {
  if (!subset) return std::nullopt;
  return std::span<const NodeId>(subset, count);
}

hetgraph::DenseMatrix matrix_from(const hetgraph::Dataset& ds, const double* data) {
  require(data, "weights");
  hetgraph::DenseMatrix w(ds.graph.num_nodes(), ds.labels.num_classes());
  std::memcpy(w.data().data(), data, w.data().size() * sizeof(double));
  return w;
}

hetgraph::TrainConfig to_config(const hg_train_config* cfg) {
  hetgraph::TrainConfig out;
  if (!cfg) return out;
  out.learning_rate = cfg->learning_rate;
  out.epochs = cfg->epochs;
  out.batch_size = cfg->batch_size;
  out.seed = cfg->seed;
  out.init = cfg->init == HG_INIT_UNIFORM ? hetgraph::WeightInit::kUniform
                                          : hetgraph::WeightInit::kZeros;
  out.threads = cfg->threads;
  return out;
}

uint32_t* copy_nodes(const std::vector<NodeId>& v) {
  auto* out = new uint32_t[v.empty() ? 1 : v.size()];
  std::copy(v.begin(), v.end(), out);
  return out;
}

void fill_split(const hetgraph::SplitSet& s, hg_split* out) {
  hg_split tmp{};
  try {
    tmp.train = copy_nodes(s.train);
    tmp.val = copy_nodes(s.val);
    tmp.test = copy_nodes(s.test);
  } catch (...) {
    hg_split_release(&tmp);
    throw;
  }
  tmp.num_train = s.train.size();
  tmp.num_val = s.val.size();
  tmp.num_test = s.test.size();
  *out = tmp;
}

hetgraph::SplitSet split_from(const hg_split* s) {
  hetgraph::SplitSet out;
  auto a = nodes_of(s->train, s->num_train);
  auto b = nodes_of(s->val, s->num_val);
  auto c = nodes_of(s->test, s->num_test);
  out.train.assign(a.begin(), a.end());
  out.val.assign(b.begin(), b.end());
  out.test.assign(c.begin(), c.end());
  return out;
}

double or_nan(const std::optional<double>& v) { return v ? *v : kNaN; }

}  // namespace

extern "C" {

const char* hg_version(void) { return HETGRAPH_VERSION; }

const char* hg_last_error(void) { return g_last_error.c_str(); }

hg_status hg_dataset_load(const char* dir, hg_dataset** out) {
  return guard([&] {
    require(dir, "dir");
    require(out, "out");
    *out = new hg_dataset{hetgraph::load_dataset(dir)};
  });
}

hg_status hg_dataset_fig2(hg_dataset** out) {
  return guard([&] {
    require(out, "out");
    *out = new hg_dataset{hetgraph::build_fig2()};
  });
}

hg_status hg_dataset_planted_partition(const size_t* class_sizes, size_t num_classes, double p_in,
                                       double p_out, uint64_t seed, hg_dataset** out) {
  return guard([&] {
    require(out, "out");
    if (num_classes) require(class_sizes, "class_sizes");
    hetgraph::PlantedPartitionSpec spec;
    spec.class_sizes.assign(class_sizes, class_sizes + num_classes);
    spec.p_in = p_in;
    spec.p_out = p_out;
    spec.seed = seed;
    *out = new hg_dataset{hetgraph::build_planted_partition(spec)};
  });
}

hg_status hg_dataset_from_edges(size_t n, const uint32_t* edges, size_t num_edges,
                                const uint32_t* labels, size_t num_classes, hg_dataset** out) {
  return guard([&] {
    require(out, "out");
    if (num_edges) require(edges, "edges");
    if (n) require(labels, "labels");
    std::vector<hetgraph::Edge> pairs(num_edges);
    for (size_t i = 0; i < num_edges; ++i) pairs[i] = {edges[2 * i], edges[2 * i + 1]};
    hetgraph::Dataset ds;
    ds.graph = hetgraph::build_graph(n, pairs, &ds.build);
    ds.labels = hetgraph::LabelSet(std::vector<hetgraph::ClassId>(labels, labels + n), num_classes);
    const size_t width = std::to_string(num_classes ? num_classes - 1 : 0).size();
    for (size_t c = 0; c < num_classes; ++c) {
      std::string name = std::to_string(c);
      ds.class_names.push_back(std::string(width - name.size(), '0') + name);
    }
    *out = new hg_dataset{std::move(ds)};
  });
}

void hg_dataset_free(hg_dataset* ds) { delete ds; }

hg_status hg_dataset_write(const hg_dataset* ds, const char* dir) {
  return guard([&] {
    require(ds, "dataset");
    require(dir, "dir");
    hetgraph::write_dataset(ds->ds, dir);
  });
}

hg_status hg_dataset_info_get(const hg_dataset* ds, hg_dataset_info* out) {
  return guard([&] {
    require(ds, "dataset");
    require(out, "out");
    const auto& d = ds->ds;
    out->num_nodes = d.graph.num_nodes();
    out->num_edges = d.graph.num_edges();
    out->num_classes = d.labels.num_classes();
    out->raw_edge_rows = d.build.input_pairs;
    out->self_loops = d.build.self_loops;
    out->duplicate_pairs = d.build.duplicate_pairs;
    out->asymmetric_pairs = d.build.asymmetric_pairs;
    out->visible_labels = d.labels.visible_nodes().size();
    out->has_features = d.features.has_value() ? 1 : 0;
  });
}

const char* hg_dataset_class_name(const hg_dataset* ds, uint32_t c) {
  if (!ds || c >= ds->ds.class_names.size()) return nullptr;
  return ds->ds.class_names[c].c_str();
}

hg_status hg_dataset_find_class(const hg_dataset* ds, const char* name, uint32_t* out) {
  return guard([&] {
    require(ds, "dataset");
    require(name, "name");
    require(out, "out");
    const auto& names = ds->ds.class_names;
    for (size_t c = 0; c < names.size(); ++c) {
      if (names[c] == name) {
        *out = static_cast<uint32_t>(c);
        return;
      }
    }
    throw hetgraph::InputError(std::string("no class named '") + name + "'");
  });
}

hg_status hg_dataset_label(const hg_dataset* ds, uint32_t u, uint32_t* out) {
  return guard([&] {
    require(ds, "dataset");
    require(out, "out");
    if (u >= ds->ds.labels.size()) throw hetgraph::InputError("node " + std::to_string(u) + " out of range");
    *out = ds->ds.labels[u];
  });
}

hg_status hg_dataset_neighbors(const hg_dataset* ds, uint32_t u, const uint32_t** out,
                               size_t* count) {
  return guard([&] {
    require(ds, "dataset");
    require(out, "out");
    require(count, "count");
    auto nbrs = ds->ds.graph.neighbors(u);
    *out = nbrs.data();
    *count = nbrs.size();
  });
}

hg_status hg_dataset_set_visible(hg_dataset* ds, const uint32_t* nodes, size_t count) {
  return guard([&] {
    require(ds, "dataset");
    ds->ds.labels = ds->ds.labels.with_visible(nodes_of(nodes, count));
  });
}

void hg_dataset_clear_visible(hg_dataset* ds) {
  if (ds) ds->ds.labels = ds->ds.labels.without_mask();
}

hg_status hg_node_list_load(const char* path, size_t n, uint32_t** out, size_t* count) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    require(count, "count");
    auto nodes = hetgraph::load_split(path, n);
    *out = copy_nodes(nodes);
    *count = nodes.size();
  });
}

hg_status hg_node_list_write(const char* path, const uint32_t* nodes, size_t count) {
  return guard([&] {
    require(path, "path");
    hetgraph::write_split(path, nodes_of(nodes, count));
  });
}

void hg_node_list_free(uint32_t* nodes) { delete[] nodes; }

hg_status hg_split_generate(size_t n, double f_train, double f_val, double f_test, uint64_t seed,
                            hg_split* out) {
  return guard([&] {
    require(out, "out");
    fill_split(hetgraph::generate_splits(n, {f_train, f_val, f_test}, seed), out);
  });
}

hg_status hg_split_load_dir(const char* dir, size_t n, hg_split* out) {
  return guard([&] {
    require(dir, "dir");
    require(out, "out");
    fill_split(hetgraph::load_split_dir(dir, n), out);
  });
}

hg_status hg_split_write_dir(const hg_split* split, const char* dir) {
  return guard([&] {
    require(split, "split");
    require(dir, "dir");
    hetgraph::write_split_dir(split_from(split), dir);
  });
}

void hg_split_release(hg_split* split) {
  if (!split) return;
  delete[] split->train;
  delete[] split->val;
  delete[] split->test;
  *split = hg_split{};
}

hg_status hg_edge_homophily(const hg_dataset* ds, double* out) {
  return guard([&] {
    require(ds, "dataset");
    require(out, "out");
    *out = hetgraph::edge_homophily(ds->ds.graph, ds->ds.labels);
  });
}

hg_status hg_local_homophily(const hg_dataset* ds, uint32_t u, double* out) {
  return guard([&] {
    require(ds, "dataset");
    require(out, "out");
    *out = hetgraph::local_homophily(ds->ds.graph, ds->ds.labels, u);
  });
}

hg_status hg_label_histogram(const hg_dataset* ds, uint32_t u, uint32_t* counts) {
  return guard([&] {
    require(ds, "dataset");
    require(counts, "counts");
    auto h = hetgraph::label_histogram(ds->ds.graph, ds->ds.labels, u);
    std::copy(h.begin(), h.end(), counts);
  });
}

hg_status hg_ccns_node(const hg_dataset* ds, uint32_t u, double* out) {
  return guard([&] {
    require(ds, "dataset");
    require(out, "out");
    *out = hetgraph::ccns_node(ds->ds.graph, ds->ds.labels, u);
  });
}

hg_status hg_two_ncs_node(const hg_dataset* ds, uint32_t u, double* out) {
  return guard([&] {
    require(ds, "dataset");
    require(out, "out");
    *out = hetgraph::two_ncs_node(ds->ds.graph, ds->ds.labels, u);
  });
}

hg_status hg_ccns_matrix(const hg_dataset* ds, int threads, double* out) {
  return guard([&] {
    require(ds, "dataset");
    require(out, "out");
    auto s = hetgraph::ccns_matrix(ds->ds.graph, ds->ds.labels, threads);
    std::copy(s.values().begin(), s.values().end(), out);
  });
}

hg_status hg_ccns_graph(const hg_dataset* ds, hg_ccns_reduction reduction, int threads,
                        double* out) {
  return guard([&] {
    require(ds, "dataset");
    require(out, "out");
    hetgraph::CcnsReduction r;
    switch (reduction) {
      case HG_CCNS_DIAG_MEAN: r = hetgraph::CcnsReduction::kDiagMean; break;
      case HG_CCNS_FULL_MEAN: r = hetgraph::CcnsReduction::kFullMean; break;
      case HG_CCNS_WEIGHTED_DIAG: r = hetgraph::CcnsReduction::kWeightedDiag; break;
      default: throw hetgraph::InputError("unknown CCNS reduction");
    }
    *out = hetgraph::ccns_graph(hetgraph::ccns_matrix(ds->ds.graph, ds->ds.labels, threads), r);
  });
}

hg_status hg_two_ncs_graph(const hg_dataset* ds, const uint32_t* subset, size_t count, int threads,
                           hg_average* out) {
  return guard([&] {
    require(ds, "dataset");
    require(out, "out");
    auto m = hetgraph::two_ncs_graph(ds->ds.graph, ds->ds.labels, optional_subset(subset, count),
                                     threads);
    *out = hg_average{m.value, m.evaluated, m.undefined};
  });
}

hg_status hg_two_ncs_class(const hg_dataset* ds, uint32_t c, const uint32_t* subset, size_t count,
                           int threads, hg_average* out) {
  return guard([&] {
    require(ds, "dataset");
    require(out, "out");
    auto m = hetgraph::two_ncs_class(ds->ds.graph, ds->ds.labels, c,
                                     optional_subset(subset, count), threads);
    *out = hg_average{m.value, m.evaluated, m.undefined};
  });
}

hg_status hg_node_metrics(const hg_dataset* ds, int threads, double* local_h, double* ccns,
                          double* two_ncs) {
  return guard([&] {
    require(ds, "dataset");
    const auto& g = ds->ds.graph;
    const auto& labels = ds->ds.labels;
    if (local_h || ccns) {
      auto m = hetgraph::node_metrics(g, labels, threads);
      for (size_t u = 0; u < g.num_nodes(); ++u) {
        if (local_h) local_h[u] = or_nan(m.local_h[u]);
        if (ccns) ccns[u] = or_nan(m.ccns[u]);
        if (two_ncs) two_ncs[u] = or_nan(m.two_ncs[u]);
      }
    } else if (two_ncs) {
      auto v = hetgraph::two_ncs_nodes(g, labels, threads);
      for (size_t u = 0; u < v.size(); ++u) two_ncs[u] = or_nan(v[u]);
    }
  });
}

void hg_train_config_default(hg_train_config* cfg) {
  if (!cfg) return;
  const hetgraph::TrainConfig d;
  cfg->learning_rate = d.learning_rate;
  cfg->epochs = d.epochs;
  cfg->batch_size = d.batch_size;
  cfg->seed = d.seed;
  cfg->init = HG_INIT_ZEROS;
  cfg->threads = d.threads;
}

hg_status hg_sgcn_train(const hg_dataset* ds, const uint32_t* train, size_t num_train,
                        const uint32_t* val, size_t num_val, const hg_train_config* cfg,
                        hg_model** out) {
  return guard([&] {
    require(ds, "dataset");
    require(out, "out");
    auto result = hetgraph::train(ds->ds.graph, ds->ds.labels, nodes_of(train, num_train),
                                  to_config(cfg), nodes_of(val, num_val));
    *out = new hg_model{std::move(result)};
  });
}

void hg_model_free(hg_model* model) { delete model; }

hg_status hg_model_predict(const hg_dataset* ds, const hg_model* model, uint32_t* out) {
  return guard([&] {
    require(ds, "dataset");
    require(model, "model");
    require(out, "out");
    auto pred = hetgraph::predict(ds->ds.graph, model->result.weights);
    std::copy(pred.begin(), pred.end(), out);
  });
}

hg_status hg_model_weights(const hg_model* model, const double** data, size_t* rows,
                           size_t* cols) {
  return guard([&] {
    require(model, "model");
    require(data, "data");
    const auto& w = model->result.weights;
    *data = w.data().data();
    if (rows) *rows = w.rows();
    if (cols) *cols = w.cols();
  });
}

hg_status hg_model_history(const hg_model* model, double* initial_loss, const double** loss,
                           const double** train_accuracy, const double** val_accuracy,
                           size_t* epochs) {
  return guard([&] {
    require(model, "model");
    const auto& h = model->result.history;
    if (initial_loss) *initial_loss = h.initial_loss;
    if (loss) *loss = h.loss.data();
    if (train_accuracy) *train_accuracy = h.train_accuracy.data();
    if (val_accuracy) *val_accuracy = h.val_accuracy.empty() ? nullptr : h.val_accuracy.data();
    if (epochs) *epochs = h.loss.size();
  });
}

hg_status hg_model_write_weights(const hg_model* model, const char* path) {
  return guard([&] {
    require(model, "model");
    require(path, "path");
    hetgraph::write_file_atomic(path, hetgraph::format_weights(model->result.weights));
  });
}

hg_status hg_sgcn_forward(const hg_dataset* ds, const double* weights, int threads, double* probs) {
  return guard([&] {
    require(ds, "dataset");
    require(probs, "probs");
    auto h = hetgraph::forward(ds->ds.graph, matrix_from(ds->ds, weights), threads);
    std::copy(h.data().begin(), h.data().end(), probs);
  });
}

hg_status hg_sgcn_loss(const hg_dataset* ds, const double* weights, const uint32_t* batch,
                       size_t count, double* out) {
  return guard([&] {
    require(ds, "dataset");
    require(out, "out");
    auto h = hetgraph::forward(ds->ds.graph, matrix_from(ds->ds, weights));
    *out = hetgraph::cross_entropy(h, ds->ds.labels, nodes_of(batch, count));
  });
}

hg_status hg_sgcn_gradient(const hg_dataset* ds, const double* weights, const uint32_t* batch,
                           size_t count, int threads, double* out) {
  return guard([&] {
    require(ds, "dataset");
    require(out, "out");
    auto g = hetgraph::gradient(ds->ds.graph, matrix_from(ds->ds, weights), ds->ds.labels,
                                nodes_of(batch, count), threads);
    std::copy(g.data().begin(), g.data().end(), out);
  });
}

hg_status hg_sgcn_leave_one_out(const hg_dataset* ds, uint32_t u, const hg_train_config* cfg,
                                uint32_t* predicted, int* correct) {
  return guard([&] {
    require(ds, "dataset");
    auto r = hetgraph::leave_one_out(ds->ds.graph, ds->ds.labels, u, to_config(cfg));
    if (predicted) *predicted = r.predicted;
    if (correct) *correct = r.correct ? 1 : 0;
  });
}

hg_status hg_accuracy(const hg_dataset* ds, const uint32_t* pred, const uint32_t* subset,
                      size_t count, double* out) {
  return guard([&] {
    require(ds, "dataset");
    require(pred, "pred");
    require(out, "out");
    std::span<const hetgraph::ClassId> p(pred, ds->ds.labels.size());
    *out = hetgraph::accuracy(p, ds->ds.labels, nodes_of(subset, count));
  });
}

hg_status hg_pearson_r(const double* xs, const double* ys, size_t n, double* out) {
  return guard([&] {
    require(out, "out");
    if (n) {
      require(xs, "xs");
      require(ys, "ys");
    }
    *out = hetgraph::pearson_r({xs, n}, {ys, n});
  });
}

hg_status hg_correlate_node_metric(const double* metric, const int8_t* correct, size_t n,
                                   hg_correlation_method method, size_t bins,
                                   hg_correlation* out) {
  return guard([&] {
    require(out, "out");
    if (n) {
      require(metric, "metric");
      require(correct, "correct");
    }
    std::vector<std::optional<double>> m(n);
    std::vector<std::optional<bool>> c(n);
    for (size_t u = 0; u < n; ++u) {
      if (!std::isnan(metric[u])) m[u] = metric[u];
      if (correct[u] >= 0) c[u] = correct[u] != 0;
    }
    auto r = hetgraph::correlate_node_metric(
        m, c,
        method == HG_CORR_BINNED ? hetgraph::CorrelationMethod::kBinned
                                 : hetgraph::CorrelationMethod::kPointBiserial,
        bins);
    *out = hg_correlation{r.r, r.used, r.dropped, r.mean_metric, r.accuracy, r.bins.size()};
  });
}

hg_status hg_per_class_accuracy(const hg_dataset* ds, const uint32_t* pred, const uint32_t* subset,
                                size_t count, double* out) {
  return guard([&] {
    require(ds, "dataset");
    require(pred, "pred");
    require(out, "out");
    std::span<const hetgraph::ClassId> p(pred, ds->ds.labels.size());
    auto acc = hetgraph::per_class_accuracy(p, ds->ds.labels, optional_subset(subset, count));
    for (size_t c = 0; c < acc.size(); ++c) out[c] = or_nan(acc[c]);
  });
}

hg_status hg_graph_level_table(const hg_graph_row* rows, size_t num_rows, const char* const* models,
                               size_t num_models, hg_graph_correlation* out) {
  return guard([&] {
    require(out, "out");
    if (num_rows) require(rows, "rows");
    if (num_models) require(models, "models");
    std::vector<hetgraph::GraphLevelRow> table;
    for (size_t i = 0; i < num_rows; ++i) {
      hetgraph::GraphLevelRow row;
      row.dataset = rows[i].dataset ? rows[i].dataset : "";
      row.h = rows[i].h;
      row.ccns = rows[i].ccns;
      row.two_ncs = rows[i].two_ncs;
      if (num_models) require(rows[i].accuracy, "accuracy");
      for (size_t m = 0; m < num_models; ++m) row.accuracy[models[m]] = rows[i].accuracy[m];
      table.push_back(std::move(row));
    }
    auto report = hetgraph::graph_level_table(table);
    static const char* const kMetricNames[] = {"h", "ccns", "two_ncs"};
    size_t i = 0;
    for (const char* metric : kMetricNames) {
      for (size_t m = 0; m < num_models; ++m) {
        for (const auto& c : report.correlations) {
          if (c.metric == metric && c.model == models[m]) out[i] = {metric, m, c.r};
        }
        ++i;
      }
    }
  });
}

hg_status hg_predictions_load(const char* path, size_t n, int8_t* correct_out) {
  return guard([&] {
    require(path, "path");
    if (n) require(correct_out, "correct_out");
    auto c = hetgraph::load_external_predictions(path, n);
    for (size_t u = 0; u < n; ++u) correct_out[u] = c[u] ? (*c[u] ? 1 : 0) : -1;
  });
}

hg_status hg_metric_table_load(const char* path, hg_metric_table** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    auto t = hetgraph::load_node_metric_table(path);
    auto table = std::make_unique<hg_metric_table>();
    table->names = t.columns;
    table->n = t.num_nodes();
    for (const auto& col : t.values) {
      std::vector<double> v(col.size());
      for (size_t u = 0; u < col.size(); ++u) v[u] = or_nan(col[u]);
      table->columns.push_back(std::move(v));
    }
    *out = table.release();
  });
}

void hg_metric_table_free(hg_metric_table* table) { delete table; }

size_t hg_metric_table_num_nodes(const hg_metric_table* table) { return table ? table->n : 0; }

size_t hg_metric_table_num_columns(const hg_metric_table* table) {
  return table ? table->names.size() : 0;
}

const char* hg_metric_table_column_name(const hg_metric_table* table, size_t i) {
  if (!table || i >= table->names.size()) return nullptr;
  return table->names[i].c_str();
}

const double* hg_metric_table_column(const hg_metric_table* table, size_t i) {
  if (!table || i >= table->columns.size()) return nullptr;
  return table->columns[i].data();
}

hg_status hg_write_file_atomic(const char* path, const char* data, size_t len) {
  return guard([&] {
    require(path, "path");
    if (len) require(data, "data");
    hetgraph::write_file_atomic(path, std::string_view(data ? data : "", len));
  });
}

}  // extern "C"
