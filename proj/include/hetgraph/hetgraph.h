/*
 * Copyright 2026 The hetgraph Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * hetgraph C API.
 *
 * Every fallible call returns an hg_status. On failure a message describing
 * the error is available from hg_last_error() on the calling thread until
 * the next hg_* call on that thread.
 *
 * Arrays of per-node metric values use NaN for "undefined". Correctness
 * arrays use -1 for "no prediction", 0 for wrong and 1 for correct.
 *
 * Handles are not synchronized: a dataset may be read from many threads at
 * once but must not be mutated (hg_dataset_set_visible) concurrently.
 */

#ifndef HETGRAPH_H_
#define HETGRAPH_H_

#include <stddef.h>
#include <stdint.h>

#if defined(HETGRAPH_BUILDING_LIBRARY)
#define HG_API __attribute__((visibility("default")))
#else
#define HG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hg_status {
  HG_OK = 0,
  HG_ERR_UNDEFINED = 1, /* metric or statistic undefined for this input */
  HG_ERR_INPUT = 2,     /* malformed input, bad index, unreadable file */
  HG_ERR_INTERNAL = 3
} hg_status;

HG_API const char* hg_version(void);
HG_API const char* hg_last_error(void);

typedef struct hg_dataset hg_dataset;
typedef struct hg_model hg_model;
typedef struct hg_metric_table hg_metric_table;

/* ---- datasets --------------------------------------------------------- */

/* Loads a geom-GCN directory (out1_graph_edges.txt,
 * out1_node_feature_label.txt) or a native one (edges.tsv, nodes.tsv). */
HG_API hg_status hg_dataset_load(const char* dir, hg_dataset** out);
HG_API hg_status hg_dataset_fig2(hg_dataset** out);
HG_API hg_status hg_dataset_planted_partition(const size_t* class_sizes, size_t num_classes,
                                              double p_in, double p_out, uint64_t seed,
                                              hg_dataset** out);
/* edges holds num_edges (u, v) pairs flattened; class names become the
 * zero-padded decimal class indices. */
HG_API hg_status hg_dataset_from_edges(size_t n, const uint32_t* edges, size_t num_edges,
                                       const uint32_t* labels, size_t num_classes,
                                       hg_dataset** out);
HG_API void hg_dataset_free(hg_dataset* ds);
HG_API hg_status hg_dataset_write(const hg_dataset* ds, const char* dir);

typedef struct hg_dataset_info {
  size_t num_nodes;
  size_t num_edges; /* undirected simple edges after symmetrization */
  size_t num_classes;
  size_t raw_edge_rows;
  size_t self_loops;
  size_t duplicate_pairs;
  size_t asymmetric_pairs;
  size_t visible_labels;
  int has_features;
} hg_dataset_info;

HG_API hg_status hg_dataset_info_get(const hg_dataset* ds, hg_dataset_info* out);
/* NULL when c is out of range. Owned by the dataset. */
HG_API const char* hg_dataset_class_name(const hg_dataset* ds, uint32_t c);
HG_API hg_status hg_dataset_find_class(const hg_dataset* ds, const char* name, uint32_t* out);
HG_API hg_status hg_dataset_label(const hg_dataset* ds, uint32_t u, uint32_t* out);
/* *out points into the dataset and stays valid for its lifetime. */
HG_API hg_status hg_dataset_neighbors(const hg_dataset* ds, uint32_t u, const uint32_t** out,
                                      size_t* count);
/* Hides every label except those of the listed nodes. */
HG_API hg_status hg_dataset_set_visible(hg_dataset* ds, const uint32_t* nodes, size_t count);
HG_API void hg_dataset_clear_visible(hg_dataset* ds);

/* ---- node lists and splits ---------------------------------------------- */

HG_API hg_status hg_node_list_load(const char* path, size_t n, uint32_t** out, size_t* count);
HG_API hg_status hg_node_list_write(const char* path, const uint32_t* nodes, size_t count);
HG_API void hg_node_list_free(uint32_t* nodes);

typedef struct hg_split {
  uint32_t* train;
  size_t num_train;
  uint32_t* val;
  size_t num_val;
  uint32_t* test;
  size_t num_test;
} hg_split;

HG_API hg_status hg_split_generate(size_t n, double f_train, double f_val, double f_test,
                                   uint64_t seed, hg_split* out);
HG_API hg_status hg_split_load_dir(const char* dir, size_t n, hg_split* out);
HG_API hg_status hg_split_write_dir(const hg_split* split, const char* dir);
HG_API void hg_split_release(hg_split* split);

/* ---- structural metrics -------------------------------------------------- */

HG_API hg_status hg_edge_homophily(const hg_dataset* ds, double* out);
HG_API hg_status hg_local_homophily(const hg_dataset* ds, uint32_t u, double* out);
/* counts must hold num_classes entries. Respects the visibility mask. */
HG_API hg_status hg_label_histogram(const hg_dataset* ds, uint32_t u, uint32_t* counts);
HG_API hg_status hg_ccns_node(const hg_dataset* ds, uint32_t u, double* out);
HG_API hg_status hg_two_ncs_node(const hg_dataset* ds, uint32_t u, double* out);
/* out must hold num_classes * num_classes entries, row-major. */
HG_API hg_status hg_ccns_matrix(const hg_dataset* ds, int threads, double* out);

typedef enum hg_ccns_reduction {
  HG_CCNS_DIAG_MEAN = 0,
  HG_CCNS_FULL_MEAN = 1,
  HG_CCNS_WEIGHTED_DIAG = 2
} hg_ccns_reduction;

HG_API hg_status hg_ccns_graph(const hg_dataset* ds, hg_ccns_reduction reduction, int threads,
                               double* out);

typedef struct hg_average {
  double value;
  size_t evaluated;
  size_t undefined;
} hg_average;

/* subset == NULL averages over the nodes with visible labels. */
HG_API hg_status hg_two_ncs_graph(const hg_dataset* ds, const uint32_t* subset, size_t count,
                                  int threads, hg_average* out);
HG_API hg_status hg_two_ncs_class(const hg_dataset* ds, uint32_t c, const uint32_t* subset,
                                  size_t count, int threads, hg_average* out);
/* Each output holds num_nodes entries or is NULL to skip that metric. */
HG_API hg_status hg_node_metrics(const hg_dataset* ds, int threads, double* local_h,
                                 double* ccns, double* two_ncs);

/* ---- simplified GCN ------------------------------------------------------ */

typedef enum hg_init { HG_INIT_ZEROS = 0, HG_INIT_UNIFORM = 1 } hg_init;

typedef struct hg_train_config {
  double learning_rate;
  size_t epochs;
  size_t batch_size; /* 0 = full batch */
  uint64_t seed;
  hg_init init;
  int threads;
} hg_train_config;

HG_API void hg_train_config_default(hg_train_config* cfg);
HG_API hg_status hg_sgcn_train(const hg_dataset* ds, const uint32_t* train, size_t num_train,
                               const uint32_t* val, size_t num_val, const hg_train_config* cfg,
                               hg_model** out);
HG_API void hg_model_free(hg_model* model);
/* out holds num_nodes class indices. */
HG_API hg_status hg_model_predict(const hg_dataset* ds, const hg_model* model, uint32_t* out);
HG_API hg_status hg_model_weights(const hg_model* model, const double** data, size_t* rows,
                                  size_t* cols);
/* val_accuracy is NULL when training ran without validation nodes. */
HG_API hg_status hg_model_history(const hg_model* model, double* initial_loss,
                                  const double** loss, const double** train_accuracy,
                                  const double** val_accuracy, size_t* epochs);
HG_API hg_status hg_model_write_weights(const hg_model* model, const char* path);
/* weights and probs are num_nodes x num_classes, row-major. */
HG_API hg_status hg_sgcn_forward(const hg_dataset* ds, const double* weights, int threads,
                                 double* probs);
HG_API hg_status hg_sgcn_loss(const hg_dataset* ds, const double* weights, const uint32_t* batch,
                              size_t count, double* out);
HG_API hg_status hg_sgcn_gradient(const hg_dataset* ds, const double* weights,
                                  const uint32_t* batch, size_t count, int threads, double* out);
HG_API hg_status hg_sgcn_leave_one_out(const hg_dataset* ds, uint32_t u,
                                       const hg_train_config* cfg, uint32_t* predicted,
                                       int* correct);
HG_API hg_status hg_accuracy(const hg_dataset* ds, const uint32_t* pred, const uint32_t* subset,
                             size_t count, double* out);

/* ---- analysis ------------------------------------------------------------ */

HG_API hg_status hg_pearson_r(const double* xs, const double* ys, size_t n, double* out);

typedef enum hg_correlation_method {
  HG_CORR_POINT_BISERIAL = 0,
  HG_CORR_BINNED = 1
} hg_correlation_method;

typedef struct hg_correlation {
  double r;
  size_t used;
  size_t dropped;
  double mean_metric;
  double accuracy;
  size_t bins_used;
} hg_correlation;

HG_API hg_status hg_correlate_node_metric(const double* metric, const int8_t* correct, size_t n,
                                          hg_correlation_method method, size_t bins,
                                          hg_correlation* out);
/* out holds num_classes entries, NaN for classes absent from the subset.
 * subset == NULL means all nodes. */
HG_API hg_status hg_per_class_accuracy(const hg_dataset* ds, const uint32_t* pred,
                                       const uint32_t* subset, size_t count, double* out);

typedef struct hg_graph_row {
  const char* dataset;
  double h;
  double ccns;
  double two_ncs;
  const double* accuracy; /* one per model */
} hg_graph_row;

typedef struct hg_graph_correlation {
  const char* metric; /* "h", "ccns", "two_ncs"; static storage */
  size_t model;       /* index into the models array */
  double r;
} hg_graph_correlation;

/* out holds 3 * num_models entries, metric-major. */
HG_API hg_status hg_graph_level_table(const hg_graph_row* rows, size_t num_rows,
                                      const char* const* models, size_t num_models,
                                      hg_graph_correlation* out);

/* correct_out holds n entries. */
HG_API hg_status hg_predictions_load(const char* path, size_t n, int8_t* correct_out);

HG_API hg_status hg_metric_table_load(const char* path, hg_metric_table** out);
HG_API void hg_metric_table_free(hg_metric_table* table);
HG_API size_t hg_metric_table_num_nodes(const hg_metric_table* table);
HG_API size_t hg_metric_table_num_columns(const hg_metric_table* table);
HG_API const char* hg_metric_table_column_name(const hg_metric_table* table, size_t i);
/* num_nodes values, NaN where undefined or absent. NULL if i is out of range. */
HG_API const double* hg_metric_table_column(const hg_metric_table* table, size_t i);

/* Writes via a temporary sibling file and rename. */
HG_API hg_status hg_write_file_atomic(const char* path, const char* data, size_t len);

#ifdef __cplusplus
}
#endif

#endif /* HETGRAPH_H_ */
