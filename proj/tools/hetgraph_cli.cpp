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

// hetgraph command-line tool. Everything goes through the C API.

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hetgraph/hetgraph.h"
#include "json.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

// Carries an hg_status out to main().
struct Failure {
  hg_status status;
  std::string message;
};

void check(hg_status s) {
  if (s != HG_OK) throw Failure{s, hg_last_error()};
}

[[noreturn]] void input_error(const std::string& message) { throw Failure{HG_ERR_INPUT, message}; }

int exit_code(hg_status s) {
  switch (s) {
    case HG_OK:
      return 0;
    case HG_ERR_UNDEFINED:
      return 1;
    case HG_ERR_INPUT:
      return 2;
    default:
      return 3;
  }
}

std::string fmt(double x) {
  if (std::isnan(x)) return "";
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.6g", x);
  return buf.data();
}

// A number printed with six significant digits; null when NaN.
json num(double x) {
  if (std::isnan(x)) return nullptr;
  return json::parse(fmt(x));
}

std::string sha256_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) input_error("cannot read " + path.string());
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr);
  std::array<char, 1 << 16> buf{};
  while (in) {
    in.read(buf.data(), buf.size());
    EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), md.data(), &len);
  std::string hex;
  for (unsigned int i = 0; i < len; ++i) {
    std::array<char, 3> b{};
    std::snprintf(b.data(), b.size(), "%02x", md[i]);
    hex += b.data();
  }
  return hex;
}

// Records what a run depended on so that it can be reproduced.
class Manifest {
 public:
  explicit Manifest(std::string subcommand) : subcommand_(std::move(subcommand)) {}

  void arg(const std::string& key, json value) { args_[key] = std::move(value); }
  void seed(std::uint64_t s) { seed_ = s; }

  // Files are digested individually; directories digest every regular file
  // inside, in name order.
  void input(const fs::path& path) {
    if (fs::is_directory(path)) {
      std::vector<fs::path> files;
      for (const auto& e : fs::directory_iterator(path)) {
        if (e.is_regular_file()) files.push_back(e.path());
      }
      std::sort(files.begin(), files.end());
      for (const auto& f : files) inputs_.push_back({{"path", f.string()}, {"sha256", sha256_file(f)}});
    } else {
      inputs_.push_back({{"path", path.string()}, {"sha256", sha256_file(path)}});
    }
  }

  void write_beside(const fs::path& output) const {
    json m;
    m["tool"] = "hetgraph";
    m["version"] = hg_version();
    m["subcommand"] = subcommand_;
    m["args"] = args_;
    m["seed"] = seed_ ? json(*seed_) : json(nullptr);
    m["inputs"] = inputs_;
    fs::path target = output;
    if (!target.has_filename()) target = target.parent_path();
    target += ".manifest.json";
    write_text(target, m.dump(2) + "\n");
  }

  static void write_text(const fs::path& path, const std::string& text) {
    check(hg_write_file_atomic(path.c_str(), text.data(), text.size()));
  }

 private:
  std::string subcommand_;
  json args_ = json::object();
  std::optional<std::uint64_t> seed_;
  json inputs_ = json::array();
};

// Writes to --out (atomically, with a manifest) or to stdout.
void emit(const std::string& out, const std::string& text, const Manifest& manifest) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  Manifest::write_text(out, text);
  manifest.write_beside(out);
}

struct DatasetHandle {
  hg_dataset* ds = nullptr;
  hg_dataset_info info{};

  explicit DatasetHandle(const std::string& path) {
    if (!fs::exists(path)) input_error("no such dataset path: " + path);
    check(hg_dataset_load(path.c_str(), &ds));
    check(hg_dataset_info_get(ds, &info));
  }
  DatasetHandle(const DatasetHandle&) = delete;
  DatasetHandle& operator=(const DatasetHandle&) = delete;
  ~DatasetHandle() { hg_dataset_free(ds); }

  std::string class_name(std::uint32_t c) const { return hg_dataset_class_name(ds, c); }
};

struct NodeList {
  std::uint32_t* data = nullptr;
  std::size_t size = 0;
  NodeList(const std::string& path, std::size_t n) {
    if (!fs::exists(path)) input_error("no such file: " + path);
    check(hg_node_list_load(path.c_str(), n, &data, &size));
  }
  NodeList(const NodeList&) = delete;
  NodeList& operator=(const NodeList&) = delete;
  ~NodeList() { hg_node_list_free(data); }
};

struct Split {
  hg_split s{};
  Split() = default;
  Split(const Split&) = delete;
  Split& operator=(const Split&) = delete;
  ~Split() { hg_split_release(&s); }
};

struct Model {
  hg_model* m = nullptr;
  Model() = default;
  Model(const Model&) = delete;
  Model& operator=(const Model&) = delete;
  ~Model() { hg_model_free(m); }
};

int default_threads() {
  if (const char* env = std::getenv("HETGRAPH_THREADS")) {
    int t = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, t);
    if (ec == std::errc() && ptr == end && t >= 1) return t;
    input_error(std::string("HETGRAPH_THREADS must be a positive integer, got '") + env + "'");
  }
  return 1;
}

// Options shared across subcommands.
struct Common {
  int threads = 0;  // 0 = take HETGRAPH_THREADS or 1
  int resolved_threads() const { return threads > 0 ? threads : default_threads(); }
};

hg_ccns_reduction parse_reduction(const std::string& name) {
  if (name == "diag_mean") return HG_CCNS_DIAG_MEAN;
  if (name == "full_mean") return HG_CCNS_FULL_MEAN;
  if (name == "weighted_diag") return HG_CCNS_WEIGHTED_DIAG;
  input_error("unknown CCNS reduction '" + name + "'");
}

const std::array<std::pair<const char*, hg_ccns_reduction>, 3> kReductions{{
    {"diag_mean", HG_CCNS_DIAG_MEAN},
    {"full_mean", HG_CCNS_FULL_MEAN},
    {"weighted_diag", HG_CCNS_WEIGHTED_DIAG},
}};

// ---- stats ------------------------------------------------------------------

struct StatsArgs {
  std::string dataset;
  std::string mask;
  std::string out;
  std::string format = "text";
};

int run_stats(const StatsArgs& a, const Common& common) {
  DatasetHandle d(a.dataset);
  const int threads = common.resolved_threads();
  std::optional<NodeList> mask;
  if (!a.mask.empty()) {
    mask.emplace(a.mask, d.info.num_nodes);
    check(hg_dataset_set_visible(d.ds, mask->data, mask->size));
  }

  json r;
  r["dataset"] = a.dataset;
  r["nodes"] = d.info.num_nodes;
  r["edges"] = d.info.num_edges;
  r["classes"] = d.info.num_classes;
  r["raw_edge_rows"] = d.info.raw_edge_rows;
  r["self_loops"] = d.info.self_loops;
  r["duplicate_pairs"] = d.info.duplicate_pairs;
  r["asymmetric_pairs"] = d.info.asymmetric_pairs;
  r["mask"] = a.mask.empty() ? json(nullptr) : json(a.mask);
  r["visible_labels"] = d.info.visible_labels;

  double h = NAN;
  hg_status hs = hg_edge_homophily(d.ds, &h);
  if (hs != HG_OK && hs != HG_ERR_UNDEFINED) check(hs);
  r["h"] = num(h);

  json ccns = json::object();
  for (auto [name, red] : kReductions) {
    double v = NAN;
    check(hg_ccns_graph(d.ds, red, threads, &v));
    ccns[name] = num(v);
  }
  r["ccns"] = ccns;

  hg_average avg{NAN, 0, 0};
  hg_status ts = hg_two_ncs_graph(d.ds, nullptr, 0, threads, &avg);
  if (ts != HG_OK && ts != HG_ERR_UNDEFINED) check(ts);
  if (ts != HG_OK) avg.value = NAN;
  r["two_ncs"] = {{"value", num(avg.value)}, {"evaluated", avg.evaluated}, {"undefined", avg.undefined}};

  Manifest manifest("stats");
  manifest.arg("dataset", a.dataset);
  manifest.arg("mask", r["mask"]);
  manifest.arg("threads", threads);
  manifest.input(a.dataset);
  if (!a.mask.empty()) manifest.input(a.mask);

  if (!a.out.empty()) {
    emit(a.out, r.dump(2) + "\n", manifest);
    return 0;
  }
  if (a.format == "json") {
    std::cout << r.dump(2) << "\n";
    return 0;
  }
  std::cout << "dataset             " << a.dataset << "\n"
            << "nodes               " << d.info.num_nodes << "\n"
            << "edges               " << d.info.num_edges << "\n"
            << "classes             " << d.info.num_classes << "\n"
            << "raw edge rows       " << d.info.raw_edge_rows << " (self-loops " << d.info.self_loops
            << ", duplicates " << d.info.duplicate_pairs << ", one-directional "
            << d.info.asymmetric_pairs << ")\n"
            << "visible labels      " << d.info.visible_labels << "\n"
            << "h                   " << (std::isnan(h) ? "undefined" : fmt(h)) << "\n";
  for (auto [name, red] : kReductions) {
    std::string label = std::string("ccns ") + name;
    label.resize(20, ' ');
    std::cout << label << r["ccns"][name].dump() << "\n";
  }
  std::cout << "2ncs                " << (std::isnan(avg.value) ? "undefined" : fmt(avg.value))
            << " (" << avg.evaluated << " evaluated, " << avg.undefined << " undefined)\n";
  return 0;
}

// ---- metrics ----------------------------------------------------------------

struct MetricsArgs {
  std::string dataset;
  std::string level = "graph";
  std::string metric = "all";
  std::string mask;
  std::string reduction = "diag_mean";
  std::string out;
  std::string format = "csv";
};

struct MetricSelection {
  bool h = false, ccns = false, two_ncs = false;
};

MetricSelection select_metrics(const std::string& m) {
  if (m == "h") return {true, false, false};
  if (m == "ccns") return {false, true, false};
  if (m == "2ncs") return {false, false, true};
  if (m == "all") return {true, true, true};
  input_error("unknown metric '" + m + "'");
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string s;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) s += ',';
    s += cells[i];
  }
  return s + "\n";
}

int run_metrics(const MetricsArgs& a, const Common& common) {
  const MetricSelection sel = select_metrics(a.metric);
  const hg_ccns_reduction reduction = parse_reduction(a.reduction);
  DatasetHandle d(a.dataset);
  const int threads = common.resolved_threads();
  const std::size_t n = d.info.num_nodes, k = d.info.num_classes;
  std::optional<NodeList> mask;
  if (!a.mask.empty()) {
    mask.emplace(a.mask, n);
    check(hg_dataset_set_visible(d.ds, mask->data, mask->size));
  }

  Manifest manifest("metrics");
  manifest.arg("dataset", a.dataset);
  manifest.arg("level", a.level);
  manifest.arg("metric", a.metric);
  manifest.arg("mask", a.mask.empty() ? json(nullptr) : json(a.mask));
  manifest.arg("reduction", a.reduction);
  manifest.arg("format", a.format);
  manifest.arg("threads", threads);
  manifest.input(a.dataset);
  if (!a.mask.empty()) manifest.input(a.mask);

  json report;
  report["dataset"] = a.dataset;
  report["level"] = a.level;
  report["mask"] = a.mask.empty() ? json(nullptr) : json(a.mask);
  if (sel.ccns) report["reduction"] = a.reduction;
  std::string csv;

  if (a.level == "node") {
    std::vector<double> lh(n), cc(n), tn(n);
    check(hg_node_metrics(d.ds, threads, sel.h ? lh.data() : nullptr,
                          sel.ccns ? cc.data() : nullptr, sel.two_ncs ? tn.data() : nullptr));
    std::vector<std::string> header{"node_id"};
    if (sel.h) header.push_back("local_h");
    if (sel.ccns) header.push_back("ccns_node");
    if (sel.two_ncs) header.push_back("two_ncs");
    csv = csv_line(header);
    json rows = json::array();
    for (std::size_t u = 0; u < n; ++u) {
      std::vector<std::string> cells{std::to_string(u)};
      json row{{"node_id", u}};
      if (sel.h) cells.push_back(fmt(lh[u])), row["local_h"] = num(lh[u]);
      if (sel.ccns) cells.push_back(fmt(cc[u])), row["ccns_node"] = num(cc[u]);
      if (sel.two_ncs) cells.push_back(fmt(tn[u])), row["two_ncs"] = num(tn[u]);
      csv += csv_line(cells);
      rows.push_back(std::move(row));
    }
    report["nodes"] = std::move(rows);
  } else if (a.level == "class") {
    std::vector<double> lh(n), s(k * k);
    if (sel.h) check(hg_node_metrics(d.ds, threads, lh.data(), nullptr, nullptr));
    if (sel.ccns) check(hg_ccns_matrix(d.ds, threads, s.data()));
    csv = csv_line({"class_id", "class_name", "metric", "value", "evaluated", "undefined"});
    json rows = json::array();
    for (std::uint32_t c = 0; c < k; ++c) {
      const std::string name = d.class_name(c);
      if (sel.h) {
        // Mean local homophily over the class members with neighbors.
        double sum = 0.0;
        std::size_t used = 0, undefined = 0;
        for (std::uint32_t u = 0; u < n; ++u) {
          std::uint32_t y = 0;
          check(hg_dataset_label(d.ds, u, &y));
          if (y != c) continue;
          if (std::isnan(lh[u])) {
            ++undefined;
          } else {
            sum += lh[u];
            ++used;
          }
        }
        const double v = used ? sum / static_cast<double>(used) : NAN;
        csv += csv_line({std::to_string(c), name, "local_h", fmt(v), std::to_string(used),
                         std::to_string(undefined)});
        rows.push_back({{"class_id", c}, {"class_name", name}, {"metric", "local_h"},
                        {"value", num(v)}, {"evaluated", used}, {"undefined", undefined}});
      }
      if (sel.ccns) {
        const double v = s[c * k + c];
        csv += csv_line({std::to_string(c), name, "ccns", fmt(v), "", ""});
        rows.push_back({{"class_id", c}, {"class_name", name}, {"metric", "ccns"}, {"value", num(v)}});
      }
      if (sel.two_ncs) {
        hg_average avg{NAN, 0, 0};
        hg_status st = hg_two_ncs_class(d.ds, c, nullptr, 0, threads, &avg);
        if (st != HG_OK && st != HG_ERR_UNDEFINED) check(st);
        if (st != HG_OK) avg.value = NAN;
        csv += csv_line({std::to_string(c), name, "two_ncs", fmt(avg.value),
                         std::to_string(avg.evaluated), std::to_string(avg.undefined)});
        rows.push_back({{"class_id", c}, {"class_name", name}, {"metric", "two_ncs"},
                        {"value", num(avg.value)}, {"evaluated", avg.evaluated},
                        {"undefined", avg.undefined}});
      }
    }
    report["classes"] = std::move(rows);
  } else if (a.level == "graph") {
    csv = csv_line({"metric", "value", "evaluated", "undefined"});
    json rows = json::array();
    if (sel.h) {
      double h = 0.0;
      check(hg_edge_homophily(d.ds, &h));
      csv += csv_line({"h", fmt(h), "", ""});
      rows.push_back({{"metric", "h"}, {"value", num(h)}});
    }
    if (sel.ccns) {
      double v = 0.0;
      check(hg_ccns_graph(d.ds, reduction, threads, &v));
      csv += csv_line({"ccns", fmt(v), "", ""});
      rows.push_back({{"metric", "ccns"}, {"value", num(v)}, {"reduction", a.reduction}});
    }
    if (sel.two_ncs) {
      hg_average avg{};
      check(hg_two_ncs_graph(d.ds, nullptr, 0, threads, &avg));
      csv += csv_line({"two_ncs", fmt(avg.value), std::to_string(avg.evaluated),
                       std::to_string(avg.undefined)});
      rows.push_back({{"metric", "two_ncs"}, {"value", num(avg.value)},
                      {"evaluated", avg.evaluated}, {"undefined", avg.undefined}});
    }
    report["results"] = std::move(rows);
  } else {
    input_error("unknown level '" + a.level + "'");
  }

  emit(a.out, a.format == "json" ? report.dump(2) + "\n" : csv, manifest);
  return 0;
}

// ---- sgcn -------------------------------------------------------------------

struct TrainArgs {
  double learning_rate = 0.1;
  std::size_t epochs = 200;
  std::size_t batch_size = 0;
  std::uint64_t seed = 0;
  std::string init = "zeros";

  hg_train_config config(int threads) const {
    hg_train_config cfg;
    hg_train_config_default(&cfg);
    cfg.learning_rate = learning_rate;
    cfg.epochs = epochs;
    cfg.batch_size = batch_size;
    cfg.seed = seed;
    if (init == "zeros") {
      cfg.init = HG_INIT_ZEROS;
    } else if (init == "uniform") {
      cfg.init = HG_INIT_UNIFORM;
    } else {
      input_error("unknown init '" + init + "'");
    }
    cfg.threads = threads;
    return cfg;
  }

  void record(Manifest& m) const {
    m.arg("lr", learning_rate);
    m.arg("epochs", epochs);
    m.arg("batch_size", batch_size);
    m.arg("init", init);
    m.seed(seed);
  }
};

void add_train_flags(CLI::App* app, TrainArgs& t) {
  app->add_option("--lr", t.learning_rate, "Learning rate")->capture_default_str();
  app->add_option("--epochs", t.epochs, "Training epochs")->capture_default_str();
  app->add_option("--batch-size", t.batch_size, "Batch size, 0 for full batch")->capture_default_str();
  app->add_option("--seed", t.seed, "Seed for shuffling and initialization")->capture_default_str();
  app->add_option("--init", t.init, "Weight initialization")
      ->check(CLI::IsMember({"zeros", "uniform"}))
      ->capture_default_str();
}

struct SgcnTrainArgs {
  std::string dataset;
  std::string split;
  std::string eval = "test";
  std::string out;
  std::string weights;
  std::string history;
  TrainArgs train;
};

int run_sgcn_train(const SgcnTrainArgs& a, const Common& common) {
  DatasetHandle d(a.dataset);
  const int threads = common.resolved_threads();
  const std::size_t n = d.info.num_nodes;
  Split split;
  if (a.split.empty()) {
    check(hg_split_generate(n, 0.6, 0.2, 0.2, a.train.seed, &split.s));
  } else {
    if (!fs::exists(a.split)) input_error("no such split directory: " + a.split);
    check(hg_split_load_dir(a.split.c_str(), n, &split.s));
  }

  const hg_train_config cfg = a.train.config(threads);
  Model model;
  check(hg_sgcn_train(d.ds, split.s.train, split.s.num_train, split.s.val, split.s.num_val, &cfg,
                      &model.m));
  std::vector<std::uint32_t> pred(n);
  check(hg_model_predict(d.ds, model.m, pred.data()));

  std::vector<std::uint32_t> eval;
  if (a.eval == "test") {
    eval.assign(split.s.test, split.s.test + split.s.num_test);
  } else if (a.eval == "val") {
    eval.assign(split.s.val, split.s.val + split.s.num_val);
  } else if (a.eval == "train") {
    eval.assign(split.s.train, split.s.train + split.s.num_train);
  } else {
    eval.resize(n);
    for (std::uint32_t u = 0; u < n; ++u) eval[u] = u;
  }
  if (eval.empty()) input_error("the " + a.eval + " set is empty");

  Manifest manifest("sgcn train");
  manifest.arg("dataset", a.dataset);
  manifest.arg("split", a.split.empty() ? json(nullptr) : json(a.split));
  manifest.arg("eval", a.eval);
  manifest.arg("threads", threads);
  a.train.record(manifest);
  manifest.input(a.dataset);
  if (!a.split.empty()) manifest.input(a.split);

  auto subset_accuracy = [&](const std::uint32_t* nodes, std::size_t count) {
    double acc = NAN;
    if (count) check(hg_accuracy(d.ds, pred.data(), nodes, count, &acc));
    return acc;
  };
  double initial = 0.0;
  const double *loss = nullptr, *train_acc = nullptr, *val_acc = nullptr;
  std::size_t epochs = 0;
  check(hg_model_history(model.m, &initial, &loss, &train_acc, &val_acc, &epochs));

  if (!a.out.empty()) {
    std::string csv = "node_id,true_label,pred_label,correct\n";
    for (std::uint32_t u : eval) {
      std::uint32_t y = 0;
      check(hg_dataset_label(d.ds, u, &y));
      csv += csv_line({std::to_string(u), std::to_string(y), std::to_string(pred[u]),
                       y == pred[u] ? "1" : "0"});
    }
    emit(a.out, csv, manifest);
  }
  if (!a.weights.empty()) {
    check(hg_model_write_weights(model.m, a.weights.c_str()));
    manifest.write_beside(a.weights);
  }
  if (!a.history.empty()) {
    std::string csv = "epoch,loss,train_accuracy,val_accuracy\n";
    csv += csv_line({"0", fmt(initial), "", ""});
    for (std::size_t e = 0; e < epochs; ++e) {
      csv += csv_line({std::to_string(e + 1), fmt(loss[e]), fmt(train_acc[e]),
                       val_acc ? fmt(val_acc[e]) : ""});
    }
    emit(a.history, csv, manifest);
  }

  std::cout << "initial_loss=" << fmt(initial) << " final_loss=" << fmt(loss[epochs - 1])
            << " train_acc=" << fmt(subset_accuracy(split.s.train, split.s.num_train))
            << " val_acc=" << fmt(subset_accuracy(split.s.val, split.s.num_val))
            << " test_acc=" << fmt(subset_accuracy(split.s.test, split.s.num_test)) << "\n";
  return 0;
}

struct SgcnLooArgs {
  std::string dataset;
  std::int64_t node = -1;
  TrainArgs train;
};

int run_sgcn_loo(const SgcnLooArgs& a, const Common& common) {
  DatasetHandle d(a.dataset);
  if (a.node < 0 || static_cast<std::uint64_t>(a.node) >= d.info.num_nodes) {
    input_error("node " + std::to_string(a.node) + " out of range (n=" +
                std::to_string(d.info.num_nodes) + ")");
  }
  const hg_train_config cfg = a.train.config(common.resolved_threads());
  std::uint32_t predicted = 0;
  int correct = 0;
  check(hg_sgcn_leave_one_out(d.ds, static_cast<std::uint32_t>(a.node), &cfg, &predicted, &correct));
  std::cout << "predicted=" << d.class_name(predicted) << " correct=" << (correct ? "true" : "false")
            << "\n";
  return 0;
}

// ---- synth ------------------------------------------------------------------

struct SynthArgs {
  std::string out;
  std::vector<std::size_t> sizes;
  double p_in = 0.0;
  double p_out = 0.0;
  std::uint64_t seed = 0;
};

int write_synth(hg_dataset* ds, const std::string& out, Manifest& manifest) {
  std::unique_ptr<hg_dataset, decltype(&hg_dataset_free)> owned(ds, hg_dataset_free);
  check(hg_dataset_write(ds, out.c_str()));
  manifest.write_beside(out);
  hg_dataset_info info;
  check(hg_dataset_info_get(ds, &info));
  std::cout << "wrote " << out << ": " << info.num_nodes << " nodes, " << info.num_edges
            << " edges, " << info.num_classes << " classes\n";
  return 0;
}

int run_synth_fig2(const SynthArgs& a) {
  hg_dataset* ds = nullptr;
  check(hg_dataset_fig2(&ds));
  Manifest manifest("synth fig2");
  return write_synth(ds, a.out, manifest);
}

int run_synth_pp(const SynthArgs& a) {
  if (a.sizes.empty()) input_error("--sizes needs at least one class size");
  hg_dataset* ds = nullptr;
  check(hg_dataset_planted_partition(a.sizes.data(), a.sizes.size(), a.p_in, a.p_out, a.seed, &ds));
  Manifest manifest("synth pp");
  manifest.arg("sizes", a.sizes);
  manifest.arg("pin", a.p_in);
  manifest.arg("pout", a.p_out);
  manifest.seed(a.seed);
  return write_synth(ds, a.out, manifest);
}

// ---- split ------------------------------------------------------------------

struct SplitArgs {
  std::string dataset;
  double train = 0.6, val = 0.2, test = 0.2;
  std::uint64_t seed = 0;
  std::string out;
};

int run_split(const SplitArgs& a) {
  DatasetHandle d(a.dataset);
  Split split;
  check(hg_split_generate(d.info.num_nodes, a.train, a.val, a.test, a.seed, &split.s));
  check(hg_split_write_dir(&split.s, a.out.c_str()));
  Manifest manifest("split");
  manifest.arg("dataset", a.dataset);
  manifest.arg("fractions", {a.train, a.val, a.test});
  manifest.seed(a.seed);
  manifest.input(a.dataset);
  manifest.write_beside(a.out);
  std::cout << "wrote " << a.out << ": train " << split.s.num_train << ", val " << split.s.num_val
            << ", test " << split.s.num_test << "\n";
  return 0;
}

// ---- correlate --------------------------------------------------------------

struct CorrelateArgs {
  std::string metrics;
  std::string preds;
  std::string table;
  std::vector<std::string> columns;
  std::string method = "point_biserial";
  std::size_t bins = 10;
  std::string dataset;
  std::string model = "sgcn";
  std::string out;
  std::string format = "json";
};

const std::vector<std::string> kReportFields{"dataset", "metric", "level", "value", "model",
                                             "accuracy", "r", "method", "dropped"};

std::string report_csv(const json& rows) {
  std::string csv = csv_line(kReportFields);
  for (const auto& row : rows) {
    std::vector<std::string> cells;
    for (const auto& f : kReportFields) {
      const json& v = row[f];
      cells.push_back(v.is_null() ? "" : v.is_string() ? v.get<std::string>() : v.dump());
    }
    csv += csv_line(cells);
  }
  return csv;
}

struct MetricTable {
  hg_metric_table* t = nullptr;
  explicit MetricTable(const std::string& path) {
    if (!fs::exists(path)) input_error("no such file: " + path);
    check(hg_metric_table_load(path.c_str(), &t));
  }
  MetricTable(const MetricTable&) = delete;
  MetricTable& operator=(const MetricTable&) = delete;
  ~MetricTable() { hg_metric_table_free(t); }
};

// Node level: each metric column against per-node correctness.
json correlate_nodes(const CorrelateArgs& a) {
  MetricTable table(a.metrics);
  const std::size_t n = hg_metric_table_num_nodes(table.t);
  if (!fs::exists(a.preds)) input_error("no such file: " + a.preds);
  std::vector<std::int8_t> correct(n);
  check(hg_predictions_load(a.preds.c_str(), n, correct.data()));
  hg_correlation_method method;
  if (a.method == "point_biserial") {
    method = HG_CORR_POINT_BISERIAL;
  } else if (a.method == "binned") {
    method = HG_CORR_BINNED;
  } else {
    input_error("unknown method '" + a.method + "'");
  }

  json rows = json::array();
  const std::size_t cols = hg_metric_table_num_columns(table.t);
  bool matched = false;
  for (std::size_t c = 0; c < cols; ++c) {
    const std::string name = hg_metric_table_column_name(table.t, c);
    if (!a.columns.empty() &&
        std::find(a.columns.begin(), a.columns.end(), name) == a.columns.end()) {
      continue;
    }
    matched = true;
    hg_correlation r{};
    check(hg_correlate_node_metric(hg_metric_table_column(table.t, c), correct.data(), n, method,
                                   a.bins, &r));
    json row;
    row["dataset"] = a.dataset.empty() ? json(nullptr) : json(a.dataset);
    row["metric"] = name;
    row["level"] = "node";
    row["value"] = num(r.mean_metric);
    row["model"] = a.model;
    row["accuracy"] = num(r.accuracy);
    row["r"] = num(r.r);
    row["method"] = a.method;
    row["dropped"] = r.dropped;
    row["used"] = r.used;
    if (method == HG_CORR_BINNED) row["bins"] = r.bins_used;
    rows.push_back(std::move(row));
  }
  if (!matched) input_error("no matching metric column in " + a.metrics);
  return rows;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    if (!cell.empty() && cell.back() == '\r') cell.pop_back();
    cells.push_back(cell);
  }
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

double parse_cell(const std::string& cell, const std::string& where) {
  try {
    std::size_t pos = 0;
    double v = std::stod(cell, &pos);
    if (pos == cell.size()) return v;
  } catch (const std::exception&) {
  }
  input_error(where + ": not a number '" + cell + "'");
}

// Graph level: a table "dataset,h,ccns,two_ncs,<model>..." with one row per
// dataset; every model column holds that model's accuracy.
json correlate_graphs(const CorrelateArgs& a) {
  std::ifstream in(a.table);
  if (!in) input_error("no such file: " + a.table);
  std::string line;
  if (!std::getline(in, line)) input_error(a.table + ": empty table");
  const auto header = split_csv(line);
  if (header.size() < 5 || header[0] != "dataset" || header[1] != "h" || header[2] != "ccns" ||
      header[3] != "two_ncs") {
    input_error(a.table + ": header must be dataset,h,ccns,two_ncs,<model>...");
  }
  std::vector<std::string> models(header.begin() + 4, header.end());
  std::vector<std::string> names;
  std::vector<std::vector<double>> acc;
  std::vector<std::array<double, 3>> metrics;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    auto cells = split_csv(line);
    const std::string where = a.table + ":" + std::to_string(lineno);
    if (cells.size() != header.size()) input_error(where + ": wrong number of cells");
    names.push_back(cells[0]);
    metrics.push_back({parse_cell(cells[1], where), parse_cell(cells[2], where),
                       parse_cell(cells[3], where)});
    std::vector<double> row;
    for (std::size_t m = 0; m < models.size(); ++m) row.push_back(parse_cell(cells[4 + m], where));
    acc.push_back(std::move(row));
  }

  std::vector<hg_graph_row> rows(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    rows[i] = {names[i].c_str(), metrics[i][0], metrics[i][1], metrics[i][2], acc[i].data()};
  }
  std::vector<const char*> model_names;
  for (const auto& m : models) model_names.push_back(m.c_str());
  std::vector<hg_graph_correlation> out(3 * models.size());
  check(hg_graph_level_table(rows.data(), rows.size(), model_names.data(), models.size(),
                             out.data()));

  json result = json::array();
  for (const auto& c : out) {
    double mean_acc = 0.0;
    for (const auto& r : acc) mean_acc += r[c.model];
    json row;
    row["dataset"] = a.dataset.empty() ? json(nullptr) : json(a.dataset);
    row["metric"] = c.metric;
    row["level"] = "graph";
    row["value"] = nullptr;
    row["model"] = models[c.model];
    row["accuracy"] = num(mean_acc / static_cast<double>(acc.size()));
    row["r"] = num(c.r);
    row["method"] = "pearson";
    row["dropped"] = 0;
    row["used"] = names.size();
    result.push_back(std::move(row));
  }
  return result;
}

int run_correlate(const CorrelateArgs& a) {
  const bool graph_mode = !a.table.empty();
  if (graph_mode == (!a.metrics.empty() || !a.preds.empty())) {
    input_error("give either --table, or both --metrics and --preds");
  }
  if (!graph_mode && (a.metrics.empty() || a.preds.empty())) {
    input_error("node-level correlation needs both --metrics and --preds");
  }
  json rows = graph_mode ? correlate_graphs(a) : correlate_nodes(a);

  Manifest manifest("correlate");
  manifest.arg("method", graph_mode ? "pearson" : a.method);
  manifest.arg("bins", a.bins);
  manifest.arg("columns", a.columns);
  manifest.arg("dataset", a.dataset);
  manifest.arg("model", a.model);
  manifest.arg("format", a.format);
  if (graph_mode) {
    manifest.input(a.table);
  } else {
    manifest.input(a.metrics);
    manifest.input(a.preds);
  }
  emit(a.out, a.format == "csv" ? report_csv(rows) : rows.dump(2) + "\n", manifest);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homophily metrics, 2-hop neighbor class similarity and a simplified GCN"};
  app.set_version_flag("--version", std::string(hg_version()));
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--threads", common.threads,
                 "Worker threads (default: $HETGRAPH_THREADS or 1)")
      ->check(CLI::PositiveNumber);

  int result = 0;
  std::function<int()> action;

  StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "Dataset summary and graph-level metrics");
  stats_cmd->add_option("dataset", stats.dataset, "Dataset directory")->required();
  stats_cmd->add_option("--mask", stats.mask, "Node list whose labels stay visible");
  stats_cmd->add_option("--out", stats.out, "Write the JSON report here");
  stats_cmd->add_option("--format", stats.format)->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  stats_cmd->callback([&] { action = [&] { return run_stats(stats, common); }; });

  MetricsArgs metrics;
  auto* metrics_cmd = app.add_subcommand("metrics", "Node, class or graph level metrics");
  metrics_cmd->add_option("dataset", metrics.dataset, "Dataset directory")->required();
  metrics_cmd->add_option("--level", metrics.level)
      ->check(CLI::IsMember({"node", "class", "graph"}))
      ->capture_default_str();
  metrics_cmd->add_option("--metric", metrics.metric)
      ->check(CLI::IsMember({"h", "ccns", "2ncs", "all"}))
      ->capture_default_str();
  metrics_cmd->add_option("--mask", metrics.mask, "Node list whose labels stay visible");
  metrics_cmd->add_option("--reduction", metrics.reduction, "Graph-level CCNS reduction")
      ->check(CLI::IsMember({"diag_mean", "full_mean", "weighted_diag"}))
      ->capture_default_str();
  metrics_cmd->add_option("--out", metrics.out, "Output file (default stdout)");
  metrics_cmd->add_option("--format", metrics.format)->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  metrics_cmd->callback([&] { action = [&] { return run_metrics(metrics, common); }; });

  auto* sgcn_cmd = app.add_subcommand("sgcn", "Simplified GCN");
  sgcn_cmd->require_subcommand(1);
  SgcnTrainArgs train;
  auto* train_cmd = sgcn_cmd->add_subcommand("train", "Train and predict");
  train_cmd->add_option("dataset", train.dataset, "Dataset directory")->required();
  train_cmd->add_option("--split", train.split,
                        "Directory with train.txt[, val.txt, test.txt]; default: a seeded 60/20/20 split");
  train_cmd->add_option("--eval", train.eval, "Nodes written to the predictions file")
      ->check(CLI::IsMember({"train", "val", "test", "all"}))
      ->capture_default_str();
  train_cmd->add_option("--out", train.out, "Predictions CSV");
  train_cmd->add_option("--weights", train.weights, "Dump the trained weight matrix");
  train_cmd->add_option("--history", train.history, "Per-epoch loss and accuracy CSV");
  add_train_flags(train_cmd, train.train);
  train_cmd->callback([&] { action = [&] { return run_sgcn_train(train, common); }; });

  SgcnLooArgs loo;
  auto* loo_cmd = sgcn_cmd->add_subcommand("loo", "Train on every other visible node, predict one");
  loo_cmd->add_option("dataset", loo.dataset, "Dataset directory")->required();
  loo_cmd->add_option("--node", loo.node, "Held-out node")->required();
  add_train_flags(loo_cmd, loo.train);
  loo_cmd->callback([&] { action = [&] { return run_sgcn_loo(loo, common); }; });

  auto* synth_cmd = app.add_subcommand("synth", "Synthetic datasets");
  synth_cmd->require_subcommand(1);
  SynthArgs synth;
  auto* fig2_cmd = synth_cmd->add_subcommand("fig2", "The 113-node counterexample graph");
  fig2_cmd->add_option("--out", synth.out, "Output directory")->required();
  fig2_cmd->callback([&] { action = [&] { return run_synth_fig2(synth); }; });
  auto* pp_cmd = synth_cmd->add_subcommand("pp", "Planted partition graph");
  pp_cmd->add_option("--sizes", synth.sizes, "Class sizes, comma separated")
      ->delimiter(',')
      ->required();
  pp_cmd->add_option("--pin", synth.p_in, "Intra-class edge probability")->required();
  pp_cmd->add_option("--pout", synth.p_out, "Inter-class edge probability")->required();
  pp_cmd->add_option("--seed", synth.seed)->capture_default_str();
  pp_cmd->add_option("--out", synth.out, "Output directory")->required();
  pp_cmd->callback([&] { action = [&] { return run_synth_pp(synth); }; });

  SplitArgs split;
  auto* split_cmd = app.add_subcommand("split", "Seeded train/val/test split");
  split_cmd->add_option("dataset", split.dataset, "Dataset directory")->required();
  split_cmd->add_option("--train", split.train)->capture_default_str();
  split_cmd->add_option("--val", split.val)->capture_default_str();
  split_cmd->add_option("--test", split.test)->capture_default_str();
  split_cmd->add_option("--seed", split.seed)->capture_default_str();
  split_cmd->add_option("--out", split.out, "Output directory")->required();
  split_cmd->callback([&] { action = [&] { return run_split(split); }; });

  CorrelateArgs corr;
  auto* corr_cmd = app.add_subcommand("correlate", "Correlate metrics with model accuracy");
  corr_cmd->add_option("--metrics", corr.metrics, "Per-node metric CSV");
  corr_cmd->add_option("--preds", corr.preds, "Predictions CSV");
  corr_cmd->add_option("--column", corr.columns, "Metric columns to use (default all)");
  corr_cmd->add_option("--table", corr.table,
                       "Graph-level table: dataset,h,ccns,two_ncs,<model accuracies>...");
  corr_cmd->add_option("--method", corr.method)
      ->check(CLI::IsMember({"point_biserial", "binned"}))
      ->capture_default_str();
  corr_cmd->add_option("--bins", corr.bins)->capture_default_str();
  corr_cmd->add_option("--dataset", corr.dataset, "Dataset name recorded in the report");
  corr_cmd->add_option("--model", corr.model, "Model name recorded in the report")
      ->capture_default_str();
  corr_cmd->add_option("--out", corr.out, "Output file (default stdout)");
  corr_cmd->add_option("--format", corr.format)->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  corr_cmd->callback([&] { action = [&] { return run_correlate(corr); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    result = action();
  } catch (const Failure& f) {
    std::cerr << "hetgraph: " << f.message << "\n";
    return exit_code(f.status);
  } catch (const std::exception& e) {
    std::cerr << "hetgraph: " << e.what() << "\n";
    return 3;
  }
  return result;
}
