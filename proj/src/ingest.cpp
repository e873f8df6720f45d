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

#include "hetgraph/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "hetgraph/error.hpp"
#include "hetgraph/random.hpp"

namespace hetgraph {
namespace fs = std::filesystem;

namespace {

std::string location(const fs::path& path, std::size_t line) {
  return path.string() + ":" + std::to_string(line);
}

std::ifstream open_input(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return in;
}

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

template <typename Int>
bool parse_int(std::string_view tok, Int& out) {
  if (tok.empty()) return false;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<float> parse_features(std::string_view field, const fs::path& path,
                                  std::size_t line) {
  std::vector<float> row;
  field = trim(field);
  if (field.empty()) return row;
  for (auto tok : split(field, ',')) {
    tok = trim(tok);
    float v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw InputError(location(path, line) + ": bad feature value '" +
                       std::string(tok) + "'");
    }
    row.push_back(v);
  }
  return row;
}

// Reads "<u> <v>" rows. Returns pairs plus the largest index seen.
EdgeListFile parse_edge_rows(const fs::path& path, bool skip_header) {
  auto in = open_input(path);
  EdgeListFile out;
  std::size_t max_plus_one = 0;
  std::string raw;
  std::size_t line = 0;
  bool saw_anything = false;
  while (std::getline(in, raw)) {
    ++line;
    if (skip_header && line == 1) continue;
    std::string_view text = raw;
    if (auto hash = text.find('#'); hash != std::string_view::npos) {
      auto comment = trim(text.substr(hash + 1));
      if (comment.starts_with("n=")) {
        std::size_t n = 0;
        if (!parse_int(trim(comment.substr(2)), n)) {
          throw InputError(location(path, line) + ": malformed node-count header");
        }
        out.n = n;
        out.explicit_n = true;
        saw_anything = true;
      }
      text = text.substr(0, hash);
    }
    text = trim(text);
    if (text.empty()) continue;
    auto toks = split_ws(text);
    NodeId u = 0, v = 0;
    if (toks.size() != 2 || !parse_int(toks[0], u) || !parse_int(toks[1], v)) {
      throw InputError(location(path, line) + ": expected two nonnegative integers, got '" +
                       std::string(text) + "'");
    }
    if (out.explicit_n && (u >= out.n || v >= out.n)) {
      throw InputError(location(path, line) + ": endpoint outside [0, " +
                       std::to_string(out.n) + ")");
    }
    max_plus_one = std::max<std::size_t>({max_plus_one, std::size_t{u} + 1, std::size_t{v} + 1});
    out.pairs.emplace_back(u, v);
    saw_anything = true;
  }
  if (!saw_anything) throw InputError(path.string() + ": no edges");
  if (!out.explicit_n) {
    out.n = max_plus_one;
  } else if (max_plus_one > out.n) {
    throw InputError(path.string() + ": edge endpoint exceeds declared n");
  }
  return out;
}

void require_file(const fs::path& path) {
  if (!fs::is_regular_file(path)) {
    throw InputError("missing dataset file " + path.string());
  }
}

std::string format_float(float v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace

EdgeListFile load_edge_list(const fs::path& path) {
  return parse_edge_rows(path, /*skip_header=*/false);
}

NodeTable make_node_table(std::span<const std::string> raw_labels) {
  std::vector<std::string> names(raw_labels.begin(), raw_labels.end());
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  std::vector<ClassId> y(raw_labels.size());
  for (std::size_t u = 0; u < raw_labels.size(); ++u) {
    auto it = std::lower_bound(names.begin(), names.end(), raw_labels[u]);
    y[u] = static_cast<ClassId>(it - names.begin());
  }
  std::size_t k = std::max<std::size_t>(names.size(), 1);
  return NodeTable{LabelSet(std::move(y), k), std::move(names), std::nullopt};
}

NodeTable load_node_table(const fs::path& path, std::optional<std::size_t> n,
                          NodeTableLayout layout, bool skip_header) {
  auto in = open_input(path);

  struct Row {
    NodeId id;
    std::string label;
    std::optional<std::vector<float>> features;
    std::size_t line;
  };
  std::vector<Row> rows;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (skip_header && line == 1) continue;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (trim(raw).empty()) continue;
    auto cols = split(raw, '\t');
    Row row{0, {}, std::nullopt, line};
    if (!parse_int(trim(cols[0]), row.id)) {
      throw InputError(location(path, line) + ": bad node id '" + std::string(cols[0]) + "'");
    }
    if (layout == NodeTableLayout::kLabelThenFeatures) {
      if (cols.size() < 2 || cols.size() > 3) {
        throw InputError(location(path, line) + ": expected <id>\\t<label>[\\t<features>]");
      }
      row.label = std::string(trim(cols[1]));
      if (cols.size() == 3) row.features = parse_features(cols[2], path, line);
    } else {
      if (cols.size() != 3) {
        throw InputError(location(path, line) + ": expected <id>\\t<features>\\t<label>");
      }
      row.features = parse_features(cols[1], path, line);
      row.label = std::string(trim(cols[2]));
    }
    if (row.label.empty()) throw InputError(location(path, line) + ": empty label");
    rows.push_back(std::move(row));
  }

  const std::size_t count = n.value_or(rows.size());
  std::vector<std::string> labels(count);
  std::vector<std::uint8_t> seen(count, 0);
  FeatureRows features(count);
  std::optional<std::size_t> width;
  std::size_t with_features = 0;
  for (auto& row : rows) {
    if (row.id >= count) {
      throw InputError(location(path, row.line) + ": node id " + std::to_string(row.id) +
                       " outside [0, " + std::to_string(count) + ")");
    }
    if (seen[row.id]) {
      throw InputError(location(path, row.line) + ": duplicate node id " +
                       std::to_string(row.id));
    }
    seen[row.id] = 1;
    labels[row.id] = std::move(row.label);
    if (row.features) {
      ++with_features;
      if (layout == NodeTableLayout::kLabelThenFeatures) {
        if (width && *width != row.features->size()) {
          throw InputError(location(path, row.line) + ": ragged feature row (" +
                           std::to_string(row.features->size()) + " values, expected " +
                           std::to_string(*width) + ")");
        }
        width = row.features->size();
      }
      features[row.id] = std::move(*row.features);
    }
  }
  for (std::size_t u = 0; u < count; ++u) {
    if (!seen[u]) {
      throw InputError(path.string() + ": node id " + std::to_string(u) + " missing");
    }
  }
  if (with_features != 0 && with_features != count) {
    throw InputError(path.string() + ": ragged feature rows (some nodes have none)");
  }

  NodeTable table = make_node_table(labels);
  if (with_features) table.features = std::move(features);
  return table;
}

Dataset load_geomgcn_dir(const fs::path& dir) {
  const fs::path edge_path = dir / kGeomGcnEdgeFile;
  const fs::path node_path = dir / kGeomGcnNodeFile;
  require_file(node_path);
  require_file(edge_path);

  NodeTable table = load_node_table(node_path, std::nullopt,
                                    NodeTableLayout::kFeaturesThenLabel,
                                    /*skip_header=*/true);
  const std::size_t n = table.labels.size();
  EdgeListFile edges = parse_edge_rows(edge_path, /*skip_header=*/true);
  if (edges.n > n) {
    throw InputError(edge_path.string() + ": edge references node " +
                     std::to_string(edges.n - 1) + " but " + node_path.string() +
                     " lists only " + std::to_string(n) + " nodes");
  }

  Dataset ds;
  ds.graph = build_graph(n, edges.pairs, &ds.build);
  ds.labels = std::move(table.labels);
  ds.class_names = std::move(table.class_names);
  ds.features = std::move(table.features);
  return ds;
}

Dataset load_native_dir(const fs::path& dir) {
  const fs::path edge_path = dir / kEdgeFile;
  const fs::path node_path = dir / kNodeFile;
  require_file(node_path);
  require_file(edge_path);

  NodeTable table = load_node_table(node_path, std::nullopt);
  const std::size_t n = table.labels.size();
  EdgeListFile edges = load_edge_list(edge_path);
  if ((edges.explicit_n && edges.n != n) || edges.n > n) {
    throw InputError(edge_path.string() + ": node count " + std::to_string(edges.n) +
                     " does not match " + std::to_string(n) + " rows in " +
                     node_path.string());
  }

  Dataset ds;
  ds.graph = build_graph(n, edges.pairs, &ds.build);
  ds.labels = std::move(table.labels);
  ds.class_names = std::move(table.class_names);
  ds.features = std::move(table.features);
  return ds;
}

Dataset load_dataset(const fs::path& dir) {
  if (!fs::exists(dir)) throw InputError("no such dataset path: " + dir.string());
  if (!fs::is_directory(dir)) throw InputError("dataset path is not a directory: " + dir.string());
  if (fs::exists(dir / kGeomGcnEdgeFile) || fs::exists(dir / kGeomGcnNodeFile)) {
    return load_geomgcn_dir(dir);
  }
  return load_native_dir(dir);
}

void write_dataset(const Dataset& ds, const fs::path& dir) {
  const std::size_t n = ds.graph.num_nodes();
  if (ds.labels.size() != n) throw InputError("label count does not match node count");
  if (ds.class_names.size() != ds.labels.num_classes()) {
    throw InputError("class_names length does not match num_classes");
  }
  for (const auto& name : ds.class_names) {
    if (name.empty() || name.find_first_of("\t\r\n") != std::string::npos) {
      throw InputError("class name '" + name + "' cannot be written to nodes.tsv");
    }
  }
  fs::create_directories(dir);

  std::ostringstream edges;
  edges << "# n=" << n << '\n';
  for (auto [u, v] : ds.graph.edges()) edges << u << '\t' << v << '\n';
  write_file_atomic(dir / kEdgeFile, edges.str());

  std::ostringstream nodes;
  for (NodeId u = 0; u < n; ++u) {
    nodes << u << '\t' << ds.class_names[ds.labels[u]];
    if (ds.features) {
      nodes << '\t';
      const auto& row = (*ds.features)[u];
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (j) nodes << ',';
        nodes << format_float(row[j]);
      }
    }
    nodes << '\n';
  }
  write_file_atomic(dir / kNodeFile, nodes.str());
}

SplitSet generate_splits(std::size_t n, SplitFractions f, std::uint64_t seed) {
  auto bad = [](double x) { return !std::isfinite(x) || x < 0.0; };
  const double sum = f.train + f.val + f.test;
  if (bad(f.train) || bad(f.val) || bad(f.test) || sum > 1.0 + 1e-9) {
    throw InputError("split fractions must be nonnegative and sum to at most 1");
  }
  // Small slack so that e.g. 0.29 * 100 lands on 29.
  auto take = [n](double frac) {
    return std::min<std::size_t>(n, static_cast<std::size_t>(std::floor(frac * n + 1e-9)));
  };

  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  Rng rng(seed);
  rng.shuffle(std::span<NodeId>(order));

  const std::size_t n_train = take(f.train);
  const std::size_t n_val = std::min(take(f.val), n - n_train);
  const std::size_t rest = n - n_train - n_val;
  const std::size_t n_test = std::abs(sum - 1.0) <= 1e-9 ? rest : std::min(take(f.test), rest);

  SplitSet out;
  auto first = order.begin();
  out.train.assign(first, first + n_train);
  out.val.assign(first + n_train, first + n_train + n_val);
  out.test.assign(first + n_train + n_val, first + n_train + n_val + n_test);
  std::sort(out.train.begin(), out.train.end());
  std::sort(out.val.begin(), out.val.end());
  std::sort(out.test.begin(), out.test.end());
  return out;
}

std::vector<NodeId> load_split(const fs::path& path, std::size_t n) {
  auto in = open_input(path);
  std::vector<NodeId> out;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    NodeId u = 0;
    if (!parse_int(text, u)) {
      throw InputError(location(path, line) + ": expected a node index, got '" +
                       std::string(text) + "'");
    }
    if (u >= n) {
      throw InputError(location(path, line) + ": node " + std::to_string(u) +
                       " outside [0, " + std::to_string(n) + ")");
    }
    out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void write_split(const fs::path& path, std::span<const NodeId> nodes) {
  std::ostringstream os;
  for (NodeId u : nodes) os << u << '\n';
  write_file_atomic(path, os.str());
}

SplitSet load_split_dir(const fs::path& dir, std::size_t n) {
  SplitSet s;
  require_file(dir / "train.txt");
  s.train = load_split(dir / "train.txt", n);
  if (fs::exists(dir / "val.txt")) s.val = load_split(dir / "val.txt", n);
  if (fs::exists(dir / "test.txt")) s.test = load_split(dir / "test.txt", n);

  std::vector<std::uint8_t> owner(n, 0);
  for (auto* part : {&s.train, &s.val, &s.test}) {
    for (NodeId u : *part) {
      if (owner[u]) {
        throw InputError(dir.string() + ": node " + std::to_string(u) +
                         " appears in more than one split");
      }
      owner[u] = 1;
    }
  }
  return s;
}

void write_split_dir(const SplitSet& split, const fs::path& dir) {
  fs::create_directories(dir);
  write_split(dir / "train.txt", split.train);
  write_split(dir / "val.txt", split.val);
  write_split(dir / "test.txt", split.test);
}

void write_file_atomic(const fs::path& path, std::string_view content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw InputError("short write to " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw InputError("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
  }
}

}  // namespace hetgraph
