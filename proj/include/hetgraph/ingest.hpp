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

#ifndef HETGRAPH_INGEST_HPP_
#define HETGRAPH_INGEST_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hetgraph/graph.hpp"

namespace hetgraph {

// Per-node feature rows. Carried through loading and writing, never read by
// any metric or model.
using FeatureRows = std::vector<std::vector<float>>;

struct Dataset {
  Graph graph;
  LabelSet labels;
  // Original label strings; class index c is the c-th string in sorted order.
  std::vector<std::string> class_names;
  std::optional<std::vector<std::string>> node_names;
  std::optional<FeatureRows> features;
  // Raw edge rows read from disk and what symmetrization did to them.
  BuildStats build;
};

struct SplitSet {
  std::vector<NodeId> train;
  std::vector<NodeId> val;
  std::vector<NodeId> test;
};

struct SplitFractions {
  double train = 0.6;
  double val = 0.2;
  double test = 0.2;
};

struct EdgeListFile {
  std::size_t n = 0;
  bool explicit_n = false;  // "# n=<int>" header was present
  std::vector<Edge> pairs;
};

// Whitespace-separated "<u> <v>" rows; '#' starts a comment. A "# n=<int>"
// comment fixes the node count, otherwise n = max index + 1.
EdgeListFile load_edge_list(const std::filesystem::path& path);

enum class NodeTableLayout {
  kLabelThenFeatures,  // nodes.tsv: "<id>\t<label>[\t<csv features>]"
  kFeaturesThenLabel,  // geom-GCN: "<id>\t<csv features>\t<label>"
};

struct NodeTable {
  LabelSet labels;
  std::vector<std::string> class_names;
  std::optional<FeatureRows> features;
};

// Every id in [0, n) must appear exactly once. When n is empty it is taken
// from the number of rows. Feature rows must all have the same width for the
// kLabelThenFeatures layout; geom-GCN feature columns pass through as-is.
NodeTable load_node_table(const std::filesystem::path& path,
                          std::optional<std::size_t> n,
                          NodeTableLayout layout = NodeTableLayout::kLabelThenFeatures,
                          bool skip_header = false);

// Lexicographic label-string -> class-index mapping.
NodeTable make_node_table(std::span<const std::string> raw_labels);

inline constexpr std::string_view kGeomGcnEdgeFile = "out1_graph_edges.txt";
inline constexpr std::string_view kGeomGcnNodeFile = "out1_node_feature_label.txt";
inline constexpr std::string_view kEdgeFile = "edges.tsv";
inline constexpr std::string_view kNodeFile = "nodes.tsv";

Dataset load_geomgcn_dir(const std::filesystem::path& dir);
// edges.tsv + nodes.tsv, the layout write_dataset produces.
Dataset load_native_dir(const std::filesystem::path& dir);
// Picks the geom-GCN or native layout by the files present.
Dataset load_dataset(const std::filesystem::path& dir);

// Writes edges.tsv (with "# n=" header, each undirected edge once) and
// nodes.tsv into dir, creating it if needed.
void write_dataset(const Dataset& ds, const std::filesystem::path& dir);

// Deterministic shuffle of [0, n), then contiguous slices of
// floor(fraction * n) nodes. When the fractions sum to 1 the rounding
// remainder goes to test.
SplitSet generate_splits(std::size_t n, SplitFractions fractions, std::uint64_t seed);

// One node index per line; result sorted and deduplicated.
std::vector<NodeId> load_split(const std::filesystem::path& path, std::size_t n);
void write_split(const std::filesystem::path& path, std::span<const NodeId> nodes);

// train.txt / val.txt / test.txt inside dir.
SplitSet load_split_dir(const std::filesystem::path& dir, std::size_t n);
void write_split_dir(const SplitSet& split, const std::filesystem::path& dir);

// Writes to a temporary sibling and renames it over path.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace hetgraph

#endif  // HETGRAPH_INGEST_HPP_
