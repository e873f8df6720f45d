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

// Reference implementations used only by tests. They work on a dense
// adjacency matrix and naive loops so they share no code path with the
// library beyond the Graph type used to build the matrix.

#ifndef HETGRAPH_TESTS_ORACLES_HPP_
#define HETGRAPH_TESTS_ORACLES_HPP_

#include <cmath>
#include <functional>
#include <optional>
#include <vector>

#include "hetgraph/graph.hpp"
#include "hetgraph/random.hpp"
#include "hetgraph/sgcn.hpp"

namespace hetgraph::oracle {

using Adjacency = std::vector<std::vector<bool>>;

inline Adjacency dense_adjacency(std::size_t n, const std::vector<Edge>& edges) {
  Adjacency a(n, std::vector<bool>(n, false));
  for (auto [u, v] : edges) {
    if (u == v) continue;
    a[u][v] = true;
    a[v][u] = true;
  }
  return a;
}

inline Adjacency dense_adjacency(const Graph& g) {
  Adjacency a(g.num_nodes(), std::vector<bool>(g.num_nodes(), false));
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    for (NodeId v : g.neighbors(u)) a[u][v] = true;
  }
  return a;
}

inline bool in_closed(const Adjacency& a, std::size_t u, std::size_t v) {
  return u == v || a[u][v];
}

inline double edge_homophily(const Adjacency& a, const std::vector<ClassId>& y) {
  std::size_t same = 0, total = 0;
  for (std::size_t u = 0; u < a.size(); ++u) {
    for (std::size_t v = u + 1; v < a.size(); ++v) {
      if (!a[u][v]) continue;
      ++total;
      same += y[u] == y[v];
    }
  }
  return static_cast<double>(same) / static_cast<double>(total);
}

// Direct transcription of the 2-hop neighbor class similarity sum over
// v in N'(u), z in N'(v) \ {u}; visibility filters z. Terms are summed in
// ascending v, matching the library's documented order.
inline std::optional<double> two_ncs(const Adjacency& a, const std::vector<ClassId>& y,
                                     const std::vector<bool>& visible, std::size_t u) {
  const std::size_t n = a.size();
  double sum = 0.0;
  std::size_t terms = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (!in_closed(a, u, v)) continue;
    std::uint32_t num = 0, den = 0;
    for (std::size_t z = 0; z < n; ++z) {
      if (!in_closed(a, v, z) || z == u || !visible[z]) continue;
      ++den;
      num += y[z] == y[u];
    }
    if (den == 0) continue;
    sum += static_cast<double>(num) / static_cast<double>(den);
    ++terms;
  }
  if (terms == 0) return std::nullopt;
  return sum / static_cast<double>(terms);
}

inline std::vector<double> histogram(const Adjacency& a, const std::vector<ClassId>& y,
                                     std::size_t k, std::size_t u) {
  std::vector<double> h(k, 0.0);
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (a[u][v]) h[y[v]] += 1.0;
  }
  return h;
}

inline double cosine(const std::vector<double>& x, const std::vector<double>& z) {
  double dot = 0.0, xx = 0.0, zz = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) xx += x[i] * x[i];
  for (std::size_t i = 0; i < z.size(); ++i) zz += z[i] * z[i];
  if (xx == 0.0 || zz == 0.0) return 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) dot += x[i] * z[i];
  return dot / std::sqrt(xx * zz);
}

// s(c, c') as the literal double sum over u in V_c, v in V_c' (ascending),
// each unordered class pair computed once with c <= c'.
inline std::vector<double> ccns_matrix(const Adjacency& a, const std::vector<ClassId>& y,
                                       std::size_t k) {
  const std::size_t n = a.size();
  std::vector<std::vector<double>> hist;
  for (std::size_t u = 0; u < n; ++u) hist.push_back(histogram(a, y, k, u));
  std::vector<double> s(k * k, 0.0);
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t d = c; d < k; ++d) {
      double sum = 0.0;
      std::size_t nc = 0, nd = 0;
      for (std::size_t u = 0; u < n; ++u) nc += y[u] == c;
      for (std::size_t v = 0; v < n; ++v) nd += y[v] == d;
      if (nc == 0 || nd == 0) continue;
      for (std::size_t u = 0; u < n; ++u) {
        if (y[u] != c) continue;
        for (std::size_t v = 0; v < n; ++v) {
          if (y[v] == d) sum += cosine(hist[u], hist[v]);
        }
      }
      s[c * k + d] = s[d * k + c] = sum / (static_cast<double>(nc) * static_cast<double>(nd));
    }
  }
  return s;
}

// Central finite differences of f with respect to every entry of w.
inline DenseMatrix finite_difference(const std::function<double(const DenseMatrix&)>& f,
                                     DenseMatrix w, double step) {
  DenseMatrix g(w.rows(), w.cols());
  for (std::size_t r = 0; r < w.rows(); ++r) {
    for (std::size_t c = 0; c < w.cols(); ++c) {
      const double keep = w(r, c);
      w(r, c) = keep + step;
      const double up = f(w);
      w(r, c) = keep - step;
      const double down = f(w);
      w(r, c) = keep;
      g(r, c) = (up - down) / (2.0 * step);
    }
  }
  return g;
}

// Dense softmax(A + I) W, independent of the sparse forward pass.
inline DenseMatrix forward(const Adjacency& a, const DenseMatrix& w) {
  const std::size_t n = a.size(), k = w.cols();
  DenseMatrix h(n, k);
  for (std::size_t u = 0; u < n; ++u) {
    std::vector<double> z(k, 0.0);
    for (std::size_t v = 0; v < n; ++v) {
      if (!in_closed(a, u, v)) continue;
      for (std::size_t c = 0; c < k; ++c) z[c] += w(v, c);
    }
    double mx = z[0];
    for (double x : z) mx = std::max(mx, x);
    double sum = 0.0;
    for (double& x : z) sum += (x = std::exp(x - mx));
    for (std::size_t c = 0; c < k; ++c) h(u, c) = z[c] / sum;
  }
  return h;
}

inline double loss(const Adjacency& a, const DenseMatrix& w, const std::vector<ClassId>& y,
                   const std::vector<NodeId>& batch) {
  const DenseMatrix h = forward(a, w);
  double sum = 0.0;
  for (NodeId z : batch) sum -= std::log(std::max(h(z, y[z]), 1e-12));
  return sum / static_cast<double>(batch.size());
}

// Random simple graph fixture: Erdos-Renyi with the given edge probability
// and uniform labels.
struct Fixture {
  std::size_t n = 0;
  std::size_t k = 1;
  std::vector<Edge> edges;
  std::vector<ClassId> y;
};

inline Fixture random_fixture(Rng& rng, std::size_t max_n, std::size_t max_k) {
  Fixture f;
  f.n = 2 + static_cast<std::size_t>(rng.below(max_n - 1));
  f.k = 1 + static_cast<std::size_t>(rng.below(max_k));
  const double p = 0.02 + 0.4 * rng.uniform01();
  for (NodeId u = 0; u < f.n; ++u) {
    for (NodeId v = u + 1; v < f.n; ++v) {
      if (rng.bernoulli(p)) f.edges.emplace_back(u, v);
    }
  }
  for (std::size_t u = 0; u < f.n; ++u) f.y.push_back(static_cast<ClassId>(rng.below(f.k)));
  return f;
}

}  // namespace hetgraph::oracle

#endif  // HETGRAPH_TESTS_ORACLES_HPP_
