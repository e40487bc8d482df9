#pragma once

// Clustered graphs: n clusters of m vertices each, vertex v_{i,j} is
// position j of cluster i (both 1-based). Isolated vertices are implicit.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gtpt/error.hpp"
#include "gtpt/matrix.hpp"

namespace gtpt {

struct VertexLabel {
  int cluster{1};
  int position{1};

  friend auto operator<=>(const VertexLabel&, const VertexLabel&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const VertexLabel& v) {
  return os << '(' << v.cluster << ',' << v.position << ')';
}

/// Undirected edge stored with u < v.
struct Edge {
  VertexLabel u;
  VertexLabel v;

  Edge() = default;
  Edge(VertexLabel a, VertexLabel b) : u(std::min(a, b)), v(std::max(a, b)) {}

  bool is_intra_cluster() const noexcept { return u.cluster == v.cluster; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Edge& e) { return os << e.u << '-' << e.v; }

using LabelPair = std::pair<VertexLabel, VertexLabel>;

class ClusteredGraph {
 public:
  ClusteredGraph() = default;

  /// Validates labels, rejects self-loops, deduplicates and sorts the edges.
  ClusteredGraph(int n, int m, std::span<const LabelPair> edges) : n_(n), m_(m) {
    detail::require(n >= 1 && m >= 1, "cluster count and cluster size must be at least 1");
    edges_.reserve(edges.size());
    for (const auto& [a, b] : edges) {
      check_label(a);
      check_label(b);
      if (a == b) {
        detail::fail("self-loop at (" + std::to_string(a.cluster) + "," + std::to_string(a.position) + ")");
      }
      edges_.emplace_back(a, b);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  }

  ClusteredGraph(int n, int m, std::initializer_list<LabelPair> edges)
      : ClusteredGraph(n, m, std::span<const LabelPair>(edges.begin(), edges.size())) {}

  ClusteredGraph(int n, int m, const std::vector<Edge>& edges) : ClusteredGraph(n, m, to_pairs(edges)) {}

  int clusters() const noexcept { return n_; }
  int cluster_size() const noexcept { return m_; }
  int vertex_count() const noexcept { return n_ * m_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool contains(VertexLabel v) const noexcept {
    return v.cluster >= 1 && v.cluster <= n_ && v.position >= 1 && v.position <= m_;
  }

  bool has_edge(VertexLabel a, VertexLabel b) const {
    if (a == b) return false;
    return std::binary_search(edges_.begin(), edges_.end(), Edge(a, b));
  }

  /// Row-major vertex index: (cluster - 1) * m + (position - 1).
  std::size_t index(VertexLabel v) const noexcept {
    return static_cast<std::size_t>(v.cluster - 1) * m_ + static_cast<std::size_t>(v.position - 1);
  }

  VertexLabel label(std::size_t index) const noexcept {
    return {static_cast<int>(index / m_) + 1, static_cast<int>(index % m_) + 1};
  }

  /// Full mn×mn 0/1 adjacency matrix in row-major vertex order.
  BinaryMatrix adjacency() const {
    const auto size = static_cast<std::size_t>(vertex_count());
    BinaryMatrix a(size, size);
    for (const auto& e : edges_) {
      a(index(e.u), index(e.v)) = 1;
      a(index(e.v), index(e.u)) = 1;
    }
    return a;
  }

  /// Neighbor lists by vertex index.
  std::vector<std::vector<int>> neighbor_lists() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(vertex_count()));
    for (const auto& e : edges_) {
      out[index(e.u)].push_back(static_cast<int>(index(e.v)));
      out[index(e.v)].push_back(static_cast<int>(index(e.u)));
    }
    for (auto& row : out) std::sort(row.begin(), row.end());
    return out;
  }

  friend bool operator==(const ClusteredGraph&, const ClusteredGraph&) = default;

 private:
  void check_label(const VertexLabel& v) const {
    if (!contains(v)) {
      detail::fail("vertex label (" + std::to_string(v.cluster) + "," + std::to_string(v.position) +
                   ") out of range for n=" + std::to_string(n_) + ", m=" + std::to_string(m_));
    }
  }

  static std::vector<LabelPair> to_pairs(const std::vector<Edge>& edges) {
    std::vector<LabelPair> out;
    out.reserve(edges.size());
    for (const auto& e : edges) out.emplace_back(e.u, e.v);
    return out;
  }

  int n_{1};
  int m_{1};
  std::vector<Edge> edges_;
};

inline ClusteredGraph from_edges(int n, int m, std::span<const LabelPair> edges) {
  return ClusteredGraph(n, m, edges);
}

inline ClusteredGraph from_edges(int n, int m, std::initializer_list<LabelPair> edges) {
  return ClusteredGraph(n, m, edges);
}

/// n×n grid of m×m 0/1 blocks; block(i, j) uses 1-based cluster indices
/// like VertexLabel, block entries are 0-based.
class BlockAdjacency {
 public:
  BlockAdjacency(int n, int m) : n_(n), m_(m), blocks_(static_cast<std::size_t>(n * n), BinaryMatrix(m, m)) {
    detail::require(n >= 1 && m >= 1, "cluster count and cluster size must be at least 1");
  }

  int clusters() const noexcept { return n_; }
  int cluster_size() const noexcept { return m_; }

  BinaryMatrix& block(int i, int j) { return blocks_.at(slot(i, j)); }
  const BinaryMatrix& block(int i, int j) const { return blocks_.at(slot(i, j)); }

  /// Global symmetry and loop-free symmetric diagonal blocks.
  bool is_valid() const {
    for (int i = 1; i <= n_; ++i) {
      const auto& d = block(i, i);
      if (!d.is_symmetric()) return false;
      for (int k = 0; k < m_; ++k)
        if (d(k, k) != 0) return false;
      for (int j = i + 1; j <= n_; ++j)
        if (block(j, i) != block(i, j).transposed()) return false;
    }
    return true;
  }

  friend bool operator==(const BlockAdjacency&, const BlockAdjacency&) = default;

 private:
  std::size_t slot(int i, int j) const {
    detail::require(i >= 1 && i <= n_ && j >= 1 && j <= n_, "block index out of range");
    return static_cast<std::size_t>((i - 1) * n_ + (j - 1));
  }

  int n_;
  int m_;
  std::vector<BinaryMatrix> blocks_;
};

inline BlockAdjacency block_matrix(const ClusteredGraph& g) {
  BlockAdjacency a(g.clusters(), g.cluster_size());
  for (const auto& e : g.edges()) {
    const auto k = static_cast<std::size_t>(e.u.position - 1);
    const auto l = static_cast<std::size_t>(e.v.position - 1);
    a.block(e.u.cluster, e.v.cluster)(k, l) = 1;
    a.block(e.v.cluster, e.u.cluster)(l, k) = 1;
  }
  return a;
}

/// Inverse of block_matrix. Reads the upper triangle (i <= j) only.
inline ClusteredGraph from_blocks(const BlockAdjacency& a) {
  detail::require(a.is_valid(), "block adjacency is not symmetric with loop-free diagonal blocks");
  std::vector<LabelPair> edges;
  const int n = a.clusters();
  const int m = a.cluster_size();
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      const auto& b = a.block(i, j);
      for (int k = 1; k <= m; ++k)
        for (int l = (i == j ? k + 1 : 1); l <= m; ++l)
          if (b(k - 1, l - 1)) edges.push_back({{i, k}, {j, l}});
    }
  return ClusteredGraph(n, m, edges);
}

/// Subgraph <C_i, C_j>: the inter-cluster edges between C_i and C_j as a
/// 2-cluster graph (C_i first), or the cluster C_i itself when i == j.
inline ClusteredGraph induced_bipartite(const ClusteredGraph& g, int i, int j) {
  detail::require(i >= 1 && i <= g.clusters() && j >= 1 && j <= g.clusters(), "cluster index out of range");
  std::vector<LabelPair> edges;
  if (i == j) {
    for (const auto& e : g.edges())
      if (e.u.cluster == i && e.v.cluster == i) edges.push_back({{1, e.u.position}, {1, e.v.position}});
    return ClusteredGraph(1, g.cluster_size(), edges);
  }
  for (const auto& e : g.edges()) {
    if (e.u.cluster == i && e.v.cluster == j)
      edges.push_back({{1, e.u.position}, {2, e.v.position}});
    else if (e.u.cluster == j && e.v.cluster == i)
      edges.push_back({{1, e.v.position}, {2, e.u.position}});
  }
  return ClusteredGraph(2, g.cluster_size(), edges);
}

inline std::vector<int> degrees(const ClusteredGraph& g) {
  std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const auto& e : g.edges()) {
    ++deg[g.index(e.u)];
    ++deg[g.index(e.v)];
  }
  return deg;
}

/// Non-increasing degree list.
inline std::vector<int> degree_sequence(const ClusteredGraph& g) {
  auto deg = degrees(g);
  std::sort(deg.begin(), deg.end(), std::greater<>());
  return deg;
}

}  // namespace gtpt
