#pragma once

// Named graphs used across the tests, and seeded random generators.

#include <cstdint>
#include <random>
#include <vector>

#include "gtpt/gtpt.hpp"

namespace fixtures {

using gtpt::BinaryMatrix;
using gtpt::BlockAdjacency;
using gtpt::ClusteredGraph;
using gtpt::LabelPair;

// Two 2×2 graphs: one partially symmetric up to relabeling, one whose
// transpose differs in structure.
inline ClusteredGraph g1() { return ClusteredGraph(2, 2, {{{1, 1}, {2, 1}}, {{1, 1}, {2, 2}}, {{1, 2}, {2, 2}}}); }
inline ClusteredGraph g2() { return ClusteredGraph(2, 2, {{{1, 1}, {1, 2}}, {{1, 2}, {2, 2}}, {{1, 2}, {2, 1}}}); }

// Smallest cospectral mate in the corpus: 2×3, path in the second cluster.
inline ClusteredGraph g3() {
  return ClusteredGraph(2, 3,
                        {{{1, 1}, {2, 1}}, {{1, 1}, {2, 2}}, {{1, 2}, {2, 2}}, {{1, 3}, {2, 2}}, {{1, 3}, {2, 3}},
                         {{2, 1}, {2, 2}}, {{2, 2}, {2, 3}}});
}

// Isomorphic G and H whose transposes are not even cospectral.
inline ClusteredGraph isomorphic_pair_g() {
  return ClusteredGraph(2, 3, {{{1, 1}, {2, 2}}, {{1, 3}, {2, 2}}, {{2, 1}, {2, 2}}, {{2, 2}, {2, 3}}});
}
inline ClusteredGraph isomorphic_pair_h() {
  return ClusteredGraph(2, 3, {{{1, 1}, {2, 2}}, {{1, 2}, {2, 2}}, {{2, 1}, {2, 2}}, {{2, 2}, {2, 3}}});
}

// Two isomorphic star-like clusters (under a non-identity map) joined by one
// edge; the transpose is not cospectral.
inline ClusteredGraph star_pair_g() {
  return ClusteredGraph(2, 4,
                        {{{2, 1}, {2, 2}}, {{2, 1}, {2, 3}}, {{2, 1}, {2, 4}}, {{1, 1}, {1, 2}}, {{1, 2}, {1, 3}},
                         {{1, 2}, {1, 4}}, {{1, 4}, {2, 2}}});
}

// Three clusters: A_{1,2} = [[1,1],[0,0]], A_{2,3} = I, A_{1,3} = 0.
inline ClusteredGraph three_cluster_g() {
  return ClusteredGraph(3, 2, {{{1, 1}, {2, 1}}, {{1, 1}, {2, 2}}, {{2, 1}, {3, 1}}, {{2, 2}, {3, 2}}});
}

// Procedure 2 applied to three_cluster_g.
inline ClusteredGraph three_cluster_h() {
  return ClusteredGraph(3, 3,
                        {{{1, 1}, {2, 1}}, {{1, 1}, {2, 2}}, {{1, 3}, {2, 2}}, {{1, 3}, {2, 3}}, {{2, 1}, {3, 1}},
                         {{2, 2}, {3, 2}}, {{2, 3}, {3, 3}}});
}

// ---------------------------------------------------------------------------
// Random generators. All take an explicit engine so every test is seeded.

using Rng = std::mt19937_64;

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }
inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline ClusteredGraph random_graph(Rng& rng, int n, int m, double p = 0.4) {
  std::vector<LabelPair> edges;
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= m; ++k)
      for (int j = i; j <= n; ++j)
        for (int l = 1; l <= m; ++l) {
          if (i == j && l <= k) continue;
          if (coin(rng, p)) edges.push_back({{i, k}, {j, l}});
        }
  return ClusteredGraph(n, m, edges);
}

inline ClusteredGraph random_bipartite(Rng& rng, int m, double p = 0.5) {
  std::vector<LabelPair> edges;
  for (int k = 1; k <= m; ++k)
    for (int l = 1; l <= m; ++l)
      if (coin(rng, p)) edges.push_back({{1, k}, {2, l}});
  return ClusteredGraph(2, m, edges);
}

/// Two clusters carrying the same graph under v_{1,j} -> v_{2,j}.
inline ClusteredGraph random_pseudo_bipartite(Rng& rng, int m, double p = 0.5) {
  std::vector<LabelPair> edges;
  for (int k = 1; k <= m; ++k)
    for (int l = k + 1; l <= m; ++l)
      if (coin(rng, p)) {
        edges.push_back({{1, k}, {1, l}});
        edges.push_back({{2, k}, {2, l}});
      }
  for (int k = 1; k <= m; ++k)
    for (int l = 1; l <= m; ++l)
      if (coin(rng, p)) edges.push_back({{1, k}, {2, l}});
  return ClusteredGraph(2, m, edges);
}

inline BinaryMatrix circulant(const std::vector<int>& first_row) {
  const std::size_t m = first_row.size();
  BinaryMatrix c(m, m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k < m; ++k) c(r, (r + k) % m) = static_cast<std::uint8_t>(first_row[k]);
  return c;
}

inline BinaryMatrix random_circulant(Rng& rng, int m) {
  std::vector<int> row(static_cast<std::size_t>(m));
  for (auto& x : row) x = coin(rng) ? 1 : 0;
  return circulant(row);
}

/// Symmetric circulant with zero diagonal, i.e. a circulant graph.
inline BinaryMatrix random_symmetric_circulant(Rng& rng, int m) {
  std::vector<int> row(static_cast<std::size_t>(m), 0);
  for (int k = 1; 2 * k <= m; ++k) {
    const int bit = coin(rng) ? 1 : 0;
    row[static_cast<std::size_t>(k)] = bit;
    row[static_cast<std::size_t>(m - k)] = bit;
  }
  return circulant(row);
}

/// Every block is circulant, so the blocks form a commuting normal family.
inline ClusteredGraph random_circulant_graph(Rng& rng, int n, int m) {
  BlockAdjacency a(n, m);
  for (int i = 1; i <= n; ++i) {
    a.block(i, i) = random_symmetric_circulant(rng, m);
    for (int j = i + 1; j <= n; ++j) {
      a.block(i, j) = random_circulant(rng, m);
      a.block(j, i) = a.block(i, j).transposed();
    }
  }
  return gtpt::from_blocks(a);
}

inline std::vector<int> random_permutation(Rng& rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Cluster swap v_{1,j} <-> v_{2,j} on a two-cluster graph.
inline ClusteredGraph swap_clusters(const ClusteredGraph& g) {
  std::vector<LabelPair> edges;
  for (const auto& e : g.edges()) edges.push_back({{3 - e.u.cluster, e.u.position}, {3 - e.v.cluster, e.v.position}});
  return ClusteredGraph(2, g.cluster_size(), edges);
}

}  // namespace fixtures
