#pragma once

#include <vector>

#include "gtpt/graph.hpp"

namespace gtpt {

/// Graph-theoretical partial transpose: every inter-cluster edge
/// (v_{i,k}, v_{j,l}) with k != l becomes (v_{i,l}, v_{j,k}).
inline ClusteredGraph partial_transpose(const ClusteredGraph& g) {
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    if (e.is_intra_cluster() || e.u.position == e.v.position) {
      edges.push_back(e);
    } else {
      edges.emplace_back(VertexLabel{e.u.cluster, e.v.position}, VertexLabel{e.v.cluster, e.u.position});
    }
  }
  return ClusteredGraph(g.clusters(), g.cluster_size(), edges);
}

/// Transposes every block in place of the grid: A(G)^tau = [A_{i,j}^t].
inline BlockAdjacency partial_transpose_blocks(const BlockAdjacency& a) {
  BlockAdjacency out(a.clusters(), a.cluster_size());
  for (int i = 1; i <= a.clusters(); ++i)
    for (int j = 1; j <= a.clusters(); ++j) out.block(i, j) = a.block(i, j).transposed();
  return out;
}

/// True when G^tau has exactly the edge set of G.
inline bool is_partially_symmetric(const ClusteredGraph& g) { return partial_transpose(g) == g; }

}  // namespace gtpt
