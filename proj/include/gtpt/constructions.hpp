#pragma once

// Builders that produce new clustered graphs whose partial transpose is a
// cospectral mate: padding of unbalanced bipartite graphs, Procedures 1 and
// 2, alternate clustering and the non-normal block template.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gtpt/conditions.hpp"
#include "gtpt/graph.hpp"
#include "gtpt/iso.hpp"
#include "gtpt/matrix.hpp"
#include "gtpt/spectral.hpp"
#include "gtpt/transpose.hpp"

namespace gtpt {

// ---------------------------------------------------------------------------
// Bipartite padding

/// Two-sided graph with sides of possibly different sizes. Labels use
/// cluster 1 for the left side and 2 for the right side.
struct UnbalancedBipartite {
  int left_size{1};
  int right_size{1};
  std::vector<LabelPair> edges;
};

struct PaddedBipartite {
  ClusteredGraph graph;
  std::vector<VertexLabel> padding;  // the added isolated vertices
};

/// Appends isolated vertices to the smaller side so both clusters have
/// max(left, right) vertices.
inline PaddedBipartite pad_bipartite(const UnbalancedBipartite& g) {
  detail::require(g.left_size >= 1 && g.right_size >= 1, "side sizes must be at least 1");
  const int size[3] = {0, g.left_size, g.right_size};
  for (const auto& [a, b] : g.edges) {
    for (const auto& v : {a, b}) {
      detail::require((v.cluster == 1 || v.cluster == 2) && v.position >= 1 && v.position <= size[v.cluster],
                      "vertex label out of range for the bipartite sides");
    }
    detail::require(a.cluster != b.cluster, "input has intra-cluster edges; padding needs a bipartite graph");
  }
  const int m = std::max(g.left_size, g.right_size);
  PaddedBipartite out{ClusteredGraph(2, m, g.edges), {}};
  for (int side = 1; side <= 2; ++side)
    for (int p = size[side] + 1; p <= m; ++p) out.padding.push_back({side, p});
  return out;
}

// ---------------------------------------------------------------------------
// Procedure 1

struct BlockAssignment {
  enum class Kind { zero, identity, copy_of };
  Kind kind{Kind::zero};
  int i{0};  // source block (i, j) of G for copy_of
  int j{0};

  static BlockAssignment zero() { return {Kind::zero, 0, 0}; }
  static BlockAssignment identity() { return {Kind::identity, 0, 0}; }
  static BlockAssignment copy_of(int i, int j) { return {Kind::copy_of, i, j}; }
};

/// Keys (p, q) with p != q are 1-based cluster indices of the new graph.
/// Block (q, p) is the transpose of block (p, q); unassigned pairs are zero.
using BlockAssignments = std::map<std::pair<int, int>, BlockAssignment>;

struct ProcedureOptions {
  bool waive_conditions{false};
  /// Procedure 2 only: also mirror intra-cluster edges. Off by default (the
  /// construction mirrors inter-cluster edges only); the enumeration models
  /// expose it as an alternative reading.
  bool mirror_intra_cluster{false};
};

namespace detail {

inline void require_commuting_normal(const ClusteredGraph& g, const ProcedureOptions& options) {
  if (options.waive_conditions) return;
  require(commuting_condition(g).holds && normality_condition(g).holds,
          "input graph violates the commuting/normality conditions (pass waive_conditions to build anyway)");
}

inline void add_block_edges(std::vector<LabelPair>& edges, int p, int q, const BinaryMatrix& b) {
  for (std::size_t k = 0; k < b.rows(); ++k)
    for (std::size_t l = 0; l < b.cols(); ++l)
      if (b(k, l)) edges.push_back({{p, static_cast<int>(k) + 1}, {q, static_cast<int>(l) + 1}});
}

}  // namespace detail

/// H on k·m vertices: cluster D_p copies C_{cluster_choices[p]} with its
/// intra-cluster edges, and each inter-cluster block is 0, I or some
/// off-diagonal block A_{i,j} of G.
inline ClusteredGraph procedure_1(const ClusteredGraph& g, const std::vector<int>& cluster_choices,
                                  const BlockAssignments& assignments, const ProcedureOptions& options = {}) {
  const int k = static_cast<int>(cluster_choices.size());
  const int m = g.cluster_size();
  detail::require(k >= 2, "procedure 1 needs at least two clusters");
  for (int c : cluster_choices) detail::require(c >= 1 && c <= g.clusters(), "cluster choice out of range");
  detail::require_commuting_normal(g, options);

  const auto blocks = block_matrix(g);
  std::vector<LabelPair> edges;
  for (int p = 1; p <= k; ++p)
    detail::add_block_edges(edges, p, p, blocks.block(cluster_choices[static_cast<std::size_t>(p - 1)], cluster_choices[static_cast<std::size_t>(p - 1)]));

  for (const auto& [pq, assignment] : assignments) {
    const auto [p, q] = pq;
    detail::require(p >= 1 && p <= k && q >= 1 && q <= k, "block assignment index out of range");
    detail::require(p != q, "block assignments apply to inter-cluster blocks only");
    detail::require(!assignments.contains({q, p}), "block assigned for both (p,q) and (q,p)");
    BinaryMatrix b(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    switch (assignment.kind) {
      case BlockAssignment::Kind::zero:
        break;
      case BlockAssignment::Kind::identity:
        b = BinaryMatrix::identity(static_cast<std::size_t>(m));
        break;
      case BlockAssignment::Kind::copy_of:
        detail::require(assignment.i != assignment.j, "cannot copy a diagonal block");
        detail::require(assignment.i >= 1 && assignment.i <= g.clusters() && assignment.j >= 1 &&
                            assignment.j <= g.clusters(),
                        "copied block index out of range");
        b = blocks.block(assignment.i, assignment.j);
        break;
    }
    detail::add_block_edges(edges, p, q, b);
  }
  return ClusteredGraph(k, m, edges);
}

// ---------------------------------------------------------------------------
// Procedure 2

/// Mirror extension of an m×m matrix to order 2m-1: the top-left m×m block
/// is M, and entry (2m-k, 2m-l) is M(k, l) (1-based). The two copies share
/// only the centre entry (m, m).
template <class T>
Matrix<T> mirror_extend(const Matrix<T>& x) {
  detail::require(x.is_square() && x.rows() >= 1, "mirror extension needs a non-empty square matrix");
  const std::size_t m = x.rows();
  Matrix<T> out(2 * m - 1, 2 * m - 1);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) {
      out(r, c) = x(r, c);
      out(2 * m - 2 - r, 2 * m - 2 - c) = x(r, c);
    }
  return out;
}

/// H on (2m-1)n vertices: cluster D_i = C_i plus new positions m+1..2m-1,
/// sharing v_{i,m}. Every edge of G is kept; for each inter-cluster edge
/// (v_{i,l1}, v_{j,l2}) the mirrored edge (v_{i,2m-l1}, v_{j,2m-l2}) is
/// added. New positions get no intra-cluster edges.
inline ClusteredGraph procedure_2(const ClusteredGraph& g, const ProcedureOptions& options = {}) {
  detail::require_commuting_normal(g, options);
  const int m = g.cluster_size();
  std::vector<LabelPair> edges;
  edges.reserve(2 * g.edge_count());
  for (const auto& e : g.edges()) {
    edges.push_back({e.u, e.v});
    if (!e.is_intra_cluster() || options.mirror_intra_cluster)
      edges.push_back({{e.u.cluster, 2 * m - e.u.position}, {e.v.cluster, 2 * m - e.v.position}});
  }
  return ClusteredGraph(g.clusters(), 2 * m - 1, edges);
}

/// Witness for the blocks of procedure_2(G) from a witness P_a of G:
/// P_b = mirror_extend(P_a).
inline RationalMatrix extend_witness(const RationalMatrix& pa) { return mirror_extend(pa); }

// ---------------------------------------------------------------------------
// Alternate clustering

/// G_a: clusters C'_j = {v_{1,j}, ..., v_{n,j}}; label (i, j) becomes (j, i).
inline ClusteredGraph alternate_clustering(const ClusteredGraph& g) {
  std::vector<LabelPair> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges())
    edges.push_back({{e.u.position, e.u.cluster}, {e.v.position, e.v.cluster}});
  return ClusteredGraph(g.cluster_size(), g.clusters(), edges);
}

// ---------------------------------------------------------------------------
// Non-normal template

enum class TemplateBlock { matrix, identity, zero };

/// Keys (i, j), i != j, 1-based; unassigned pairs are zero.
using TemplateAssignments = std::map<std::pair<int, int>, TemplateBlock>;

struct NonNormalModel {
  ClusteredGraph graph;
  ClusteredGraph transpose;
  SimilarityWitness witness;  // X A^t = A X for the template matrix alone
  std::optional<CospectralCertificate> certificate;
  bool cospectral{false};
  bool isomorphic{false};
  std::vector<int> degrees;
  std::vector<int> degrees_transpose;
};

/// Edgeless clusters; block (i, j) is A, I or 0 as assigned.
inline NonNormalModel build_nonnormal_model(const BinaryMatrix& a, int n, const TemplateAssignments& assignments,
                                            const WitnessOptions& options = {}) {
  detail::require(a.is_square() && a.rows() >= 1, "template matrix must be square");
  detail::require(n >= 2, "template needs at least two clusters");
  detail::require(!is_normal_binary(a), "template matrix is normal");
  const bool uses_a = std::any_of(assignments.begin(), assignments.end(),
                                  [](const auto& kv) { return kv.second == TemplateBlock::matrix; });
  detail::require(uses_a, "no block is assigned the template matrix");

  auto witness = is_similar_to_transpose(a, options);
  if (!witness) throw std::logic_error("no similarity witness found for a single matrix");

  const std::size_t m = a.rows();
  std::vector<LabelPair> edges;
  for (const auto& [ij, kind] : assignments) {
    const auto [i, j] = ij;
    detail::require(i >= 1 && i <= n && j >= 1 && j <= n && i != j, "template block index out of range");
    detail::require(!assignments.contains({j, i}), "block assigned for both (i,j) and (j,i)");
    if (kind == TemplateBlock::matrix) detail::add_block_edges(edges, i, j, a);
    if (kind == TemplateBlock::identity) detail::add_block_edges(edges, i, j, BinaryMatrix::identity(m));
  }

  NonNormalModel out;
  out.graph = ClusteredGraph(n, static_cast<int>(m), edges);
  out.transpose = partial_transpose(out.graph);
  out.witness = std::move(*witness);
  out.certificate = certify_cospectral_by_blocks(out.graph, options);
  out.cospectral = are_cospectral(out.graph, out.transpose);
  out.isomorphic = are_isomorphic(out.graph, out.transpose);
  out.degrees = degree_sequence(out.graph);
  out.degrees_transpose = degree_sequence(out.transpose);
  return out;
}

}  // namespace gtpt
