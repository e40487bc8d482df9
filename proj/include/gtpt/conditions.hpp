#pragma once

// Sufficient conditions for G and G^tau to be cospectral.
//
// Neighbourhood level: commuting and normality conditions on neighbourhood
// index sets. Matrix level: the blocks of A(G) form a commuting family of
// normal matrices. Constructive level: an exact nonsingular X with
// X A^t = A X for every block, which conjugates A(G) to A(G^tau) by
// diag(X, ..., X).

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gtpt/graph.hpp"
#include "gtpt/matrix.hpp"
#include "gtpt/spectral.hpp"
#include "gtpt/transpose.hpp"

namespace gtpt {

struct NeighborhoodIndexSet {
  VertexLabel source;
  int target_cluster{1};
  std::vector<int> indices;  // sorted positions in 1..m
};

/// nbd_{C_j}(v): positions beta with v adjacent to v_{j,beta}.
inline NeighborhoodIndexSet nbd_index_set(const ClusteredGraph& g, VertexLabel v, int j) {
  detail::require(g.contains(v), "vertex label out of range");
  detail::require(j >= 1 && j <= g.clusters(), "cluster index out of range");
  NeighborhoodIndexSet out{v, j, {}};
  for (int beta = 1; beta <= g.cluster_size(); ++beta)
    if (g.has_edge(v, {j, beta})) out.indices.push_back(beta);
  return out;
}

/// First tuple at which a condition fails. For the commuting condition all
/// six indices are used; for normality (i1, j1) = (i, j) and i2 = j2 = 0.
struct ConditionViolation {
  int i1{0}, j1{0}, i2{0}, j2{0};
  int alpha{0}, beta{0};
  int lhs{0}, rhs{0};
};

struct ConditionResult {
  bool holds{true};
  std::optional<ConditionViolation> violation;
};

namespace detail {

inline int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return static_cast<int>(out.size());
}

// nbd[i][j][alpha] = nbd_{C_j}(v_{i,alpha}), all 1-based.
inline std::vector<std::vector<std::vector<std::vector<int>>>> all_neighborhoods(const ClusteredGraph& g) {
  const int n = g.clusters();
  const int m = g.cluster_size();
  std::vector<std::vector<std::vector<std::vector<int>>>> nbd(
      static_cast<std::size_t>(n + 1),
      std::vector<std::vector<std::vector<int>>>(static_cast<std::size_t>(n + 1),
                                                 std::vector<std::vector<int>>(static_cast<std::size_t>(m + 1))));
  for (int i = 1; i <= n; ++i)
    for (int alpha = 1; alpha <= m; ++alpha)
      for (int j = 1; j <= n; ++j) nbd[i][j][alpha] = nbd_index_set(g, {i, alpha}, j).indices;
  return nbd;
}

}  // namespace detail

/// |nbd_{C_j1}(v_{i1,a}) ∩ nbd_{C_i2}(v_{j2,b})| = |nbd_{C_i1}(v_{j1,b}) ∩ nbd_{C_j2}(v_{i2,a})|
/// for all cluster pairs and positions.
inline ConditionResult commuting_condition(const ClusteredGraph& g) {
  const int n = g.clusters();
  const int m = g.cluster_size();
  const auto nbd = detail::all_neighborhoods(g);
  for (int i1 = 1; i1 <= n; ++i1)
    for (int j1 = 1; j1 <= n; ++j1)
      for (int i2 = 1; i2 <= n; ++i2)
        for (int j2 = 1; j2 <= n; ++j2)
          for (int a = 1; a <= m; ++a)
            for (int b = 1; b <= m; ++b) {
              const int lhs = detail::intersection_size(nbd[i1][j1][a], nbd[j2][i2][b]);
              const int rhs = detail::intersection_size(nbd[j1][i1][b], nbd[i2][j2][a]);
              if (lhs != rhs) return {false, ConditionViolation{i1, j1, i2, j2, a, b, lhs, rhs}};
            }
  return {};
}

/// For i != j: common neighbours in C_j of v_{i,a}, v_{i,b} equal common
/// neighbours in C_i of v_{j,a}, v_{j,b}.
inline ConditionResult normality_condition(const ClusteredGraph& g) {
  const int n = g.clusters();
  const int m = g.cluster_size();
  const auto nbd = detail::all_neighborhoods(g);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= m; ++b) {
          const int lhs = detail::intersection_size(nbd[i][j][a], nbd[i][j][b]);
          const int rhs = detail::intersection_size(nbd[j][i][a], nbd[j][i][b]);
          if (lhs != rhs) return {false, ConditionViolation{i, j, 0, 0, a, b, lhs, rhs}};
        }
    }
  return {};
}

/// Row sums equal column sums; necessary for a 0/1 matrix to be normal.
inline bool row_column_sums_match(const BinaryMatrix& a) {
  detail::require(a.is_square(), "matrix must be square");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    int r = 0, c = 0;
    for (std::size_t k = 0; k < a.cols(); ++k) {
      r += a(i, k);
      c += a(k, i);
    }
    if (r != c) return false;
  }
  return true;
}

/// Exact A A^t == A^t A, after the row/column-sum pre-filter.
inline bool is_normal_binary(const BinaryMatrix& a) {
  if (!row_column_sums_match(a)) return false;
  const auto at = a.transposed();
  return multiply(a, at) == multiply(at, a);
}

/// Every block normal and every pair of blocks commuting.
inline bool blocks_commuting_normal(const BlockAdjacency& a) {
  std::vector<IntMatrix> blocks;
  for (int i = 1; i <= a.clusters(); ++i)
    for (int j = 1; j <= a.clusters(); ++j) blocks.push_back(a.block(i, j).cast<std::int64_t>());
  for (const auto& b : blocks) {
    const auto bt = b.transposed();
    if (b * bt != bt * b) return false;
  }
  for (std::size_t x = 0; x < blocks.size(); ++x)
    for (std::size_t y = x + 1; y < blocks.size(); ++y)
      if (blocks[x] * blocks[y] != blocks[y] * blocks[x]) return false;
  return true;
}

struct SimilarityWitness {
  RationalMatrix matrix;
  std::vector<BinaryMatrix> blocks;  // the family it was verified against
};

struct WitnessOptions {
  std::size_t budget{10000};
  std::uint64_t seed{0};
};

/// Full record of one witness search.
struct WitnessSearch {
  std::optional<SimilarityWitness> witness;
  std::size_t null_space_dimension{0};
  std::size_t trials{0};
  std::string diagnostic;
};

/// X nonsingular and X A^t == A X for every A.
inline bool verify_witness(const RationalMatrix& x, const std::vector<BinaryMatrix>& blocks) {
  if (!x.is_square()) return false;
  for (const auto& a : blocks) {
    if (a.rows() != x.rows() || !a.is_square()) return false;
    const auto ar = a.cast<Rational>();
    if (x * ar.transposed() != ar * x) return false;
  }
  return determinant(x) != 0;
}

/// Coefficient matrix of X A^t = A X in x = vec(X) (column-major):
/// vec(A X) = (I ⊗ A) x and vec(X A^t) = (A ⊗ I) x, so the system is
/// (I ⊗ A - A ⊗ I) x = 0.
inline BigIntMatrix similarity_system(const BinaryMatrix& a) {
  detail::require(a.is_square(), "block must be square");
  const auto ai = a.cast<BigInt>();
  const auto id = BigIntMatrix::identity(a.rows());
  return kron(id, ai) - kron(ai, id);
}

namespace detail {

inline BigIntMatrix combine(const std::vector<BigIntMatrix>& basis, const std::vector<BigInt>& coeffs) {
  BigIntMatrix x(basis.front().rows(), basis.front().cols());
  for (std::size_t b = 0; b < basis.size(); ++b) {
    if (coeffs[b] == 0) continue;
    for (std::size_t r = 0; r < x.rows(); ++r)
      for (std::size_t c = 0; c < x.cols(); ++c) x(r, c) += coeffs[b] * basis[b](r, c);
  }
  return x;
}

}  // namespace detail

/// Exact common similarity witness for a family of square 0/1 blocks.
///
/// Solves the stacked system over all blocks by fraction-free elimination,
/// then looks for a nonsingular element of its null space: each basis
/// element, then combinations with coefficients in {-2..2} (ordered
/// 0, 1, -1, 2, -2 per digit, after the all-ones sum; at most half the
/// budget), then seeded random integer combinations in [-100, 100].
/// Exhausting `budget` is reported, never read as non-existence.
inline WitnessSearch find_similarity_witness(const std::vector<BinaryMatrix>& blocks, const WitnessOptions& options = {}) {
  WitnessSearch out;
  detail::require(!blocks.empty(), "similarity witness needs at least one block");
  const std::size_t m = blocks.front().rows();
  for (const auto& b : blocks) detail::require(b.is_square() && b.rows() == m, "all blocks must be square of the same order");

  std::vector<BinaryMatrix> family;
  for (const auto& b : blocks)
    if (std::find(family.begin(), family.end(), b) == family.end()) family.push_back(b);

  BigIntMatrix stacked(family.size() * m * m, m * m);
  for (std::size_t f = 0; f < family.size(); ++f) {
    const auto s = similarity_system(family[f]);
    for (std::size_t r = 0; r < s.rows(); ++r)
      for (std::size_t c = 0; c < s.cols(); ++c) stacked(f * m * m + r, c) = s(r, c);
  }
  const auto null_vectors = integer_null_space(std::move(stacked));
  out.null_space_dimension = null_vectors.size();
  if (null_vectors.empty()) {
    out.diagnostic = "null space is trivial";
    return out;
  }

  std::vector<BigIntMatrix> basis;
  for (const auto& v : null_vectors) basis.push_back(unvec(v, m));

  auto accept = [&](const BigIntMatrix& x) {
    ++out.trials;
    if (determinant(x) == 0) return false;
    out.witness = SimilarityWitness{x.cast<Rational>(), family};
    return true;
  };

  for (const auto& b : basis) {
    if (out.trials >= options.budget) break;
    if (accept(b)) return out;
  }

  const std::size_t d = basis.size();
  std::vector<BigInt> coeffs(d, BigInt(1));
  if (d > 1 && out.trials < options.budget && accept(detail::combine(basis, coeffs))) return out;

  // Mixed-radix walk over {0, 1, -1, 2, -2}^d, skipping the zero vector.
  static constexpr int digits[] = {0, 1, -1, 2, -2};
  std::vector<int> idx(d, 0);
  const std::size_t deterministic_budget = std::max<std::size_t>(out.trials, options.budget / 2);
  while (out.trials < deterministic_budget) {
    std::size_t k = 0;
    while (k < d && ++idx[k] == 5) idx[k++] = 0;
    if (k == d) break;
    std::size_t nonzero = 0;
    for (std::size_t b = 0; b < d; ++b) {
      coeffs[b] = digits[idx[b]];
      nonzero += idx[b] != 0;
    }
    if (nonzero < 2) continue;  // single basis multiples already tried
    if (accept(detail::combine(basis, coeffs))) return out;
  }

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> dist(-100, 100);
  while (out.trials < options.budget) {
    for (auto& c : coeffs) c = dist(rng);
    if (accept(detail::combine(basis, coeffs))) return out;
  }

  std::ostringstream msg;
  msg << "no nonsingular element found in a null space of dimension " << d << " after " << out.trials << " trials";
  out.diagnostic = msg.str();
  return out;
}

inline std::optional<SimilarityWitness> similarity_witness(const std::vector<BinaryMatrix>& blocks,
                                                           const WitnessOptions& options = {}) {
  return find_similarity_witness(blocks, options).witness;
}

/// Over the rationals every square matrix is similar to its transpose, so a
/// witness is expected for any single matrix.
inline std::optional<SimilarityWitness> is_similar_to_transpose(const BinaryMatrix& a, const WitnessOptions& options = {}) {
  return similarity_witness({a}, options);
}

/// diag(X, ..., X) with `copies` blocks.
inline RationalMatrix block_diagonal(const RationalMatrix& x, int copies) {
  const std::size_t m = x.rows();
  RationalMatrix out(m * static_cast<std::size_t>(copies), m * static_cast<std::size_t>(copies));
  for (int c = 0; c < copies; ++c)
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t s = 0; s < m; ++s) out(c * m + r, c * m + s) = x(r, s);
  return out;
}

struct CospectralCertificate {
  SimilarityWitness witness;
  /// One representative (i, j) per distinct block of A(G).
  std::vector<std::pair<int, int>> block_indices;

  /// P = diag(X, ..., X); A(G) P = P A(G^tau).
  RationalMatrix conjugator(int clusters) const { return block_diagonal(witness.matrix, clusters); }
};

/// Distinct blocks of A(G), diagonal blocks included, with the first (i, j)
/// at which each occurs.
inline std::vector<std::pair<BinaryMatrix, std::pair<int, int>>> distinct_blocks(const BlockAdjacency& a) {
  std::vector<std::pair<BinaryMatrix, std::pair<int, int>>> out;
  for (int i = 1; i <= a.clusters(); ++i)
    for (int j = 1; j <= a.clusters(); ++j) {
      const auto& b = a.block(i, j);
      if (std::none_of(out.begin(), out.end(), [&](const auto& e) { return e.first == b; })) out.push_back({b, {i, j}});
    }
  return out;
}

/// Certificate that G and G^tau are cospectral via one witness shared by all
/// blocks. Cospectrality of the certified pair is re-checked exactly; a
/// certificate for a non-cospectral pair would be a defect and throws.
inline std::optional<CospectralCertificate> certify_cospectral_by_blocks(const ClusteredGraph& g,
                                                                        const WitnessOptions& options = {}) {
  const auto blocks = distinct_blocks(block_matrix(g));
  std::vector<BinaryMatrix> family;
  CospectralCertificate cert;
  for (const auto& [b, ij] : blocks) {
    family.push_back(b);
    cert.block_indices.push_back(ij);
  }
  auto w = similarity_witness(family, options);
  if (!w) return std::nullopt;
  if (!are_cospectral(g, partial_transpose(g)))
    throw std::logic_error("block certificate found for a pair that is not cospectral");
  cert.witness = std::move(*w);
  return cert;
}

}  // namespace gtpt
