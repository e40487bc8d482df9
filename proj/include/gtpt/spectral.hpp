#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gtpt/graph.hpp"
#include "gtpt/matrix.hpp"

namespace gtpt {

/// Monic characteristic polynomial det(xI - A). `coefficients[k]` is the
/// coefficient of x^(degree - k), so `coefficients.front() == 1`.
struct CharPoly {
  std::vector<BigInt> coefficients;

  int degree() const noexcept { return static_cast<int>(coefficients.size()) - 1; }

  /// Coefficient of x^power.
  const BigInt& coefficient(int power) const { return coefficients.at(static_cast<std::size_t>(degree() - power)); }

  BigInt evaluate(const BigInt& x) const {
    BigInt acc(0);
    for (const auto& c : coefficients) acc = acc * x + c;
    return acc;
  }

  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const CharPoly& p) {
  os << '[';
  for (std::size_t i = 0; i < p.coefficients.size(); ++i) os << (i ? ", " : "") << p.coefficients[i];
  return os << ']';
}

namespace detail {

inline bool checked_add(std::int64_t a, std::int64_t b, std::int64_t& out) {
  return !__builtin_add_overflow(a, b, &out);
}
inline bool checked_add(const BigInt& a, const BigInt& b, BigInt& out) {
  out = a + b;
  return true;
}

// Faddeev-LeVerrier: M_1 = I, M_k = A M_{k-1} + c_{k-1} I, c_k = -tr(A M_k) / k.
// Products with the 0/1 matrix A reduce to sums over neighbor lists, so the
// only operations are additions and one exact division per step. Returns
// nullopt when an int64 addition would overflow.
template <class Int>
std::optional<std::vector<Int>> faddeev_leverrier(const std::vector<std::vector<int>>& nbrs) {
  const std::size_t n = nbrs.size();
  std::vector<Int> coeffs(n + 1, Int(0));
  coeffs[0] = Int(1);
  if (n == 0) return coeffs;

  std::vector<Int> m(n * n, Int(0));
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = Int(1);
  std::vector<Int> am(n * n, Int(0));

  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      m = am;
      for (std::size_t i = 0; i < n; ++i)
        if (!checked_add(m[i * n + i], coeffs[k - 1], m[i * n + i])) return std::nullopt;
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Int acc(0);
        for (int l : nbrs[i])
          if (!checked_add(acc, m[static_cast<std::size_t>(l) * n + j], acc)) return std::nullopt;
        am[i * n + j] = acc;
      }
    Int trace(0);
    for (std::size_t i = 0; i < n; ++i)
      if (!checked_add(trace, am[i * n + i], trace)) return std::nullopt;
    const Int kk(static_cast<std::int64_t>(k));
    if (trace % kk != 0) throw std::logic_error("Faddeev-LeVerrier: inexact trace division");
    coeffs[k] = -(trace / kk);
  }
  return coeffs;
}

}  // namespace detail

/// Exact characteristic polynomial of an adjacency structure given by
/// neighbor lists.
inline CharPoly char_poly(const std::vector<std::vector<int>>& nbrs) {
  CharPoly p;
  if (auto fast = detail::faddeev_leverrier<std::int64_t>(nbrs)) {
    p.coefficients.assign(fast->begin(), fast->end());
  } else {
    p.coefficients = *detail::faddeev_leverrier<BigInt>(nbrs);
  }
  return p;
}

inline CharPoly char_poly(const ClusteredGraph& g) { return char_poly(g.neighbor_lists()); }

/// Exact comparison of characteristic polynomials.
inline bool are_cospectral(const ClusteredGraph& g, const ClusteredGraph& h) {
  detail::require(g.vertex_count() == h.vertex_count(),
                  "cospectrality needs equal vertex counts (" + std::to_string(g.vertex_count()) + " vs " +
                      std::to_string(h.vertex_count()) + ")");
  return char_poly(g) == char_poly(h);
}

/// Floating eigenvalues for reports, sorted descending.
inline std::vector<double> approx_eigenvalues(const ClusteredGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : g.edges()) {
    const auto u = static_cast<Eigen::Index>(g.index(e.u));
    const auto v = static_cast<Eigen::Index>(g.index(e.v));
    a(u, v) = a(v, u) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace gtpt
