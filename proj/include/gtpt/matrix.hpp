#pragma once

// Dense matrices over integers and rationals, plus the exact kernels used by
// the witness solver: fraction-free (Bareiss) determinant and null space.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gtpt/error.hpp"

namespace gtpt {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

template <class T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  /// Row-major nested initializer, e.g. `{{1, 1}, {0, 0}}`.
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      detail::require(row.size() == cols_, "ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = T(1);
    return out;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transposed() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  template <class U>
  Matrix<U> cast() const {
    Matrix<U> out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = U((*this)(r, c));
    return out;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == T(0); });
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = r + 1; c < cols_; ++c)
        if ((*this)(r, c) != (*this)(c, r)) return false;
    return true;
  }

  const std::vector<T>& data() const noexcept { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend auto operator<=>(const Matrix& a, const Matrix& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    return a.data_ <=> b.data_;
  }

 private:
  std::size_t rows_{0};
  std::size_t cols_{0};
  std::vector<T> data_;
};

/// Entries are 0 or 1.
using BinaryMatrix = Matrix<std::uint8_t>;
using IntMatrix = Matrix<std::int64_t>;
using BigIntMatrix = Matrix<BigInt>;
using RationalMatrix = Matrix<Rational>;

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  detail::require(a.cols() == b.rows(), "matrix product: shape mismatch");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == T(0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

template <class T>
Matrix<T> operator+(Matrix<T> a, const Matrix<T>& b) {
  detail::require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix sum: shape mismatch");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) += b(i, j);
  return a;
}

template <class T>
Matrix<T> operator-(Matrix<T> a, const Matrix<T>& b) {
  detail::require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix difference: shape mismatch");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= b(i, j);
  return a;
}

/// Product of 0/1 matrices with int64 accumulation.
inline IntMatrix multiply(const BinaryMatrix& a, const BinaryMatrix& b) {
  return a.cast<std::int64_t>() * b.cast<std::int64_t>();
}

/// Kronecker product: block (i, j) of the result is a(i, j) * b.
template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == T(0)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

/// Column-major vectorization, vec(X) = [X_1; X_2; ...; X_m].
template <class T>
std::vector<T> vec(const Matrix<T>& x) {
  std::vector<T> out;
  out.reserve(x.rows() * x.cols());
  for (std::size_t c = 0; c < x.cols(); ++c)
    for (std::size_t r = 0; r < x.rows(); ++r) out.push_back(x(r, c));
  return out;
}

/// Inverse of vec for an m×m matrix.
template <class T>
Matrix<T> unvec(const std::vector<T>& x, std::size_t m) {
  detail::require(x.size() == m * m, "unvec: length is not m*m");
  Matrix<T> out(m, m);
  for (std::size_t c = 0; c < m; ++c)
    for (std::size_t r = 0; r < m; ++r) out(r, c) = x[c * m + r];
  return out;
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& a) {
  os << '[';
  for (std::size_t r = 0; r < a.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (c) os << ", ";
      if constexpr (sizeof(T) == 1)
        os << static_cast<int>(a(r, c));
      else
        os << a(r, c);
    }
    os << ']';
  }
  return os << ']';
}

/// Exact determinant by Bareiss fraction-free elimination.
inline BigInt determinant(BigIntMatrix a) {
  detail::require(a.is_square(), "determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return BigInt(1);
  BigInt prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return BigInt(0);
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Scale each row to clear denominators, then Bareiss.
inline Rational determinant(const RationalMatrix& a) {
  detail::require(a.is_square(), "determinant of non-square matrix");
  BigIntMatrix scaled(a.rows(), a.cols());
  Rational factor(1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    BigInt lcm(1);
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const BigInt d = boost::multiprecision::denominator(a(r, c));
      lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    }
    for (std::size_t c = 0; c < a.cols(); ++c)
      scaled(r, c) = boost::multiprecision::numerator(Rational(a(r, c) * lcm));
    factor *= lcm;
  }
  return Rational(determinant(std::move(scaled))) / factor;
}

/// Row echelon form computed fraction-free; entries stay integral and every
/// division is exact. Returns the pivot columns.
inline std::vector<std::size_t> fraction_free_echelon(BigIntMatrix& a) {
  std::vector<std::size_t> pivots;
  BigInt prev(1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(row, c), a(p, c));
    for (std::size_t i = row + 1; i < a.rows(); ++i) {
      for (std::size_t j = col + 1; j < a.cols(); ++j) {
        BigInt num = a(row, col) * a(i, j) - a(i, col) * a(row, j);
        BigInt q, rem;
        boost::multiprecision::divide_qr(num, prev, q, rem);
        if (rem != 0) throw std::logic_error("fraction-free elimination: inexact division");
        a(i, j) = std::move(q);
      }
      a(i, col) = 0;
    }
    prev = a(row, col);
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Basis of the right null space {x : a x = 0} as primitive integer vectors
/// (gcd of entries 1, first nonzero entry positive).
inline std::vector<std::vector<BigInt>> integer_null_space(BigIntMatrix a) {
  const std::size_t cols = a.cols();
  const auto pivots = fraction_free_echelon(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<std::vector<BigInt>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(cols, Rational(0));
    x[free] = 1;
    for (std::size_t k = pivots.size(); k-- > 0;) {
      const std::size_t pc = pivots[k];
      Rational acc(0);
      for (std::size_t j = pc + 1; j < cols; ++j)
        if (a(k, j) != 0 && x[j] != 0) acc += Rational(a(k, j)) * x[j];
      x[pc] = -acc / Rational(a(k, pc));
    }
    BigInt lcm(1);
    for (const auto& v : x) {
      const BigInt d = boost::multiprecision::denominator(v);
      lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    }
    std::vector<BigInt> ints(cols);
    BigInt g(0);
    for (std::size_t j = 0; j < cols; ++j) {
      ints[j] = boost::multiprecision::numerator(Rational(x[j] * lcm));
      g = boost::multiprecision::gcd(g, ints[j]);
    }
    const auto first = std::find_if(ints.begin(), ints.end(), [](const BigInt& v) { return v != 0; });
    if (first != ints.end() && *first < 0) g = -g;
    for (auto& v : ints) v /= g;
    basis.push_back(std::move(ints));
  }
  return basis;
}

}  // namespace gtpt
