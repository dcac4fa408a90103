#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "srpk/error.hpp"
#include "srpk/semiring.hpp"

namespace srpk {

template <Semiring S>
using Vector = std::vector<element_t<S>>;

/// Dense row-major matrix over a semiring. The matrix carries its semiring
/// instance so that parametrised and instrumented instances travel with the
/// data.
template <Semiring S>
class Matrix {
 public:
  using semiring_type = S;
  using value_type = element_t<S>;

  Matrix(S s, std::size_t rows, std::size_t cols)
      : s_(std::move(s)), rows_(rows), cols_(cols), data_(rows * cols, s_.zero()) {}

  Matrix(S s, std::size_t rows, std::size_t cols, std::vector<value_type> data)
      : s_(std::move(s)), rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
      raise(ErrorKind::shape_mismatch, "data length " + std::to_string(data_.size()) +
                                           " does not match " + std::to_string(rows_) + "x" +
                                           std::to_string(cols_));
    }
  }

  static Matrix from_rows(S s, std::initializer_list<std::initializer_list<value_type>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    std::vector<value_type> data;
    data.reserve(r * c);
    for (const auto& row : rows) {
      if (row.size() != c) raise(ErrorKind::shape_mismatch, "ragged row list");
      data.insert(data.end(), row.begin(), row.end());
    }
    return Matrix(std::move(s), r, c, std::move(data));
  }

  static Matrix column(S s, std::span<const value_type> v) {
    return Matrix(std::move(s), v.size(), 1, std::vector<value_type>(v.begin(), v.end()));
  }

  const S& semiring() const { return s_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::span<const value_type> data() const { return data_; }
  std::span<const value_type> row(std::size_t i) const {
    return std::span<const value_type>(data_).subspan(i * cols_, cols_);
  }
  Vector<S> col(std::size_t j) const {
    Vector<S> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  S s_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> data_;
};

namespace detail {

template <Semiring S>
void require_same_shape(const Matrix<S>& a, const Matrix<S>& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    raise(ErrorKind::shape_mismatch,
          std::string(what) + ": " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
              " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

template <Semiring S>
void require_square(const Matrix<S>& a, const char* what) {
  if (!a.is_square()) {
    raise(ErrorKind::shape_mismatch, std::string(what) + " needs a square matrix, got " +
                                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

}  // namespace detail

template <Semiring S>
Matrix<S> zero_matrix(const S& s, std::size_t rows, std::size_t cols) {
  return Matrix<S>(s, rows, cols);
}

template <Semiring S>
Matrix<S> identity(const S& s, std::size_t n) {
  Matrix<S> out(s, n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = s.one();
  return out;
}

/// The exchange matrix E_n (ones on the anti-diagonal).
template <Semiring S>
Matrix<S> exchange(const S& s, std::size_t n) {
  Matrix<S> out(s, n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, n - 1 - i) = s.one();
  return out;
}

template <Semiring S>
Matrix<S> mat_add(const Matrix<S>& a, const Matrix<S>& b) {
  detail::require_same_shape(a, b, "mat_add");
  const S& s = a.semiring();
  Matrix<S> out(s, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = s.add(a(i, j), b(i, j));
  return out;
}

// Each output entry is accumulated left to right over the inner index, so
// results over floating point are reproducible.
template <Semiring S>
Matrix<S> mat_mul(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() != b.rows()) {
    raise(ErrorKind::shape_mismatch, "mat_mul: inner dimensions " + std::to_string(a.cols()) +
                                         " and " + std::to_string(b.rows()));
  }
  const S& s = a.semiring();
  Matrix<S> out(s, a.rows(), b.cols());
  if (a.cols() == 0) return out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      element_t<S> acc = s.mul(a(i, 0), b(0, j));
      for (std::size_t k = 1; k < a.cols(); ++k) acc = s.add(acc, s.mul(a(i, k), b(k, j)));
      out(i, j) = acc;
    }
  }
  return out;
}

template <Semiring S>
Vector<S> mat_vec(const Matrix<S>& a, std::span<const element_t<S>> x) {
  if (a.cols() != x.size()) {
    raise(ErrorKind::shape_mismatch, "mat_vec: " + std::to_string(a.cols()) + " columns vs vector of " +
                                         std::to_string(x.size()));
  }
  Vector<S> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) out[i] = dot(a.semiring(), a.row(i), x);
  return out;
}

/// Entrywise order.
template <Semiring S>
bool mat_leq(const Matrix<S>& a, const Matrix<S>& b) {
  detail::require_same_shape(a, b, "mat_leq");
  const S& s = a.semiring();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!s.leq(a(i, j), b(i, j))) return false;
  return true;
}

/// Entrywise s.near; exact for idempotent instances.
template <Semiring S>
bool mat_near(const Matrix<S>& a, const Matrix<S>& b, double tol = default_tolerance) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  const S& s = a.semiring();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!s.near(a(i, j), b(i, j), tol)) return false;
  return true;
}

template <Semiring S>
Matrix<S> mat_power(const Matrix<S>& a, std::size_t k) {
  detail::require_square(a, "mat_power");
  Matrix<S> out = identity(a.semiring(), a.rows());
  for (std::size_t i = 0; i < k; ++i) out = mat_mul(out, a);
  return out;
}

template <Semiring S>
Matrix<S> transpose(const Matrix<S>& a) {
  Matrix<S> out(a.semiring(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

/// Copy of the rows [r0, r0+nr) and columns [c0, c0+nc).
template <Semiring S>
Matrix<S> submatrix(const Matrix<S>& a, std::size_t r0, std::size_t c0, std::size_t nr,
                    std::size_t nc) {
  Matrix<S> out(a.semiring(), nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out(i, j) = a(r0 + i, c0 + j);
  return out;
}

template <Semiring S>
void place(Matrix<S>& dst, const Matrix<S>& block, std::size_t r0, std::size_t c0) {
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j) dst(r0 + i, c0 + j) = block(i, j);
}

template <Semiring S>
bool is_symmetric(const Matrix<S>& a) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!(a(i, j) == a(j, i))) return false;
  return true;
}

/// a_ij == a_{n-1-j, n-1-i}, i.e. A = E A^T E.
template <Semiring S>
bool is_persymmetric(const Matrix<S>& a) {
  if (!a.is_square()) return false;
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(a(i, j) == a(n - 1 - j, n - 1 - i))) return false;
  return true;
}

template <Semiring S>
bool is_toeplitz(const Matrix<S>& a) {
  for (std::size_t i = 1; i < a.rows(); ++i)
    for (std::size_t j = 1; j < a.cols(); ++j)
      if (!(a(i, j) == a(i - 1, j - 1))) return false;
  return true;
}

template <Semiring S>
bool is_strictly_lower(const Matrix<S>& a) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j)
      if (!(a(i, j) == a.semiring().zero())) return false;
  return true;
}

template <Semiring S>
bool is_strictly_upper(const Matrix<S>& a) {
  return is_strictly_lower(transpose(a));
}

struct Bandwidths {
  std::size_t lower = 0;
  std::size_t upper = 0;

  bool operator==(const Bandwidths&) const = default;
};

/// Least (p, q) with a_ij = 0 whenever j > i + q or i > j + p.
template <Semiring S>
Bandwidths bandwidths(const Matrix<S>& a) {
  Bandwidths bw;
  const auto zero = a.semiring().zero();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == zero) continue;
      if (i > j) bw.lower = std::max(bw.lower, i - j);
      if (j > i) bw.upper = std::max(bw.upper, j - i);
    }
  }
  return bw;
}

}  // namespace srpk
