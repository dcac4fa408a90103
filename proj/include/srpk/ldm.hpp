#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>

#include "srpk/error.hpp"
#include "srpk/matrix.hpp"
#include "srpk/triangular.hpp"

namespace srpk {

/// LDM factors packed in one array: strict lower triangle = L, diagonal = D,
/// strict upper triangle = M, with A* = M* D* L*.
template <Semiring S>
struct LdmFactors {
  Matrix<S> packed;
  std::optional<Bandwidths> band;
  // Closures of the first n-1 diagonal entries, as computed during the
  // factorization.
  Vector<S> pivot_stars;

  std::size_t size() const { return packed.rows(); }

  Matrix<S> L() const {
    Matrix<S> out(packed.semiring(), size(), size());
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < i; ++j) out(i, j) = packed(i, j);
    return out;
  }

  Matrix<S> D() const {
    Matrix<S> out(packed.semiring(), size(), size());
    for (std::size_t i = 0; i < size(); ++i) out(i, i) = packed(i, i);
    return out;
  }

  Matrix<S> M() const {
    Matrix<S> out(packed.semiring(), size(), size());
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j) out(i, j) = packed(i, j);
    return out;
  }

  /// Entrywise closure of D. Only the last entry needs a new scalar closure.
  Vector<S> D_star() const {
    Vector<S> out = pivot_stars;
    if (size() > out.size()) out.push_back(packed.semiring().star(packed(size() - 1, size() - 1)));
    return out;
  }
};

enum class LdmVersion { v1, v2 };

namespace detail {

template <Semiring S>
LdmFactors<S> ldm_outer_product(Matrix<S> a) {
  const S& s = a.semiring();
  const std::size_t n = a.rows();
  Vector<S> stars;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    auto v = s.star(a(j, j));
    stars.push_back(v);
    for (std::size_t i = j + 1; i < n; ++i) a(i, j) = s.mul(a(i, j), v);
    for (std::size_t i = j + 1; i < n; ++i)
      for (std::size_t k = j + 1; k < n; ++k) a(i, k) = s.add(a(i, k), s.mul(a(i, j), a(j, k)));
    for (std::size_t k = j + 1; k < n; ++k) a(j, k) = s.mul(v, a(j, k));
  }
  return {std::move(a), std::nullopt, std::move(stars)};
}

// Column-oriented form: column j of the result is produced from the original
// column j and the finished columns 0..j-1.
template <Semiring S>
LdmFactors<S> ldm_column(Matrix<S> a) {
  const S& s = a.semiring();
  const std::size_t n = a.rows();
  Vector<S> stars;
  Vector<S> v(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i <= j; ++i) v[i] = a(i, j);
    for (std::size_t k = 0; k < j; ++k)
      for (std::size_t i = k + 1; i <= j; ++i) v[i] = s.add(v[i], s.mul(a(i, k), v[k]));
    for (std::size_t i = 0; i < j; ++i) a(i, j) = s.mul(stars[i], v[i]);
    a(j, j) = v[j];
    if (j + 1 == n) break;
    for (std::size_t k = 0; k < j; ++k)
      for (std::size_t i = j + 1; i < n; ++i) a(i, j) = s.add(a(i, j), s.mul(a(i, k), v[k]));
    auto d = s.star(v[j]);
    stars.push_back(d);
    for (std::size_t i = j + 1; i < n; ++i) a(i, j) = s.mul(a(i, j), d);
  }
  return {std::move(a), std::nullopt, std::move(stars)};
}

template <Semiring S>
void mirror_lower(Matrix<S>& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j) a(j, i) = a(i, j);
}

template <Semiring S>
LdmFactors<S> ldm_symmetric_outer(Matrix<S> a) {
  const S& s = a.semiring();
  const std::size_t n = a.rows();
  Vector<S> stars;
  Vector<S> w(n);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    auto v = s.star(a(j, j));
    stars.push_back(v);
    for (std::size_t k = j + 1; k < n; ++k) w[k] = s.mul(a(k, j), v);
    for (std::size_t k = j + 1; k < n; ++k)
      for (std::size_t l = j + 1; l <= k; ++l) a(k, l) = s.add(a(k, l), s.mul(w[k], a(l, j)));
    for (std::size_t k = j + 1; k < n; ++k) a(k, j) = w[k];
  }
  mirror_lower(a);
  return {std::move(a), std::nullopt, std::move(stars)};
}

// Recovers the unscaled entries of row j from the finished lower triangle,
// so it needs (a_ii*)^-1.
template <Semiring S>
LdmFactors<S> ldm_symmetric_column(Matrix<S> a) {
  const S& s = a.semiring();
  const std::size_t n = a.rows();
  Vector<S> stars;
  Vector<S> inverses;
  Vector<S> v(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) v[i] = s.mul(inverses[i], a(j, i));
    v[j] = a(j, j);
    for (std::size_t k = 0; k < j; ++k) v[j] = s.add(v[j], s.mul(a(j, k), v[k]));
    a(j, j) = v[j];
    if (j + 1 == n) break;
    for (std::size_t k = 0; k < j; ++k)
      for (std::size_t i = j + 1; i < n; ++i) a(i, j) = s.add(a(i, j), s.mul(a(i, k), v[k]));
    auto d = s.star(v[j]);
    auto inv = s.try_inverse(d);
    if (!inv) raise(ErrorKind::no_inverse, "closure " + s.format(d) + " of pivot " + std::to_string(j + 1) + " has no inverse");
    stars.push_back(d);
    inverses.push_back(*inv);
    for (std::size_t i = j + 1; i < n; ++i) a(i, j) = s.mul(a(i, j), d);
  }
  mirror_lower(a);
  return {std::move(a), std::nullopt, std::move(stars)};
}

}  // namespace detail

/// LDM decomposition. n-1 scalar closures and n^3/3 + O(n^2) additions and
/// multiplications; both versions perform the same operations in a different
/// loop order and give the same result.
template <Semiring S>
LdmFactors<S> ldm_decompose(const Matrix<S>& a, LdmVersion version = LdmVersion::v1) {
  detail::require_square(a, "ldm_decompose");
  return version == LdmVersion::v1 ? detail::ldm_outer_product(a) : detail::ldm_column(a);
}

/// Symmetric LDM decomposition (M = L^T), about half the work of the full
/// one. The upper triangle of the packed result is filled with L^T. v2 needs
/// the pivot closures to be invertible. Assumes commutative multiplication.
template <Semiring S>
LdmFactors<S> ldm_symmetric(const Matrix<S>& a, LdmVersion version = LdmVersion::v1) {
  detail::require_square(a, "ldm_symmetric");
  if (!is_symmetric(a)) raise(ErrorKind::not_symmetric, "ldm_symmetric needs a symmetric matrix");
  return version == LdmVersion::v1 ? detail::ldm_symmetric_outer(a) : detail::ldm_symmetric_column(a);
}

/// G = D* L for symmetric A over an idempotent semiring; A* = (G*)^T G*.
template <Semiring S>
Matrix<S> cholesky_idempotent(const Matrix<S>& a) {
  if constexpr (!S::is_idempotent) {
    raise(ErrorKind::not_idempotent, a.semiring().name() + " is not idempotent");
  } else {
    auto f = ldm_symmetric(a);
    const S& s = a.semiring();
    const auto d_star = f.D_star();
    Matrix<S> g(s, a.rows(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < i; ++j) g(i, j) = s.mul(d_star[i], f.packed(i, j));
    return g;
  }
}

/// LDM decomposition of a band matrix with lower bandwidth p and upper
/// bandwidth q. About npq additions and multiplications for n >> p, q.
template <Semiring S>
LdmFactors<S> ldm_band(const Matrix<S>& input, std::size_t p, std::size_t q) {
  detail::require_square(input, "ldm_band");
  const auto actual = bandwidths(input);
  if (actual.lower > p || actual.upper > q) {
    raise(ErrorKind::band_violation, "matrix has bandwidths (" + std::to_string(actual.lower) + ", " +
                                         std::to_string(actual.upper) + "), declared (" +
                                         std::to_string(p) + ", " + std::to_string(q) + ")");
  }
  const S& s = input.semiring();
  const std::size_t n = input.rows();
  Matrix<S> a = input;
  Vector<S> stars;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const std::size_t last_row = std::min(j + p, n - 1);
    const std::size_t last_col = std::min(j + q, n - 1);
    auto v = s.star(a(j, j));
    stars.push_back(v);
    for (std::size_t i = j + 1; i <= last_row; ++i) a(i, j) = s.mul(a(i, j), v);
    for (std::size_t i = j + 1; i <= last_row; ++i)
      for (std::size_t k = j + 1; k <= last_col; ++k) a(i, k) = s.add(a(i, k), s.mul(a(i, j), a(j, k)));
    for (std::size_t k = j + 1; k <= last_col; ++k) a(j, k) = s.mul(v, a(j, k));
  }
  return {std::move(a), Bandwidths{p, q}, std::move(stars)};
}

/// Upper Hessenberg preset (p = 1, q = n-1).
template <Semiring S>
LdmFactors<S> ldm_hessenberg(const Matrix<S>& a) {
  return ldm_band(a, 1, a.rows() == 0 ? 0 : a.rows() - 1);
}

template <Semiring S>
LdmFactors<S> ldm_tridiagonal(const Matrix<S>& a) {
  return ldm_band(a, 1, 1);
}

/// x = M* (D* (L* b)) by forward substitution, entrywise scaling and
/// backward substitution.
template <Semiring S>
Vector<S> solve_with_factors(const LdmFactors<S>& f, std::span<const element_t<S>> b) {
  detail::require_system(f.packed, b.size(), "solve_with_factors");
  const S& s = f.packed.semiring();
  auto z = detail::forward_subst_unchecked(f.packed, b);
  const auto d_star = f.D_star();
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = s.mul(d_star[i], z[i]);
  return detail::backward_subst_unchecked(f.packed, std::span<const element_t<S>>(z));
}

template <Semiring S>
Vector<S> closure_via_ldm(const Matrix<S>& a, std::span<const element_t<S>> b) {
  return solve_with_factors(ldm_decompose(a), b);
}

/// A* B one column at a time from a single factorization.
template <Semiring S>
Matrix<S> closure_via_ldm(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows()) {
    raise(ErrorKind::shape_mismatch, "closure_via_ldm: " + std::to_string(a.rows()) + " rows vs " +
                                         std::to_string(b.rows()));
  }
  auto f = ldm_decompose(a);
  Matrix<S> out(a.semiring(), b.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    auto col = b.col(j);
    auto x = solve_with_factors(f, std::span<const element_t<S>>(col));
    for (std::size_t i = 0; i < x.size(); ++i) out(i, j) = x[i];
  }
  return out;
}

template <Semiring S>
Matrix<S> star_ldm(const Matrix<S>& a) {
  detail::require_square(a, "star_ldm");
  return closure_via_ldm(a, identity(a.semiring(), a.rows()));
}

}  // namespace srpk
