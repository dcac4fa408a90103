#pragma once

#include <span>
#include <string>

#include "srpk/error.hpp"
#include "srpk/matrix.hpp"

namespace srpk {

namespace detail {

// Both helpers read only the strict triangle they need, so callers may pass
// a full matrix (Gauss-Seidel sweeps, packed LDM factors).
template <Semiring S>
Vector<S> forward_subst_unchecked(const Matrix<S>& l, std::span<const element_t<S>> b) {
  const S& s = l.semiring();
  const std::size_t n = b.size();
  Vector<S> x(b.begin(), b.end());
  for (std::size_t k = 1; k < n; ++k) {
    auto acc = s.mul(l(k, 0), x[0]);
    for (std::size_t j = 1; j < k; ++j) acc = s.add(acc, s.mul(l(k, j), x[j]));
    x[k] = s.add(acc, b[k]);
  }
  return x;
}

template <Semiring S>
Vector<S> backward_subst_unchecked(const Matrix<S>& m, std::span<const element_t<S>> b) {
  const S& s = m.semiring();
  const std::size_t n = b.size();
  Vector<S> x(b.begin(), b.end());
  for (std::size_t k = n - 1; k-- > 0;) {
    auto acc = s.mul(m(k, k + 1), x[k + 1]);
    for (std::size_t j = k + 2; j < n; ++j) acc = s.add(acc, s.mul(m(k, j), x[j]));
    x[k] = s.add(acc, b[k]);
  }
  return x;
}

template <Semiring S>
void require_system(const Matrix<S>& a, std::size_t rhs, const char* what) {
  require_square(a, what);
  if (a.rows() != rhs) {
    raise(ErrorKind::shape_mismatch, std::string(what) + ": " + std::to_string(a.rows()) +
                                         " rows vs right-hand side of " + std::to_string(rhs));
  }
}

}  // namespace detail

/// Unique solution of x = Lx + b for strictly lower-triangular L.
template <Semiring S>
Vector<S> forward_subst(const Matrix<S>& l, std::span<const element_t<S>> b) {
  detail::require_system(l, b.size(), "forward_subst");
  if (!is_strictly_lower(l)) raise(ErrorKind::not_triangular, "forward_subst needs a strictly lower-triangular matrix");
  return detail::forward_subst_unchecked(l, b);
}

/// Unique solution of x = Mx + b for strictly upper-triangular M.
template <Semiring S>
Vector<S> backward_subst(const Matrix<S>& m, std::span<const element_t<S>> b) {
  detail::require_system(m, b.size(), "backward_subst");
  if (!is_strictly_upper(m)) raise(ErrorKind::not_triangular, "backward_subst needs a strictly upper-triangular matrix");
  return detail::backward_subst_unchecked(m, b);
}

}  // namespace srpk
