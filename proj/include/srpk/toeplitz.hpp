#pragma once

#include <span>
#include <string>

#include "srpk/error.hpp"
#include "srpk/matrix.hpp"

namespace srpk {

/// Symmetric Toeplitz data: T_ij = r_|i-j| with r_0 = `r0` and r_k = r[k-1].
/// For the Yule-Walker problem of order n, r holds r_1..r_n; only r_1..r_(n-1)
/// enter T_n, r_n appears on the right-hand side alone.
template <Semiring S>
struct SymmetricToeplitz {
  element_t<S> r0;
  Vector<S> r;
};

template <Semiring S>
Matrix<S> toeplitz_matrix(const S& s, const SymmetricToeplitz<S>& t, std::size_t n) {
  if (n > 1 && t.r.size() < n - 1) {
    raise(ErrorKind::shape_mismatch, "Toeplitz order " + std::to_string(n) + " needs " +
                                         std::to_string(n - 1) + " off-diagonal values");
  }
  Matrix<S> out(s, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t d = i > j ? i - j : j - i;
      out(i, j) = d == 0 ? t.r0 : t.r[d - 1];
    }
  return out;
}

/// `general` recomputes beta from its definition each step; `inverse` uses
/// the cheaper recursion through (beta*)^-1 and needs those inverses to exist.
enum class ToeplitzVariant { general, inverse };

namespace detail {

// sum_{i<k} r_(k-i) v_i, the product of r(k:-1:1) with v(1:k).
template <Semiring S>
element_t<S> reversed_dot(const S& s, const Vector<S>& r, const Vector<S>& v, std::size_t k) {
  auto acc = s.mul(r[k - 1], v[0]);
  for (std::size_t i = 1; i < k; ++i) acc = s.add(acc, s.mul(r[k - 1 - i], v[i]));
  return acc;
}

template <Semiring S>
element_t<S> next_beta(const S& s, ToeplitzVariant variant, const element_t<S>& r0,
                       const Vector<S>& r, const Vector<S>& y, std::size_t k,
                       const element_t<S>& beta, const element_t<S>& beta_star,
                       const element_t<S>& alpha) {
  if (variant == ToeplitzVariant::general) {
    return s.add(r0, dot(s, std::span<const element_t<S>>(r.data(), k),
                         std::span<const element_t<S>>(y.data(), k)));
  }
  auto inv = s.try_inverse(beta_star);
  if (!inv) raise(ErrorKind::no_inverse, "closure " + s.format(beta_star) + " has no inverse");
  return s.add(beta, s.mul(*inv, s.mul(alpha, alpha)));
}

// v <- v + reverse(y) * coeff over the first k entries, then append coeff.
template <Semiring S>
void border(const S& s, Vector<S>& v, const Vector<S>& y, std::size_t k, const element_t<S>& coeff) {
  Vector<S> next(k + 1);
  for (std::size_t i = 0; i < k; ++i) next[i] = s.add(v[i], s.mul(y[k - 1 - i], coeff));
  next[k] = coeff;
  v = std::move(next);
}

}  // namespace detail

/// Least solution of y = T_n y + (r_1, ..., r_n)^T by the generalised Durbin
/// recursion, n = t.r.size(). General variant: 3/2 n^2 + O(n) additions and
/// multiplications; n closures either way.
template <Semiring S>
Vector<S> durbin_yule_walker(const S& s, const SymmetricToeplitz<S>& t,
                             ToeplitzVariant variant = ToeplitzVariant::general) {
  const std::size_t n = t.r.size();
  if (n == 0) return {};
  const auto& r = t.r;
  auto beta = t.r0;
  auto beta_star = s.star(t.r0);
  Vector<S> y{s.mul(beta_star, r[0])};
  auto alpha = y[0];
  for (std::size_t k = 1; k < n; ++k) {
    beta = detail::next_beta(s, variant, t.r0, r, y, k, beta, beta_star, alpha);
    beta_star = s.star(beta);
    alpha = s.mul(beta_star, s.add(detail::reversed_dot(s, r, y, k), r[k]));
    detail::border(s, y, y, k, alpha);
  }
  return y;
}

/// Least solution of x = T_n x + b by the generalised Levinson recursion,
/// n = b.size(); needs r_1..r_(n-1). General variant: 5/2 n^2 + O(n)
/// additions and multiplications.
template <Semiring S>
Vector<S> levinson_solve(const S& s, const SymmetricToeplitz<S>& t, std::span<const element_t<S>> b,
                         ToeplitzVariant variant = ToeplitzVariant::general) {
  const std::size_t n = b.size();
  if (n == 0) return {};
  if (t.r.size() < n - 1) {
    raise(ErrorKind::shape_mismatch, "Toeplitz order " + std::to_string(n) + " needs " +
                                         std::to_string(n - 1) + " off-diagonal values");
  }
  const auto& r = t.r;
  auto beta = t.r0;
  auto beta_star = s.star(t.r0);
  Vector<S> x{s.mul(beta_star, b[0])};
  if (n == 1) return x;

  Vector<S> y{s.mul(beta_star, r[0])};
  auto alpha = y[0];
  for (std::size_t k = 1; k < n; ++k) {
    beta = detail::next_beta(s, variant, t.r0, r, y, k, beta, beta_star, alpha);
    beta_star = s.star(beta);
    auto mu = s.mul(beta_star, s.add(detail::reversed_dot(s, r, x, k), b[k]));
    detail::border(s, x, y, k, mu);
    if (k + 1 < n) {
      alpha = s.mul(beta_star, s.add(detail::reversed_dot(s, r, y, k), r[k]));
      detail::border(s, y, y, k, alpha);
    }
  }
  return x;
}

}  // namespace srpk
