#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "srpk/error.hpp"
#include "srpk/matrix.hpp"
#include "srpk/semiring.hpp"

namespace srpk {

/// Escalator (bordering) method: closes the leading k x k block and borders
/// it with one row and column per step. n scalar closures, n^3 + O(n^2)
/// additions and multiplications.
template <Semiring S>
Matrix<S> star_escalator(const Matrix<S>& input) {
  detail::require_square(input, "star_escalator");
  const S& s = input.semiring();
  const std::size_t n = input.rows();
  Matrix<S> a = input;
  if (n == 0) return a;

  a(0, 0) = s.star(a(0, 0));
  Vector<S> ag(n), ha(n), v(n);
  for (std::size_t m = 1; m < n; ++m) {
    // ag = A_m^* g_m, ha = h_m^T A_m^*
    for (std::size_t r = 0; r < m; ++r) {
      auto acc = s.mul(a(r, 0), a(0, m));
      for (std::size_t c = 1; c < m; ++c) acc = s.add(acc, s.mul(a(r, c), a(c, m)));
      ag[r] = acc;
    }
    for (std::size_t c = 0; c < m; ++c) {
      auto acc = s.mul(a(m, 0), a(0, c));
      for (std::size_t r = 1; r < m; ++r) acc = s.add(acc, s.mul(a(m, r), a(r, c)));
      ha[c] = acc;
    }
    auto u = a(m, m);
    for (std::size_t c = 0; c < m; ++c) u = s.add(u, s.mul(a(m, c), ag[c]));
    u = s.star(u);

    for (std::size_t r = 0; r < m; ++r) v[r] = s.mul(ag[r], u);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) a(r, c) = s.add(a(r, c), s.mul(v[r], ha[c]));
    for (std::size_t r = 0; r < m; ++r) a(r, m) = v[r];
    for (std::size_t c = 0; c < m; ++c) a(m, c) = s.mul(u, ha[c]);
    a(m, m) = u;
  }
  return a;
}

/// For every entry (i, j), the pivots at which Gauss-Jordan elimination
/// strictly improved it, in pivot order. The last one is the entry's
/// parental link; the full history lets paths be rebuilt from the state of
/// the table at any earlier pivot.
class ParentalLinks {
 public:
  explicit ParentalLinks(std::size_t n = 0) : n_(n), history_(n * n) {}

  std::size_t size() const { return n_; }

  void record(std::size_t i, std::size_t j, std::size_t pivot) { history_[i * n_ + j].push_back(pivot); }

  std::optional<std::size_t> link(std::size_t i, std::size_t j) const {
    const auto& h = history_[i * n_ + j];
    if (h.empty()) return std::nullopt;
    return h.back();
  }

  /// Last improving pivot strictly below `before`.
  std::optional<std::size_t> link_before(std::size_t i, std::size_t j, std::size_t before) const {
    const auto& h = history_[i * n_ + j];
    for (auto it = h.rbegin(); it != h.rend(); ++it)
      if (*it < before) return *it;
    return std::nullopt;
  }

 private:
  std::size_t n_;
  std::vector<std::vector<std::size_t>> history_;
};

namespace detail {

template <Semiring S>
void gauss_jordan_in_place(Matrix<S>& a, ParentalLinks* links) {
  const S& s = a.semiring();
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = s.star(a(i, i));
    const auto pivot = a(i, i);
    for (std::size_t k = 0; k < n; ++k)
      if (k != i) a(k, i) = s.mul(a(k, i), pivot);
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        auto updated = s.add(a(k, j), s.mul(a(k, i), a(i, j)));
        if (links != nullptr && !(updated == a(k, j))) links->record(k, j, i);
        a(k, j) = updated;
      }
    }
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) a(i, j) = s.mul(pivot, a(i, j));
  }
}

}  // namespace detail

/// Gauss-Jordan elimination in natural pivot order (the universal
/// Floyd-Warshall algorithm).
template <Semiring S>
Matrix<S> star_gauss_jordan(const Matrix<S>& input) {
  detail::require_square(input, "star_gauss_jordan");
  Matrix<S> a = input;
  detail::gauss_jordan_in_place(a, nullptr);
  return a;
}

template <Semiring S>
struct LinkedClosure {
  Matrix<S> original;
  Matrix<S> closure;
  ParentalLinks links;
};

/// Gauss-Jordan closure that also records parental links. Only meaningful
/// when addition is idempotent, where an update either keeps or replaces the
/// old value.
template <IdempotentSemiring S>
LinkedClosure<S> star_gauss_jordan_linked(const Matrix<S>& input) {
  detail::require_square(input, "star_gauss_jordan");
  LinkedClosure<S> out{input, input, ParentalLinks(input.rows())};
  detail::gauss_jordan_in_place(out.closure, &out.links);
  return out;
}

namespace detail {

template <Semiring S>
Matrix<S> star_block_split(const Matrix<S>& a, std::size_t k);

template <Semiring S>
Matrix<S> star_block_halving(const Matrix<S>& a) {
  const std::size_t n = a.rows();
  if (n == 0) return a;
  if (n == 1) {
    Matrix<S> out = a;
    out(0, 0) = a.semiring().star(a(0, 0));
    return out;
  }
  return star_block_split(a, (n + 1) / 2);
}

template <Semiring S>
Matrix<S> star_block_split(const Matrix<S>& a, std::size_t k) {
  const std::size_t n = a.rows();
  const std::size_t m = n - k;
  Matrix<S> a11 = submatrix(a, 0, 0, k, k);
  Matrix<S> a12 = submatrix(a, 0, k, k, m);
  Matrix<S> a21 = submatrix(a, k, 0, m, k);
  Matrix<S> a22 = submatrix(a, k, k, m, m);

  Matrix<S> s11 = star_block_halving(a11);
  Matrix<S> s11_a12 = mat_mul(s11, a12);
  Matrix<S> a21_s11 = mat_mul(a21, s11);
  Matrix<S> d_star = star_block_halving(mat_add(a22, mat_mul(a21, s11_a12)));

  Matrix<S> top_right = mat_mul(s11_a12, d_star);
  Matrix<S> bottom_left = mat_mul(d_star, a21_s11);
  Matrix<S> top_left = mat_add(s11, mat_mul(top_right, a21_s11));

  Matrix<S> out(a.semiring(), n, n);
  place(out, top_left, 0, 0);
  place(out, top_right, 0, k);
  place(out, bottom_left, k, 0);
  place(out, d_star, k, k);
  return out;
}

}  // namespace detail

/// Closure by the 2x2 block formula, splitting after the first `split`
/// rows/columns; inner blocks are split in half recursively.
template <Semiring S>
Matrix<S> star_block(const Matrix<S>& a, std::size_t split) {
  detail::require_square(a, "star_block");
  if (split < 1 || split >= a.rows()) {
    raise(ErrorKind::bad_split, "split " + std::to_string(split) + " outside [1, " +
                                    std::to_string(a.rows()) + ")");
  }
  return detail::star_block_split(a, split);
}

/// Block closure with the split at ceil(n/2); 0x0 and 1x1 inputs are handled
/// directly.
template <Semiring S>
Matrix<S> star_block(const Matrix<S>& a) {
  detail::require_square(a, "star_block");
  return detail::star_block_halving(a);
}

/// I + A + ... + A^(n-1) for strictly triangular A. No scalar closures.
template <Semiring S>
Matrix<S> star_nilpotent(const Matrix<S>& a) {
  detail::require_square(a, "star_nilpotent");
  if (!is_strictly_lower(a) && !is_strictly_upper(a)) {
    raise(ErrorKind::not_triangular, "star_nilpotent needs a strictly triangular matrix");
  }
  const std::size_t n = a.rows();
  Matrix<S> result = identity(a.semiring(), n);
  Matrix<S> term = result;
  for (std::size_t k = 1; k < n; ++k) {
    term = mat_mul(term, a);
    result = mat_add(result, term);
  }
  return result;
}

}  // namespace srpk
