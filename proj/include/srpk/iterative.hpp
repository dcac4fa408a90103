#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <string_view>
#include <type_traits>
#include <vector>

#include "srpk/matrix.hpp"
#include "srpk/triangular.hpp"

namespace srpk {

/// Stop when two consecutive iterates agree (exactly for idempotent
/// instances, to `tolerance` otherwise), or after `max_iterations` sweeps.
struct StopPolicy {
  double tolerance = default_tolerance;
  // Unset: 10 n for idempotent instances, max(10 n, 10000) otherwise.
  std::optional<std::size_t> max_iterations;
  // Real instances: an entry beyond this magnitude counts as divergence.
  double divergence_bound = 1e100;
};

enum class IterationStatus { converged, diverged, iteration_cap };

inline std::string_view to_string(IterationStatus status) {
  switch (status) {
    case IterationStatus::converged: return "converged";
    case IterationStatus::diverged: return "diverged";
    case IterationStatus::iteration_cap: return "iteration-cap";
  }
  return "unknown";
}

template <Semiring S>
struct IterationReport {
  std::optional<Vector<S>> solution;
  IterationStatus status = IterationStatus::iteration_cap;
  // Index k of the last iterate computed; on convergence x^(k) = x^(k+1).
  std::size_t iterations = 0;
};

namespace detail {

template <Semiring S>
std::size_t iteration_cap(const StopPolicy& policy, std::size_t n) {
  if (policy.max_iterations) return std::max<std::size_t>(*policy.max_iterations, 1);
  if constexpr (S::is_idempotent) return 10 * n;
  else return std::max<std::size_t>(10 * n, 10000);
}

template <Semiring S>
bool same_iterate(const S& s, const Vector<S>& a, const Vector<S>& b, double tol) {
  if constexpr (S::is_idempotent) {
    return a == b;
  } else {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!s.near(a[i], b[i], tol)) return false;
    return true;
  }
}

template <Semiring S>
bool blows_up(const S& s, const Vector<S>& prev, const Vector<S>& next, const StopPolicy& policy) {
  for (std::size_t i = 0; i < next.size(); ++i)
    if (s.is_unbounded(prev[i]) && s.is_unbounded(next[i])) return true;
  if constexpr (!S::is_idempotent && std::is_floating_point_v<element_t<S>>) {
    for (const auto& v : next)
      if (std::isnan(v) || std::abs(v) > policy.divergence_bound) return true;
  }
  return false;
}

template <Semiring S>
Vector<S> vec_add(const S& s, const Vector<S>& a, const Vector<S>& b) {
  Vector<S> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s.add(a[i], b[i]);
  return out;
}

// Runs x <- step(x). For idempotent instances a shadow sequence
// v <- step(v) + x0 started from zero is carried for n + 1 steps: it is the
// partial sum of the iteration matrix series applied to x0 + b, and when it
// is still growing after n + 1 terms some cycle keeps improving walk weights,
// so the iterates cannot settle.
template <Semiring S, class Step>
IterationReport<S> iterate(const Matrix<S>& a, std::span<const element_t<S>> b,
                           std::span<const element_t<S>> x0, const StopPolicy& policy, Step step) {
  detail::require_system(a, b.size(), "iteration");
  if (x0.size() != b.size()) {
    raise(ErrorKind::shape_mismatch, "starting vector has " + std::to_string(x0.size()) +
                                         " entries, expected " + std::to_string(b.size()));
  }
  const S& s = a.semiring();
  const std::size_t n = b.size();
  IterationReport<S> report;
  if (n == 0) {
    report.solution = Vector<S>{};
    report.status = IterationStatus::converged;
    return report;
  }

  const Vector<S> start(x0.begin(), x0.end());
  Vector<S> x = start;
  Vector<S> shadow(n, s.zero());
  const std::size_t cap = iteration_cap<S>(policy, n);
  for (std::size_t k = 0; k < cap; ++k) {
    Vector<S> next = step(x);
    if (blows_up(s, x, next, policy)) {
      report.status = IterationStatus::diverged;
      report.iterations = k + 1;
      return report;
    }
    if (same_iterate(s, x, next, policy.tolerance)) {
      report.solution = std::move(next);
      report.status = IterationStatus::converged;
      report.iterations = k;
      return report;
    }
    if constexpr (S::is_idempotent) {
      if (k <= n) {
        Vector<S> grown = vec_add(s, step(shadow), start);
        if (k == n && !(grown == shadow)) {
          report.status = IterationStatus::diverged;
          report.iterations = k + 1;
          return report;
        }
        shadow = std::move(grown);
      }
    }
    x = std::move(next);
  }
  report.iterations = cap;
  return report;
}

}  // namespace detail

/// Jacobi iterations x <- A x + b.
template <Semiring S>
IterationReport<S> jacobi_solve(const Matrix<S>& a, std::span<const element_t<S>> b,
                                std::span<const element_t<S>> x0, const StopPolicy& policy = {}) {
  const S& s = a.semiring();
  return detail::iterate(a, b, x0, policy, [&](const Vector<S>& x) {
    Vector<S> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = s.add(dot(s, a.row(i), std::span<const element_t<S>>(x)), b[i]);
    return out;
  });
}

template <Semiring S>
IterationReport<S> jacobi_solve(const Matrix<S>& a, std::span<const element_t<S>> b, const StopPolicy& policy = {}) {
  Vector<S> x0(b.size(), a.semiring().zero());
  return jacobi_solve(a, b, std::span<const element_t<S>>(x0), policy);
}

/// The Jacobi iterates x^(0) = x0, ..., x^(count), without any stopping test.
template <Semiring S>
std::vector<Vector<S>> jacobi_iterates(const Matrix<S>& a, std::span<const element_t<S>> b,
                                       std::span<const element_t<S>> x0, std::size_t count) {
  detail::require_system(a, b.size(), "jacobi_iterates");
  const S& s = a.semiring();
  std::vector<Vector<S>> out{Vector<S>(x0.begin(), x0.end())};
  for (std::size_t k = 0; k < count; ++k) {
    const auto& x = out.back();
    Vector<S> next(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) next[i] = s.add(dot(s, a.row(i), std::span<const element_t<S>>(x)), b[i]);
    out.push_back(std::move(next));
  }
  return out;
}

/// Gauss-Seidel iterations: with A = L + U (L strictly lower, U upper with
/// the diagonal), each sweep solves x = L x + (U x_prev + b) by forward
/// substitution.
template <Semiring S>
IterationReport<S> gauss_seidel_solve(const Matrix<S>& a, std::span<const element_t<S>> b,
                                      std::span<const element_t<S>> x0, const StopPolicy& policy = {}) {
  const S& s = a.semiring();
  return detail::iterate(a, b, x0, policy, [&](const Vector<S>& x) {
    const std::size_t n = x.size();
    Vector<S> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto acc = s.mul(a(i, i), x[i]);
      for (std::size_t j = i + 1; j < n; ++j) acc = s.add(acc, s.mul(a(i, j), x[j]));
      y[i] = s.add(acc, b[i]);
    }
    return detail::forward_subst_unchecked(a, std::span<const element_t<S>>(y));
  });
}

template <Semiring S>
IterationReport<S> gauss_seidel_solve(const Matrix<S>& a, std::span<const element_t<S>> b,
                                      const StopPolicy& policy = {}) {
  Vector<S> x0(b.size(), a.semiring().zero());
  return gauss_seidel_solve(a, b, std::span<const element_t<S>>(x0), policy);
}

}  // namespace srpk
