#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "srpk/closure.hpp"
#include "srpk/error.hpp"
#include "srpk/iterative.hpp"
#include "srpk/ldm.hpp"
#include "srpk/matrix.hpp"

namespace srpk {

enum class Method { escalator, gauss_jordan, block, ldm, jacobi, gauss_seidel, nilpotent };

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::escalator: return "escalator";
    case Method::gauss_jordan: return "gauss-jordan";
    case Method::block: return "block";
    case Method::ldm: return "ldm";
    case Method::jacobi: return "jacobi";
    case Method::gauss_seidel: return "gauss-seidel";
    case Method::nilpotent: return "nilpotent";
  }
  return "unknown";
}

inline std::optional<Method> parse_method(std::string_view name) {
  for (Method m : {Method::escalator, Method::gauss_jordan, Method::block, Method::ldm, Method::jacobi,
                   Method::gauss_seidel, Method::nilpotent}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

inline bool is_iterative(Method m) { return m == Method::jacobi || m == Method::gauss_seidel; }

/// Least solution of X = A X + B, one column of B at a time for the
/// iterative methods. Iterations that do not converge raise NoConvergence.
template <Semiring S>
Matrix<S> solve_bellman(const Matrix<S>& a, const Matrix<S>& b, Method method, const StopPolicy& policy = {}) {
  detail::require_square(a, "solve_bellman");
  if (a.rows() != b.rows()) {
    raise(ErrorKind::shape_mismatch, "solve_bellman: " + std::to_string(a.rows()) + " rows vs " +
                                         std::to_string(b.rows()));
  }
  switch (method) {
    case Method::escalator: return mat_mul(star_escalator(a), b);
    case Method::gauss_jordan: return mat_mul(star_gauss_jordan(a), b);
    case Method::block: return mat_mul(star_block(a), b);
    case Method::nilpotent: return mat_mul(star_nilpotent(a), b);
    case Method::ldm: return closure_via_ldm(a, b);
    case Method::jacobi:
    case Method::gauss_seidel: break;
  }
  Matrix<S> out(a.semiring(), b.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    auto col = b.col(j);
    std::span<const element_t<S>> rhs(col);
    auto report = method == Method::jacobi ? jacobi_solve(a, rhs, policy) : gauss_seidel_solve(a, rhs, policy);
    if (!report.solution) {
      raise(ErrorKind::no_convergence, std::string(to_string(method)) + " iterations " +
                                           std::string(to_string(report.status)) + " after " +
                                           std::to_string(report.iterations) + " sweeps");
    }
    for (std::size_t i = 0; i < b.rows(); ++i) out(i, j) = (*report.solution)[i];
  }
  return out;
}

template <Semiring S>
Vector<S> solve_bellman(const Matrix<S>& a, std::span<const element_t<S>> b, Method method,
                        const StopPolicy& policy = {}) {
  return solve_bellman(a, Matrix<S>::column(a.semiring(), b), method, policy).col(0);
}

/// A* by any method; the iterative ones solve X = A X + I.
template <Semiring S>
Matrix<S> closure(const Matrix<S>& a, Method method, const StopPolicy& policy = {}) {
  detail::require_square(a, "closure");
  switch (method) {
    case Method::escalator: return star_escalator(a);
    case Method::gauss_jordan: return star_gauss_jordan(a);
    case Method::block: return star_block(a);
    case Method::nilpotent: return star_nilpotent(a);
    case Method::ldm: return star_ldm(a);
    default: return solve_bellman(a, identity(a.semiring(), a.rows()), method, policy);
  }
}

}  // namespace srpk
