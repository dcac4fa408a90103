#pragma once

#include <concepts>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace srpk {

// The contract every algorithm in this library is generic over.
//
//   add / mul    semiring addition and multiplication
//   zero / one   their neutral elements (zero absorbs under mul)
//   star         closure a* = 1 + a + a^2 + ...; throws Error(no_closure)
//                when the series has no value in the instance
//   leq          the instance's order (canonical order when idempotent)
//   try_inverse  multiplicative inverse, or nullopt
//   is_unbounded true for the infinity element of a completed instance
//   near         equality for assertions and stopping tests; exact for
//                idempotent instances, tolerance-based for real arithmetic
//   parse/format element token syntax of the text formats
template <class S>
concept Semiring =
    std::copy_constructible<S> &&
    std::equality_comparable<typename S::value_type> &&
    requires(const S& s, const typename S::value_type& a, std::string_view token, double tol) {
      { s.zero() } -> std::same_as<typename S::value_type>;
      { s.one() } -> std::same_as<typename S::value_type>;
      { s.add(a, a) } -> std::same_as<typename S::value_type>;
      { s.mul(a, a) } -> std::same_as<typename S::value_type>;
      { s.star(a) } -> std::same_as<typename S::value_type>;
      { s.leq(a, a) } -> std::same_as<bool>;
      { s.try_inverse(a) } -> std::same_as<std::optional<typename S::value_type>>;
      { s.is_unbounded(a) } -> std::same_as<bool>;
      { s.near(a, a, tol) } -> std::same_as<bool>;
      { s.parse(token) } -> std::same_as<typename S::value_type>;
      { s.format(a) } -> std::same_as<std::string>;
      { s.name() } -> std::same_as<std::string>;
      { S::is_idempotent } -> std::convertible_to<bool>;
      { S::is_complete } -> std::convertible_to<bool>;
    };

template <Semiring S>
using element_t = typename S::value_type;

template <class S>
concept IdempotentSemiring = Semiring<S> && S::is_idempotent;

/// Default tolerance for comparing real-valued elements.
inline constexpr double default_tolerance = 1e-12;

/// Left-to-right inner product x[0]y[0] + x[1]y[1] + ...; zero when empty.
template <Semiring S>
element_t<S> dot(const S& s, std::span<const element_t<S>> x, std::span<const element_t<S>> y) {
  if (x.empty()) return s.zero();
  element_t<S> acc = s.mul(x[0], y[0]);
  for (std::size_t i = 1; i < x.size(); ++i) acc = s.add(acc, s.mul(x[i], y[i]));
  return acc;
}

}  // namespace srpk
