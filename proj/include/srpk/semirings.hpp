#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "srpk/element_io.hpp"
#include "srpk/error.hpp"
#include "srpk/semiring.hpp"

namespace srpk {

inline constexpr double inf = std::numeric_limits<double>::infinity();

/// Whether an instance carries the extra infinity element that makes every
/// closure exist.
enum class Completion { plain, completed };

namespace detail {

inline bool near_real(double a, double b, double tol) {
  if (a == b) return true;
  if (std::isinf(a) || std::isinf(b)) return false;
  double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= tol * scale;
}

inline double parse_nonnegative(std::string_view token, bool allow_inf, std::string_view name) {
  double v = io::parse_number(token);
  if (v < 0.0 || (!allow_inf && std::isinf(v))) {
    raise(ErrorKind::parse_error,
          "'" + std::string(token) + "' is not an element of " + std::string(name));
  }
  return v;
}

}  // namespace detail

// Nonnegative reals with ordinary + and *. The plain instance has closures
// only below 1; the completed one adds +inf and maps a >= 1 to it.
template <Completion C>
class RealArithmetic {
 public:
  using value_type = double;
  static constexpr bool is_idempotent = false;
  static constexpr bool is_complete = C == Completion::completed;

  double zero() const { return 0.0; }
  double one() const { return 1.0; }
  double add(double a, double b) const { return a + b; }
  double mul(double a, double b) const {
    if (a == 0.0 || b == 0.0) return 0.0;
    return a * b;
  }
  double star(double a) const {
    if (a < 1.0) return 1.0 / (1.0 - a);
    if constexpr (is_complete) return inf;
    raise(ErrorKind::no_closure, "real closure diverges for " + format(a));
  }
  bool leq(double a, double b) const { return a <= b; }
  std::optional<double> try_inverse(double a) const {
    if (a > 0.0 && std::isfinite(a)) return 1.0 / a;
    return std::nullopt;
  }
  bool is_unbounded(double a) const { return std::isinf(a); }
  bool near(double a, double b, double tol) const { return detail::near_real(a, b, tol); }
  double parse(std::string_view token) const {
    return detail::parse_nonnegative(token, is_complete, name());
  }
  std::string format(double a) const { return io::format_precise(a); }
  std::string name() const { return is_complete ? "real-complete" : "real"; }
};

// (max, +) over R u {-inf}; the completed instance adds +inf with
// (-inf) * (+inf) = -inf.
template <Completion C>
class MaxPlus {
 public:
  using value_type = double;
  static constexpr bool is_idempotent = true;
  static constexpr bool is_complete = C == Completion::completed;

  double zero() const { return -inf; }
  double one() const { return 0.0; }
  double add(double a, double b) const { return std::max(a, b); }
  double mul(double a, double b) const {
    if (a == -inf || b == -inf) return -inf;
    return a + b;
  }
  double star(double a) const {
    if (a <= 0.0) return 0.0;
    if constexpr (is_complete) return inf;
    raise(ErrorKind::no_closure, "max-plus closure diverges for " + format(a));
  }
  bool leq(double a, double b) const { return a <= b; }
  std::optional<double> try_inverse(double a) const {
    if (std::isfinite(a)) return -a + 0.0;
    return std::nullopt;
  }
  bool is_unbounded(double a) const { return a == inf; }
  bool near(double a, double b, double) const { return a == b; }
  double parse(std::string_view token) const {
    double v = io::parse_number(token);
    if (!is_complete && v == inf) raise(ErrorKind::parse_error, "+inf is not an element of max-plus");
    return v;
  }
  std::string format(double a) const { return io::format_shortest(a); }
  std::string name() const { return is_complete ? "max-plus-complete" : "max-plus"; }
};

// (min, +) over R u {+inf}; the completed instance adds -inf with
// (+inf) * (-inf) = +inf. The canonical order is reversed numeric order.
template <Completion C>
class MinPlus {
 public:
  using value_type = double;
  static constexpr bool is_idempotent = true;
  static constexpr bool is_complete = C == Completion::completed;

  double zero() const { return inf; }
  double one() const { return 0.0; }
  double add(double a, double b) const { return std::min(a, b); }
  double mul(double a, double b) const {
    if (a == inf || b == inf) return inf;
    return a + b;
  }
  double star(double a) const {
    if (a >= 0.0) return 0.0;
    if constexpr (is_complete) return -inf;
    raise(ErrorKind::no_closure, "min-plus closure diverges for " + format(a));
  }
  bool leq(double a, double b) const { return a >= b; }
  std::optional<double> try_inverse(double a) const {
    if (std::isfinite(a)) return -a + 0.0;
    return std::nullopt;
  }
  bool is_unbounded(double a) const { return a == -inf; }
  bool near(double a, double b, double) const { return a == b; }
  double parse(std::string_view token) const {
    double v = io::parse_number(token);
    if (!is_complete && v == -inf) raise(ErrorKind::parse_error, "-inf is not an element of min-plus");
    return v;
  }
  std::string format(double a) const { return io::format_shortest(a); }
  std::string name() const { return is_complete ? "min-plus-complete" : "min-plus"; }
};

// (max, *) over [0, inf). Closure: 1 up to 1, then divergent (or +inf when
// completed), mirroring max-plus under the exponential map.
template <Completion C>
class MaxTimes {
 public:
  using value_type = double;
  static constexpr bool is_idempotent = true;
  static constexpr bool is_complete = C == Completion::completed;

  double zero() const { return 0.0; }
  double one() const { return 1.0; }
  double add(double a, double b) const { return std::max(a, b); }
  double mul(double a, double b) const {
    if (a == 0.0 || b == 0.0) return 0.0;
    return a * b;
  }
  double star(double a) const {
    if (a <= 1.0) return 1.0;
    if constexpr (is_complete) return inf;
    raise(ErrorKind::no_closure, "max-times closure diverges for " + format(a));
  }
  bool leq(double a, double b) const { return a <= b; }
  std::optional<double> try_inverse(double a) const {
    if (a > 0.0 && std::isfinite(a)) return 1.0 / a;
    return std::nullopt;
  }
  bool is_unbounded(double a) const { return a == inf; }
  bool near(double a, double b, double) const { return a == b; }
  double parse(std::string_view token) const {
    return detail::parse_nonnegative(token, is_complete, name());
  }
  std::string format(double a) const { return io::format_shortest(a); }
  std::string name() const { return is_complete ? "max-times-complete" : "max-times"; }
};

// (max, min) over a closed interval [low, high]; zero = low, one = high.
class MaxMin {
 public:
  using value_type = double;
  static constexpr bool is_idempotent = true;
  static constexpr bool is_complete = true;

  MaxMin() = default;
  MaxMin(double low, double high) : low_(low), high_(high) {
    if (!(low < high)) raise(ErrorKind::parse_error, "max-min needs low < high");
  }

  double low() const { return low_; }
  double high() const { return high_; }

  double zero() const { return low_; }
  double one() const { return high_; }
  double add(double a, double b) const { return std::max(a, b); }
  double mul(double a, double b) const { return std::min(a, b); }
  double star(double) const { return high_; }
  bool leq(double a, double b) const { return a <= b; }
  std::optional<double> try_inverse(double) const { return std::nullopt; }
  bool is_unbounded(double) const { return false; }
  bool near(double a, double b, double) const { return a == b; }
  double parse(std::string_view token) const {
    double v = io::parse_number(token);
    if (v < low_ || v > high_) {
      raise(ErrorKind::parse_error, "'" + std::string(token) + "' is outside " + name());
    }
    return v;
  }
  std::string format(double a) const { return io::format_shortest(a); }
  std::string name() const {
    return "max-min:" + io::format_shortest(low_) + "," + io::format_shortest(high_);
  }

 private:
  double low_ = 0.0;
  double high_ = 1.0;
};

// ({0,1}, or, and).
class Boolean {
 public:
  using value_type = std::uint8_t;
  static constexpr bool is_idempotent = true;
  static constexpr bool is_complete = true;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type add(value_type a, value_type b) const { return static_cast<value_type>(a | b); }
  value_type mul(value_type a, value_type b) const { return static_cast<value_type>(a & b); }
  value_type star(value_type) const { return 1; }
  bool leq(value_type a, value_type b) const { return (a | b) == b; }
  std::optional<value_type> try_inverse(value_type) const { return std::nullopt; }
  bool is_unbounded(value_type) const { return false; }
  bool near(value_type a, value_type b, double) const { return a == b; }
  value_type parse(std::string_view token) const {
    if (token == "0") return 0;
    if (token == "1") return 1;
    raise(ErrorKind::parse_error, "'" + std::string(token) + "' is not a boolean (0 or 1)");
  }
  std::string format(value_type a) const { return a ? "1" : "0"; }
  std::string name() const { return "boolean"; }
};

using RealNonneg = RealArithmetic<Completion::plain>;
using RealNonnegCompleted = RealArithmetic<Completion::completed>;
using MaxPlusPlain = MaxPlus<Completion::plain>;
using MaxPlusCompleted = MaxPlus<Completion::completed>;
using MinPlusPlain = MinPlus<Completion::plain>;
using MinPlusCompleted = MinPlus<Completion::completed>;
using MaxTimesPlain = MaxTimes<Completion::plain>;
using MaxTimesCompleted = MaxTimes<Completion::completed>;

/// The scalar closure; identical to s.star(a), kept as a free function so that
/// generic code reads like the other operations.
template <Semiring S>
element_t<S> star_scalar(const S& s, const element_t<S>& a) {
  return s.star(a);
}

template <Semiring S>
bool leq(const S& s, const element_t<S>& a, const element_t<S>& b) {
  return s.leq(a, b);
}

}  // namespace srpk
