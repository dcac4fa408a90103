#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "srpk/error.hpp"
#include "srpk/semiring.hpp"

namespace srpk {

/// A closed interval [lower, upper] bounded in the base semiring's order.
/// For min-plus this means lower >= upper numerically.
template <class T>
struct Interval {
  T lower;
  T upper;

  bool operator==(const Interval&) const = default;
};

// Weak interval extension I(S): every operation, the closure included, acts
// on the two bounds independently. Monotonicity of the base operations keeps
// lower <= upper, so only construction and parsing validate.
template <Semiring S>
class IntervalSemiring {
 public:
  using base_type = S;
  using base_value = element_t<S>;
  using value_type = Interval<base_value>;
  static constexpr bool is_idempotent = S::is_idempotent;
  static constexpr bool is_complete = S::is_complete;

  explicit IntervalSemiring(S base = S{}) : base_(std::move(base)) {}

  const S& base() const { return base_; }

  value_type make(const base_value& lower, const base_value& upper) const {
    if (!base_.leq(lower, upper)) {
      raise(ErrorKind::invalid_interval,
            "lower bound " + base_.format(lower) + " exceeds upper bound " + base_.format(upper));
    }
    return {lower, upper};
  }
  value_type degenerate(const base_value& x) const { return {x, x}; }

  bool contains(const value_type& iv, const base_value& x) const {
    return base_.leq(iv.lower, x) && base_.leq(x, iv.upper);
  }

  value_type zero() const { return degenerate(base_.zero()); }
  value_type one() const { return degenerate(base_.one()); }
  value_type add(const value_type& a, const value_type& b) const {
    return {base_.add(a.lower, b.lower), base_.add(a.upper, b.upper)};
  }
  value_type mul(const value_type& a, const value_type& b) const {
    return {base_.mul(a.lower, b.lower), base_.mul(a.upper, b.upper)};
  }
  value_type star(const value_type& a) const { return {base_.star(a.lower), base_.star(a.upper)}; }
  bool leq(const value_type& a, const value_type& b) const {
    return base_.leq(a.lower, b.lower) && base_.leq(a.upper, b.upper);
  }
  // Inversion reverses the order, so only point intervals are invertible.
  std::optional<value_type> try_inverse(const value_type& a) const {
    if (!(a.lower == a.upper)) return std::nullopt;
    auto inv = base_.try_inverse(a.lower);
    if (!inv) return std::nullopt;
    return degenerate(*inv);
  }
  bool is_unbounded(const value_type& a) const {
    return base_.is_unbounded(a.lower) || base_.is_unbounded(a.upper);
  }
  bool near(const value_type& a, const value_type& b, double tol) const {
    return base_.near(a.lower, b.lower, tol) && base_.near(a.upper, b.upper, tol);
  }

  /// `lo..hi`, or a single base token for a point interval.
  value_type parse(std::string_view token) const {
    auto sep = token.find("..");
    if (sep == std::string_view::npos) return degenerate(base_.parse(token));
    return make(base_.parse(token.substr(0, sep)), base_.parse(token.substr(sep + 2)));
  }
  std::string format(const value_type& a) const {
    return base_.format(a.lower) + ".." + base_.format(a.upper);
  }
  std::string name() const { return "interval:" + base_.name(); }

 private:
  S base_;
};

template <Semiring S>
IntervalSemiring<S> interval_semiring(S base) {
  return IntervalSemiring<S>(std::move(base));
}

}  // namespace srpk
