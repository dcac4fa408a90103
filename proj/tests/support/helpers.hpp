#pragma once

#include <doctest.h>

#include <initializer_list>
#include <string>
#include <vector>

#include "srpk/srpk.hpp"
#include "support/generators.hpp"

namespace testing {

using srpk::inf;

inline srpk::Rng rng(std::uint64_t salt = 0) { return srpk::Rng(srpk::seed_from_env() ^ (salt * 0x9e3779b97f4a7c15ULL)); }

template <srpk::Semiring S>
srpk::Matrix<S> mat(const S& s, std::initializer_list<std::initializer_list<srpk::element_t<S>>> rows) {
  return srpk::Matrix<S>::from_rows(s, rows);
}

template <srpk::Semiring S>
std::string show(const srpk::Matrix<S>& a) {
  return srpk::io::to_text(a);
}

template <srpk::Semiring S>
std::string show(const S& s, const srpk::Vector<S>& v) {
  return srpk::io::to_text(srpk::Matrix<S>::column(s, v));
}

// Elements beyond the closure-safe samples: values whose closure diverges,
// and the infinity of completed instances.
template <srpk::Completion C>
std::vector<double> extras(const srpk::RealArithmetic<C>&) {
  if constexpr (C == srpk::Completion::completed) return {1.0, 1.5, 3.0, inf};
  else return {1.0, 1.5, 3.0};
}
template <srpk::Completion C>
std::vector<double> extras(const srpk::MaxPlus<C>&) {
  if constexpr (C == srpk::Completion::completed) return {2.0, 7.0, inf};
  else return {2.0, 7.0};
}
template <srpk::Completion C>
std::vector<double> extras(const srpk::MinPlus<C>&) {
  if constexpr (C == srpk::Completion::completed) return {-2.0, -7.0, -inf};
  else return {-2.0, -7.0};
}
template <srpk::Completion C>
std::vector<double> extras(const srpk::MaxTimes<C>&) {
  if constexpr (C == srpk::Completion::completed) return {1.5, 4.0, inf};
  else return {1.5, 4.0};
}
inline std::vector<double> extras(const srpk::MaxMin& s) { return {s.low(), s.high()}; }
inline std::vector<srpk::Boolean::value_type> extras(const srpk::Boolean&) { return {0, 1}; }
template <srpk::Semiring S>
std::vector<srpk::Interval<srpk::element_t<S>>> extras(const srpk::IntervalSemiring<S>& s) {
  std::vector<srpk::Interval<srpk::element_t<S>>> out;
  for (const auto& x : extras(s.base())) out.push_back(s.degenerate(x));
  return out;
}

template <srpk::Semiring S>
srpk::element_t<S> wide_sample(const S& s, srpk::Rng& r) {
  auto more = extras(s);
  std::uniform_int_distribution<std::size_t> pick(0, more.size() + 4);
  auto k = pick(r);
  if (k < more.size()) return more[k];
  if (k == more.size()) return s.zero();
  if (k == more.size() + 1) return s.one();
  using srpk::sample_element;
  return sample_element(s, r, 3);
}

/// The semiring axioms and the order/closure properties on `samples` random
/// triples; exact for idempotent instances, to `tol` otherwise.
template <srpk::Semiring S>
void check_axioms(const S& s, srpk::Rng& r, int samples, double tol = srpk::default_tolerance) {
  CHECK_FALSE(s.zero() == s.one());
  for (int t = 0; t < samples; ++t) {
    auto a = wide_sample(s, r);
    auto b = wide_sample(s, r);
    auto c = wide_sample(s, r);
    CAPTURE(s.format(a));
    CAPTURE(s.format(b));
    CAPTURE(s.format(c));
    CHECK(s.near(s.add(a, s.add(b, c)), s.add(s.add(a, b), c), tol));
    CHECK(s.near(s.mul(a, s.mul(b, c)), s.mul(s.mul(a, b), c), tol));
    CHECK(s.add(a, b) == s.add(b, a));
    CHECK(s.near(s.mul(a, s.add(b, c)), s.add(s.mul(a, b), s.mul(a, c)), tol));
    CHECK(s.near(s.mul(s.add(b, c), a), s.add(s.mul(b, a), s.mul(c, a)), tol));
    CHECK(s.add(a, s.zero()) == a);
    CHECK(s.mul(a, s.one()) == a);
    CHECK(s.mul(s.one(), a) == a);
    CHECK(s.mul(a, s.zero()) == s.zero());
    CHECK(s.mul(s.zero(), a) == s.zero());

    if (s.leq(a, b) && s.leq(c, c)) {
      CHECK(s.leq(s.add(a, c), s.add(b, c)));
      CHECK(s.leq(s.mul(a, c), s.mul(b, c)));
      CHECK(s.leq(s.mul(c, a), s.mul(c, b)));
    }
    CHECK(s.leq(s.zero(), a));
    if constexpr (S::is_idempotent) {
      CHECK(s.add(a, a) == a);
      CHECK(s.leq(a, b) == (s.add(a, b) == b));
    }

    try {
      auto st = s.star(a);
      CHECK(s.near(st, s.add(s.one(), s.mul(a, st)), tol));
      CHECK(s.near(st, s.add(s.one(), s.mul(st, a)), tol));
      if constexpr (S::is_idempotent) {
        CHECK(s.mul(st, st) == st);
        CHECK(s.star(st) == st);
      }
    } catch (const srpk::Error& e) {
      CHECK(e.kind() == srpk::ErrorKind::no_closure);
      CHECK_FALSE(S::is_complete);
    }
  }
}

}  // namespace testing
