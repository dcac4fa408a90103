#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

#include "srpk/counting.hpp"
#include "srpk/interval.hpp"
#include "srpk/matrix.hpp"
#include "srpk/semirings.hpp"

namespace srpk {

using Rng = std::mt19937_64;

/// Seed from SRPK_SEED when set to an unsigned integer, else `fallback`.
inline std::uint64_t seed_from_env(std::uint64_t fallback = 20240611) {
  const char* v = std::getenv("SRPK_SEED");
  if (v == nullptr || *v == '\0') return fallback;
  char* end = nullptr;
  auto seed = std::strtoull(v, &end, 10);
  return *end == '\0' ? seed : fallback;
}

// Closure-safe samplers: every matrix built from them has all its closures
// defined, with every direct method. Idempotent samples are small integers
// or dyadic fractions so that results are exact. `n` is the matrix order the
// sample is meant for; only the real sampler depends on it.

namespace detail {

inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }
inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace detail

template <Completion C>
double sample_element(const RealArithmetic<C>&, Rng& rng, std::size_t n) {
  if (detail::coin(rng, 0.3)) return 0.0;
  return std::uniform_real_distribution<double>(0.0, 0.9 / static_cast<double>(n == 0 ? 1 : n))(rng);
}

template <Completion C>
double sample_element(const MaxPlus<C>&, Rng& rng, std::size_t) {
  if (detail::coin(rng, 0.3)) return -inf;
  return -detail::uniform_int(rng, 0, 9) + 0.0;
}

template <Completion C>
double sample_element(const MinPlus<C>&, Rng& rng, std::size_t) {
  if (detail::coin(rng, 0.3)) return inf;
  return detail::uniform_int(rng, 0, 9);
}

template <Completion C>
double sample_element(const MaxTimes<C>&, Rng& rng, std::size_t) {
  return detail::uniform_int(rng, 0, 8) / 8.0;
}

inline double sample_element(const MaxMin& s, Rng& rng, std::size_t) {
  return s.low() + (s.high() - s.low()) * detail::uniform_int(rng, 0, 16) / 16.0;
}

inline Boolean::value_type sample_element(const Boolean&, Rng& rng, std::size_t) {
  return static_cast<Boolean::value_type>(detail::uniform_int(rng, 0, 1));
}

template <Semiring S>
element_t<S> sample_element(const Counting<S>& s, Rng& rng, std::size_t n) {
  return sample_element(s.base(), rng, n);
}

template <Semiring S>
Interval<element_t<S>> sample_element(const IntervalSemiring<S>& s, Rng& rng, std::size_t n) {
  auto a = sample_element(s.base(), rng, n);
  auto b = sample_element(s.base(), rng, n);
  if (s.base().leq(a, b)) return {a, b};
  return {b, a};
}

template <Semiring S>
Matrix<S> random_matrix(const S& s, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix<S> out(s, rows, cols);
  const std::size_t order = std::max(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = sample_element(s, rng, order);
  return out;
}

template <Semiring S>
Vector<S> random_vector(const S& s, std::size_t n, Rng& rng) {
  Vector<S> out(n);
  for (auto& x : out) x = sample_element(s, rng, n);
  return out;
}

}  // namespace srpk
