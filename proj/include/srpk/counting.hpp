#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "srpk/semiring.hpp"

namespace srpk {

struct OperationCounts {
  std::uint64_t add = 0;
  std::uint64_t mul = 0;
  std::uint64_t star = 0;
  std::uint64_t inverse = 0;

  bool operator==(const OperationCounts&) const = default;
};

class OperationCounters {
 public:
  void count_add() noexcept { add_.fetch_add(1, std::memory_order_relaxed); }
  void count_mul() noexcept { mul_.fetch_add(1, std::memory_order_relaxed); }
  void count_star() noexcept { star_.fetch_add(1, std::memory_order_relaxed); }
  void count_inverse() noexcept { inverse_.fetch_add(1, std::memory_order_relaxed); }

  OperationCounts snapshot() const noexcept {
    return {add_.load(), mul_.load(), star_.load(), inverse_.load()};
  }
  void reset() noexcept {
    add_ = 0;
    mul_ = 0;
    star_ = 0;
    inverse_ = 0;
  }

 private:
  std::atomic<std::uint64_t> add_{0};
  std::atomic<std::uint64_t> mul_{0};
  std::atomic<std::uint64_t> star_{0};
  std::atomic<std::uint64_t> inverse_{0};
};

// Delegates to a base semiring and tallies add, mul, star and inverse calls.
// Copies share one set of counters, so a matrix built over a Counting
// instance reports the work of every algorithm run on it.
template <Semiring S>
class Counting {
 public:
  using value_type = element_t<S>;
  static constexpr bool is_idempotent = S::is_idempotent;
  static constexpr bool is_complete = S::is_complete;

  explicit Counting(S base = S{})
      : base_(std::move(base)), counters_(std::make_shared<OperationCounters>()) {}

  const S& base() const { return base_; }
  OperationCounts counts() const { return counters_->snapshot(); }
  void reset() const { counters_->reset(); }

  value_type zero() const { return base_.zero(); }
  value_type one() const { return base_.one(); }
  value_type add(const value_type& a, const value_type& b) const {
    counters_->count_add();
    return base_.add(a, b);
  }
  value_type mul(const value_type& a, const value_type& b) const {
    counters_->count_mul();
    return base_.mul(a, b);
  }
  value_type star(const value_type& a) const {
    counters_->count_star();
    return base_.star(a);
  }
  bool leq(const value_type& a, const value_type& b) const { return base_.leq(a, b); }
  std::optional<value_type> try_inverse(const value_type& a) const {
    counters_->count_inverse();
    return base_.try_inverse(a);
  }
  bool is_unbounded(const value_type& a) const { return base_.is_unbounded(a); }
  bool near(const value_type& a, const value_type& b, double tol) const {
    return base_.near(a, b, tol);
  }
  value_type parse(std::string_view token) const { return base_.parse(token); }
  std::string format(const value_type& a) const { return base_.format(a); }
  std::string name() const { return base_.name(); }

 private:
  S base_;
  std::shared_ptr<OperationCounters> counters_;
};

template <Semiring S>
Counting<S> make_counting(S s) {
  return Counting<S>(std::move(s));
}

}  // namespace srpk
