#include "support/helpers.hpp"

using namespace srpk;
using testing::inf;
using testing::point_inside;

namespace {

using IMinPlus = IntervalSemiring<MinPlusPlain>;

}  // namespace

TEST_CASE("componentwise operations") {
  IMinPlus mp;
  CHECK(mp.mul(mp.make(2, 1), mp.make(3, 2)) == Interval<double>{5, 3});

  auto imax = interval_semiring(MaxPlusPlain{});
  CHECK(imax.star(imax.make(-5, -1)) == Interval<double>{0, 0});

  auto ib = interval_semiring(Boolean{});
  CHECK(ib.add(ib.make(0, 1), ib.make(0, 0)) == Interval<std::uint8_t>{0, 1});

  CHECK(mp.zero() == Interval<double>{inf, inf});
  CHECK(mp.one() == Interval<double>{0, 0});
}

TEST_CASE("bounds are ordered by the base semiring's order") {
  IMinPlus mp;
  CHECK_NOTHROW(mp.make(5, 2));
  try {
    mp.make(2, 5);
    FAIL("accepted an inverted interval");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::invalid_interval);
  }
  CHECK(mp.contains(mp.make(5, 2), 3.0));
  CHECK_FALSE(mp.contains(mp.make(5, 2), 1.0));
}

TEST_CASE("interval tokens") {
  IMinPlus mp;
  CHECK(mp.parse("inf..2") == Interval<double>{inf, 2});
  CHECK(mp.parse("4") == Interval<double>{4, 4});
  CHECK(mp.format(mp.make(inf, 2)) == "inf..2");
  CHECK_THROWS_AS(mp.parse("2..4"), Error);
  CHECK_THROWS_AS(mp.parse("2..x"), Error);
  CHECK(mp.name() == "interval:min-plus");
}

TEST_CASE("only point intervals are invertible") {
  auto imax = interval_semiring(MaxPlusPlain{});
  CHECK(imax.try_inverse(imax.degenerate(3)) == Interval<double>{-3, -3});
  CHECK_FALSE(imax.try_inverse(imax.make(1, 3)).has_value());
}

TEST_CASE_TEMPLATE("interval extensions are semirings", S, MinPlusPlain, MaxPlusCompleted, MaxMin, Boolean,
                   MaxTimesPlain, RealNonneg) {
  auto r = testing::rng(11);
  testing::check_axioms(IntervalSemiring<S>{}, r, 500);
}

TEST_CASE("interval closure contains the closures of its points") {
  IMinPlus s;
  MinPlusPlain base;
  auto r = testing::rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_matrix(s, 4, 4, r);
    auto enclosure = star_gauss_jordan(a);
    for (int k = 0; k < 10; ++k) {
      Matrix<MinPlusPlain> p(base, 4, 4);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) p(i, j) = point_inside(a(i, j), r);
      auto c = star_gauss_jordan(p);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(s.contains(enclosure(i, j), c(i, j)));
    }
  }
}

TEST_CASE("interval algorithms cost the same number of operations as point ones") {
  auto r = testing::rng(13);
  auto point = make_counting(MinPlusPlain{});
  auto wide = make_counting(IMinPlus{});
  for (std::size_t n : {3u, 6u}) {
    auto a = random_matrix(point, n, n, r);
    auto b = random_matrix(wide, n, n, r);
    point.reset();
    wide.reset();
    star_escalator(a);
    ldm_decompose(a);
    star_escalator(b);
    ldm_decompose(b);
    CHECK(point.counts() == wide.counts());
  }
}
