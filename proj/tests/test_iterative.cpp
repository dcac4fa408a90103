#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace srpk;
using testing::inf;
using testing::mat;

namespace {

template <Semiring S>
using Span = std::span<const element_t<S>>;

}  // namespace

TEST_CASE("Jacobi examples") {
  MinPlusPlain s;
  auto a = mat(s, {{inf, 1}, {1, inf}});
  Vector<MinPlusPlain> b{0, inf};
  Vector<MinPlusPlain> x0{inf, inf};
  auto report = jacobi_solve(a, Span<MinPlusPlain>(b), Span<MinPlusPlain>(x0));
  CHECK(report.status == IterationStatus::converged);
  REQUIRE(report.solution);
  CHECK(*report.solution == Vector<MinPlusPlain>{0, 1});
  CHECK(report.iterations <= 3);

  auto trace = jacobi_iterates(a, Span<MinPlusPlain>(b), Span<MinPlusPlain>(x0), 3);
  CHECK(trace[1] == Vector<MinPlusPlain>{0, inf});
  CHECK(trace[2] == Vector<MinPlusPlain>{0, 1});
  CHECK(trace[3] == trace[2]);

  Vector<MinPlusPlain> c{4, 2};
  auto trivial = jacobi_solve(zero_matrix(s, 2, 2), Span<MinPlusPlain>(c));
  CHECK(trivial.status == IterationStatus::converged);
  CHECK(*trivial.solution == c);
  CHECK(trivial.iterations == 1);

  CHECK_THROWS_AS(jacobi_solve(a, Span<MinPlusPlain>(b).first(1)), Error);
}

TEST_CASE("divergence and periodic regimes") {
  MaxPlusPlain s;
  Vector<MaxPlusPlain> b{0, 0};
  Vector<MaxPlusPlain> x0{0, 0};
  auto positive = mat(s, {{-inf, 1}, {0, -inf}});
  for (bool seidel : {false, true}) {
    CAPTURE(seidel);
    auto report = seidel ? gauss_seidel_solve(positive, Span<MaxPlusPlain>(b), Span<MaxPlusPlain>(x0))
                         : jacobi_solve(positive, Span<MaxPlusPlain>(b), Span<MaxPlusPlain>(x0));
    CHECK(report.status == IterationStatus::diverged);
    CHECK_FALSE(report.solution);
  }

  MaxPlusCompleted completed;
  auto report = jacobi_solve(mat(completed, {{inf, -inf}, {0, -1}}), Span<MaxPlusCompleted>(b));
  CHECK(report.status == IterationStatus::diverged);

  // One zero-weight 2-cycle: from an uneven start the iterates alternate.
  auto cycle = mat(s, {{-inf, 0}, {0, -inf}});
  Vector<MaxPlusPlain> low{-inf, -inf};
  Vector<MaxPlusPlain> uneven{0, -5};
  auto periodic = jacobi_solve(cycle, Span<MaxPlusPlain>(low), Span<MaxPlusPlain>(uneven));
  CHECK(periodic.status == IterationStatus::iteration_cap);
  CHECK_FALSE(periodic.solution);
  CHECK(periodic.iterations == 20);
  auto trace = jacobi_iterates(cycle, Span<MaxPlusPlain>(low), Span<MaxPlusPlain>(uneven), 2);
  CHECK(trace[1] == Vector<MaxPlusPlain>{-5, 0});
  CHECK(trace[2] == uneven);

  StopPolicy short_run;
  short_run.max_iterations = 3;
  CHECK(jacobi_solve(cycle, Span<MaxPlusPlain>(low), Span<MaxPlusPlain>(uneven), short_run).iterations == 3);

  RealNonneg re;
  Vector<RealNonneg> one{1.0};
  auto grows = jacobi_solve(mat(re, {{2.0}}), Span<RealNonneg>(one));
  CHECK(grows.status == IterationStatus::diverged);
  try {
    solve_bellman(mat(re, {{2.0}}), Span<RealNonneg>(one), Method::jacobi);
    FAIL("expected NoConvergence");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::no_convergence);
  }
}

TEST_CASE("real iterations converge to the geometric series") {
  RealNonneg re;
  Vector<RealNonneg> one{1.0};
  auto report = jacobi_solve(mat(re, {{0.5}}), Span<RealNonneg>(one));
  CHECK(report.status == IterationStatus::converged);
  CHECK(std::abs((*report.solution)[0] - 2.0) <= 1e-9);

  auto r = testing::rng(61);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 1 + t % 6;
    auto a = random_matrix(re, n, n, r);
    auto b = random_vector(re, n, r);
    auto direct = solve_bellman(a, Span<RealNonneg>(b), Method::gauss_jordan);
    for (auto report : {jacobi_solve(a, Span<RealNonneg>(b)), gauss_seidel_solve(a, Span<RealNonneg>(b))}) {
      REQUIRE(report.status == IterationStatus::converged);
      for (std::size_t i = 0; i < n; ++i) CHECK(re.near((*report.solution)[i], direct[i], 1e-9));
    }
  }
}

TEST_CASE("Gauss-Seidel examples") {
  MinPlusPlain s;
  auto a = mat(s, {{inf, 1}, {1, inf}});
  Vector<MinPlusPlain> b{0, inf};
  Vector<MinPlusPlain> x0{inf, inf};
  auto gs = gauss_seidel_solve(a, Span<MinPlusPlain>(b), Span<MinPlusPlain>(x0));
  auto jac = jacobi_solve(a, Span<MinPlusPlain>(b), Span<MinPlusPlain>(x0));
  CHECK(gs.status == IterationStatus::converged);
  CHECK(*gs.solution == Vector<MinPlusPlain>{0, 1});
  CHECK(gs.iterations <= jac.iterations);

  auto lower = mat(s, {{inf, inf, inf}, {2, inf, inf}, {7, 3, inf}});
  Vector<MinPlusPlain> c{0, 9, 9};
  auto sweep = gauss_seidel_solve(lower, Span<MinPlusPlain>(c));
  CHECK(sweep.iterations == 1);
  CHECK(*sweep.solution == forward_subst(lower, Span<MinPlusPlain>(c)));
}

TEST_CASE("contracting min-plus systems") {
  auto r = testing::rng(62);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 1 + t % 8;
    auto a = testing::contracting_min_plus(n, r);
    Vector<MinPlusPlain> b(n, inf);
    b[std::uniform_int_distribution<std::size_t>(0, n - 1)(r)] = 0;
    auto direct = solve_bellman(a, Span<MinPlusPlain>(b), Method::gauss_jordan);

    auto jac = jacobi_solve(a, Span<MinPlusPlain>(b));
    auto gs = gauss_seidel_solve(a, Span<MinPlusPlain>(b));
    REQUIRE(jac.status == IterationStatus::converged);
    REQUIRE(gs.status == IterationStatus::converged);
    CHECK(*jac.solution == direct);
    CHECK(*gs.solution == direct);
    CHECK(jac.iterations <= n);
    CHECK(gs.iterations <= n);
    CHECK(gs.iterations <= jac.iterations);

    // b = e_j over A^T gives the distances from node j.
    auto from = jacobi_solve(transpose(a), Span<MinPlusPlain>(b));
    std::size_t j = 0;
    while (b[j] != 0) ++j;
    CHECK(*from.solution == oracle::dijkstra(oracle::to_dense(a), j));
  }
}

TEST_CASE_TEMPLATE("iterates from zero increase and agree with direct methods", S, MinPlusPlain, MaxPlusPlain,
                   MaxTimesPlain, MaxMin, Boolean) {
  S s;
  auto r = testing::rng(63);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 1 + t % 6;
    auto a = random_matrix(s, n, n, r);
    auto b = random_vector(s, n, r);
    Vector<S> zero(n, s.zero());
    auto trace = jacobi_iterates(a, Span<S>(b), Span<S>(zero), n + 1);
    for (std::size_t k = 0; k + 1 < trace.size(); ++k)
      for (std::size_t i = 0; i < n; ++i) CHECK(s.leq(trace[k][i], trace[k + 1][i]));

    auto direct = solve_bellman(a, Span<S>(b), Method::gauss_jordan);
    CHECK(trace[n] == direct);
    for (auto report : {jacobi_solve(a, Span<S>(b)), gauss_seidel_solve(a, Span<S>(b))}) {
      if (report.status != IterationStatus::converged) continue;
      CHECK(*report.solution == direct);
    }
  }
}
