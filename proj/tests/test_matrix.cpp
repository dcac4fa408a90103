#include "support/helpers.hpp"

using namespace srpk;
using testing::inf;
using testing::mat;

namespace {

// Square matrices of a fixed order as a semiring of their own, so the scalar
// axiom checks apply to them unchanged.
template <Semiring S>
class MatrixSemiring {
 public:
  using value_type = Matrix<S>;
  static constexpr bool is_idempotent = S::is_idempotent;
  static constexpr bool is_complete = S::is_complete;

  MatrixSemiring(S s = S{}, std::size_t n = 3) : s_(std::move(s)), n_(n) {}

  const S& base() const { return s_; }
  std::size_t order() const { return n_; }

  Matrix<S> zero() const { return zero_matrix(s_, n_, n_); }
  Matrix<S> one() const { return identity(s_, n_); }
  Matrix<S> add(const Matrix<S>& a, const Matrix<S>& b) const { return mat_add(a, b); }
  Matrix<S> mul(const Matrix<S>& a, const Matrix<S>& b) const { return mat_mul(a, b); }
  Matrix<S> star(const Matrix<S>& a) const { return star_gauss_jordan(a); }
  bool leq(const Matrix<S>& a, const Matrix<S>& b) const { return mat_leq(a, b); }
  std::optional<Matrix<S>> try_inverse(const Matrix<S>&) const { return std::nullopt; }
  bool is_unbounded(const Matrix<S>&) const { return false; }
  bool near(const Matrix<S>& a, const Matrix<S>& b, double tol) const { return mat_near(a, b, tol); }
  Matrix<S> parse(std::string_view) const { raise(ErrorKind::parse_error, "not supported"); }
  std::string format(const Matrix<S>& a) const { return io::to_text(a); }
  std::string name() const { return "matrices over " + s_.name(); }

 private:
  S s_;
  std::size_t n_;
};

// Found by argument-dependent lookup from the generic test helpers.
template <Semiring S>
std::vector<Matrix<S>> extras(const MatrixSemiring<S>& m) {
  return {m.zero(), m.one()};
}

template <Semiring S>
Matrix<S> sample_element(const MatrixSemiring<S>& m, Rng& r, std::size_t) {
  return random_matrix(m.base(), m.order(), m.order(), r);
}

}  // namespace

TEST_CASE("entrywise sum") {
  MinPlusPlain s;
  CHECK(mat_add(mat(s, {{1, 2}, {3, 4}}), mat(s, {{4, 3}, {2, 1}})) == mat(s, {{1, 2}, {2, 1}}));
  auto a = mat(s, {{1, inf}, {0, 7}});
  CHECK(mat_add(a, zero_matrix(s, 2, 2)) == a);
  Boolean b;
  CHECK(mat_add(identity(b, 3), identity(b, 3)) == identity(b, 3));
  CHECK_THROWS_AS(mat_add(a, zero_matrix(s, 2, 3)), Error);
}

TEST_CASE("semiring product") {
  MinPlusPlain s;
  CHECK(mat_mul(mat(s, {{0, 1}, {inf, 0}}), mat(s, {{0}, {2}})) == mat(s, {{0}, {2}}));
  auto a = mat(s, {{3, 1}, {inf, 2}});
  CHECK(mat_mul(a, identity(s, 2)) == a);
  CHECK(mat_mul(identity(s, 2), a) == a);
  CHECK_THROWS_AS(mat_mul(a, zero_matrix(s, 3, 1)), Error);

  // Two-step walks on the path 1 -> 2 -> 3, counted by search.
  Boolean b;
  auto adj = mat(b, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  auto two = mat_mul(adj, adj);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      bool walk = false;
      for (std::size_t k = 0; k < 3; ++k) walk = walk || (adj(i, k) && adj(k, j));
      CHECK(static_cast<bool>(two(i, j)) == walk);
    }
  CHECK(two == mat(b, {{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}));
}

TEST_CASE("structure predicates") {
  MinPlusPlain s;
  auto tri = mat(s, {{5, 1, inf, inf}, {1, 5, 1, inf}, {inf, 1, 5, 1}, {inf, inf, 1, 5}});
  CHECK(bandwidths(tri) == Bandwidths{1, 1});
  CHECK(bandwidths(identity(s, 3)) == Bandwidths{0, 0});
  CHECK(bandwidths(mat(s, {{0, 0, 0}, {inf, 0, 0}, {inf, inf, 0}})) == Bandwidths{0, 2});

  auto toeplitz = mat(s, {{4, 2}, {7, 4}});
  CHECK(is_toeplitz(toeplitz));
  CHECK(is_persymmetric(toeplitz));
  CHECK_FALSE(is_persymmetric(mat(s, {{1, 2}, {3, 4}})));
  CHECK(is_symmetric(tri));
  CHECK(is_strictly_lower(mat(s, {{inf, inf}, {3, inf}})));
  CHECK_FALSE(is_strictly_lower(mat(s, {{0, inf}, {3, inf}})));
  CHECK(is_strictly_upper(mat(s, {{inf, 3}, {inf, inf}})));
}

TEST_CASE("transpose, powers and the exchange matrix") {
  auto r = testing::rng(21);
  MaxPlusPlain s;
  for (int t = 0; t < 50; ++t) {
    auto a = random_matrix(s, 3, 4, r);
    CHECK(transpose(transpose(a)) == a);
  }
  for (std::size_t n = 1; n <= 6; ++n) CHECK(mat_mul(exchange(s, n), exchange(s, n)) == identity(s, n));

  auto a = random_matrix(s, 4, 4, r);
  CHECK(mat_power(a, 0) == identity(s, 4));
  CHECK(mat_power(a, 3) == mat_mul(a, mat_mul(a, a)));
}

// E (AB)^T E = BA for persymmetric A and B, so a product of two of them is
// persymmetric only when they commute. Powers of one persymmetric matrix
// are, and products of symmetric Toeplitz matrices are centrosymmetric.
TEST_CASE("persymmetry under products") {
  auto r = testing::rng(22);
  MaxMin s;
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 1 + t % 6;
    auto ta = toeplitz_matrix(s, SymmetricToeplitz<MaxMin>{sample_element(s, r, n), random_vector(s, n, r)}, n);
    auto tb = toeplitz_matrix(s, SymmetricToeplitz<MaxMin>{sample_element(s, r, n), random_vector(s, n, r)}, n);
    CHECK(is_persymmetric(ta));
    for (std::size_t k = 0; k <= 3; ++k) CHECK(is_persymmetric(mat_power(ta, k)));
    auto e = exchange(s, n);
    auto ab = mat_mul(ta, tb);
    CHECK(mat_mul(e, mat_mul(ab, e)) == ab);
    CHECK(mat_mul(e, mat_mul(transpose(ab), e)) == mat_mul(tb, ta));
  }
}

TEST_CASE("order is compatible with the operations") {
  auto r = testing::rng(23);
  MinPlusPlain s;
  for (int t = 0; t < 100; ++t) {
    auto a = random_matrix(s, 3, 3, r);
    auto b = random_matrix(s, 3, 3, r);
    auto a2 = mat_add(a, random_matrix(s, 3, 3, r));
    auto b2 = mat_add(b, random_matrix(s, 3, 3, r));
    REQUIRE(mat_leq(a, a2));
    CHECK(mat_leq(mat_mul(a, b), mat_mul(a2, b2)));
    CHECK(mat_leq(mat_add(a, b), mat_add(a2, b2)));
  }
}

TEST_CASE_TEMPLATE("square matrices form a semiring", S, MinPlusPlain, MaxPlusPlain, MaxMin, Boolean) {
  auto r = testing::rng(24);
  testing::check_axioms(MatrixSemiring<S>{}, r, 200);
}

TEST_CASE("real square matrices form a semiring up to rounding") {
  auto r = testing::rng(25);
  testing::check_axioms(MatrixSemiring<RealNonneg>{}, r, 200, 1e-9);
}

TEST_CASE("matrix text format") {
  MinPlusPlain s;
  auto a = io::read_matrix(s, std::string("2 3\n0 1 inf\n\n2 3.5 4\n"));
  CHECK(a == mat(s, {{0, 1, inf}, {2, 3.5, 4}}));
  CHECK(io::to_text(a) == "2 3\n0 1 inf\n2 3.5 4\n");
  CHECK(io::read_matrix(s, io::to_text(a)) == a);

  CHECK(io::read_vector(s, std::string("1 3\n1 2 3\n")) == Vector<MinPlusPlain>{1, 2, 3});
  CHECK(io::read_vector(s, std::string("3 1\n1\n2\n3\n")) == Vector<MinPlusPlain>{1, 2, 3});

  for (const char* bad : {"", "2 2\n1 2\n3\n", "1 1\n1\n2\n", "2\n1 2\n", "1 1\nx\n", "1 1\n-inf\n"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(io::read_matrix(s, std::string(bad)), Error);
  }

  auto iv = interval_semiring(MinPlusPlain{});
  auto b = io::read_matrix(iv, std::string("1 2\ninf..2 3\n"));
  CHECK(b(0, 0) == Interval<double>{inf, 2});
  CHECK(io::to_text(b) == "1 2\ninf..2 3..3\n");
}
