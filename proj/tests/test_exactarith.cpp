#include <random>

#include "doctest.h"
#include "paper_data.hpp"
#include "random_region.hpp"
#include "tilecount/linsolve.hpp"
#include "tilecount/matrix.hpp"
#include "tilecount/multipoly.hpp"
#include "tilecount/ratfunc.hpp"
#include "tilecount/transfer.hpp"

using namespace tilecount;

namespace {

UniPoly P(const std::vector<long>& c) { return UniPoly::from_integers(c); }

std::vector<Rational> R(const std::vector<long>& xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

Rational random_rational(std::mt19937_64& rng) {
  long den = testgen::small_int(rng, 1, 9);
  return make_rational(testgen::small_int(rng, -20, 20), den);
}

}  // namespace

TEST_CASE("rationals are kept in lowest terms") {
  Rational r = make_rational(6, -4);
  CHECK(r.get_num() == -3);
  CHECK(r.get_den() == 2);
  CHECK(to_string(make_rational(0, 7)) == "0");
  CHECK(to_string(Rational(5)) == "5");
  CHECK(parse_rational("-10/4") == make_rational(-5, 2));
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(parse_rational("1/x"), std::invalid_argument);
  CHECK(Integer("104073336269956") * 1000000 == Integer("104073336269956000000"));
}

TEST_CASE("field axioms on random rationals") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == 0);
    if (a != 0) CHECK(a * (1 / a) == 1);
  }
}

TEST_CASE("univariate polynomial basics") {
  const UniPoly a = P({-1, 0, 1});
  const UniPoly b = P({-1, 1});
  auto [q, r] = divmod(a, b);
  CHECK(q == P({1, 1}));
  CHECK(r.is_zero());
  CHECK(gcd(P({-1, 0, 1}), P({1, 2, 1})) == P({1, 1}));
  CHECK(P({0, 0, 0}).degree() == -1);
  CHECK_THROWS_AS(divmod(a, UniPoly()), std::domain_error);
  CHECK(P({1, 2, 3}).derivative() == P({2, 6}));
  CHECK(pow(P({1, 1}), 3) == P({1, 3, 3, 1}));
}

TEST_CASE("multivariate polynomial basics") {
  const MultiPoly h = MultiPoly::variable(0, 2), v = MultiPoly::variable(1, 2);
  const MultiPoly p = h * h + v * v;
  CHECK(p.evaluate_at_ones() == 2);
  CHECK(p.term_count() == 2);
  CHECK(p.restrict_to(0) == P({1, 0, 1}));
  CHECK(p.swapped(0, 1) == p);
  CHECK((p - p).is_zero());
  CHECK(pow(h + v, 2) == h * h + v * v + h * v * Rational(2));
}

TEST_CASE("rf_normalize") {
  auto a = rf_normalize(P({0, 2}), P({2}));
  CHECK(a.numerator() == P({0, 1}));
  CHECK(a.denominator() == P({1}));
  auto b = rf_normalize(P({-1, 0, 1}), P({-1, 1}));
  CHECK(b.numerator() == P({1, 1}));
  CHECK(b.denominator() == P({1}));
  CHECK(rf_normalize(P({1}), P({1, -1})).denominator().leading() > 0);

  auto f = rf_normalize(paper::frame1331_num(), paper::frame1331_den());
  CHECK(rf_normalize(f.numerator(), f.denominator()) == f);

  try {
    rf_normalize(P({1}), UniPoly());
    FAIL("expected an error");
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()) == "division by zero polynomial");
  }
}

TEST_CASE("rf_series") {
  CHECK(rf_series(rf_normalize(P({1}), P({1, -1})), 4) == R({1, 1, 1, 1, 1}));
  CHECK(rf_series(rf_normalize(P({0, 1}), P({1, -1, -1})), 6) == R({0, 1, 1, 2, 3, 5, 8}));
  CHECK(series_quotient(paper::b2_num(), paper::b2_den(), 4) == R({1, 2, 6, 15, 40}));
  try {
    rf_series(rf_normalize(P({1}), P({0, 1})), 3);
    FAIL("expected an error");
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()) == "no power series at t=0");
  }
}

TEST_CASE("rf_series agrees with the recurrence implied by the denominator") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<long> pc, qc;
    const int dp = static_cast<int>(testgen::small_int(rng, 0, 5));
    const int dq = static_cast<int>(testgen::small_int(rng, 1, 5));
    for (int i = 0; i <= dp; ++i) pc.push_back(testgen::small_int(rng, -5, 5));
    qc.push_back(testgen::small_int(rng, 1, 3) * (testgen::small_int(rng, 0, 1) ? 1 : -1));
    for (int i = 1; i <= dq; ++i) qc.push_back(testgen::small_int(rng, -5, 5));
    const UniPoly p = P(pc), q = P(qc);
    const auto s = series_quotient(p, q, 50);
    // q0 s_n = p_n - sum_{k>=1} q_k s_{n-k}
    for (int n = 0; n <= 50; ++n) {
      Rational rhs = p.coeff(n);
      for (int k = 1; k <= n && k <= q.degree(); ++k) rhs -= q.coeff(k) * s[static_cast<std::size_t>(n - k)];
      REQUIRE(q.coeff(0) * s[static_cast<std::size_t>(n)] == rhs);
    }
  }
}

TEST_CASE("solve_linear_exact") {
  RatMatrix id = RatMatrix::identity(3);
  auto x = solve_linear_exact(id, R({4, 5, 6}));
  REQUIRE(x);
  CHECK(*x == R({4, 5, 6}));

  // Order-2 Hankel system from 0,1,1,2,3,5: a(n) = c1 a(n-1) + c2 a(n-2), n = 2..5.
  const auto f = R({0, 1, 1, 2, 3, 5});
  RatMatrix h(4, 2);
  std::vector<Rational> rhs;
  for (int n = 2; n <= 5; ++n) {
    h(static_cast<std::size_t>(n - 2), 0) = f[static_cast<std::size_t>(n - 1)];
    h(static_cast<std::size_t>(n - 2), 1) = f[static_cast<std::size_t>(n - 2)];
    rhs.push_back(f[static_cast<std::size_t>(n)]);
  }
  auto c = solve_linear_exact(h, rhs);
  REQUIRE(c);
  CHECK(*c == R({1, 1}));

  RatMatrix zero(1, 1);
  CHECK_FALSE(solve_linear_exact(zero, R({1})));
}

TEST_CASE("mat_pow") {
  RatMatrix m(3, 3);
  m(0, 1) = 2;
  m(2, 0) = make_rational(1, 3);
  CHECK(mat_pow(m, 0) == RatMatrix::identity(3));

  auto tm = build_tm(2, TilingMode::Dimer);
  const std::size_t full = ColumnState::full(2).index();
  std::vector<long> got;
  for (unsigned n = 0; n <= 5; ++n) got.push_back(mat_pow(tm->counts, n)(full, full).get_si());
  CHECK(got == std::vector<long>{1, 1, 2, 3, 5, 8});

  IntMatrix fib(2, 2);
  fib(0, 0) = 1;
  fib(0, 1) = 1;
  fib(1, 0) = 1;
  CHECK(mat_pow(fib, 10)(0, 0) == 89);
}

TEST_CASE("mat_pow is a monoid homomorphism on random matrices") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = static_cast<std::size_t>(testgen::small_int(rng, 1, 4));
    IntMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) m(i, j) = testgen::small_int(rng, -3, 3);
    }
    const unsigned j = static_cast<unsigned>(testgen::small_int(rng, 0, 8));
    const unsigned k = static_cast<unsigned>(testgen::small_int(rng, 0, 8));
    CHECK(mat_pow(m, j + k) == mat_mul(mat_pow(m, j), mat_pow(m, k)));
  }
}

TEST_CASE("parallel and serial products agree") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t d = static_cast<std::size_t>(testgen::small_int(rng, 1, 40));
    IntMatrix a(d, d), b(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        a(i, j) = testgen::small_int(rng, -9, 9);
        b(i, j) = testgen::small_int(rng, -9, 9);
      }
    }
    CHECK(mat_mul(a, b) == mat_mul_serial(a, b));
    std::vector<Integer> v(d);
    for (auto& x : v) x = testgen::small_int(rng, -9, 9);
    CHECK(vec_mat(v, a) == vec_mat_serial(v, a));
  }
  auto tm = build_tm(6, TilingMode::MonomerDimer, true);
  CHECK(mat_mul(tm->weights, tm->weights) == mat_mul_serial(tm->weights, tm->weights));
}
