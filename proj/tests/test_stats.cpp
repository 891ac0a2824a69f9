#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "random_region.hpp"
#include "tilecount/skinny.hpp"
#include "tilecount/stats.hpp"

using namespace tilecount;

namespace {

struct Exhaustive {
  Rational mean;
  Rational variance;
  Rational mu3;
  Rational mu4;
};

// Moments of an explicit list of outcomes, each tiling equally likely.
Exhaustive exhaustive(const std::vector<int>& xs) {
  Exhaustive e;
  const Rational n(static_cast<long>(xs.size()));
  for (int x : xs) e.mean += x;
  e.mean /= n;
  for (int x : xs) {
    const Rational d = x - e.mean;
    e.variance += d * d;
    e.mu3 += d * d * d;
    e.mu4 += d * d * d * d;
  }
  e.variance /= n;
  e.mu3 /= n;
  e.mu4 /= n;
  return e;
}

MultiPoly hv(long c, int h, int v) {
  MultiPoly::Exponents e{};
  e[0] = static_cast<std::uint16_t>(h);
  e[1] = static_cast<std::uint16_t>(v);
  return MultiPoly::monomial(c, e, 2);
}

}  // namespace

TEST_CASE("moment examples") {
  const std::vector<MultiPoly> square{hv(1, 2, 0) + hv(1, 0, 2)};
  auto r = weighted_moments(square, "h");
  REQUIRE(r.records.size() == 1);
  CHECK(r.records[0].count == 2);
  CHECK(r.records[0].mean == 1);
  CHECK(r.records[0].variance == 1);
  CHECK(*r.records[0].mu3 == 0);
  CHECK(*r.records[0].kurtosis == 1);

  const std::vector<MultiPoly> domino{hv(1, 1, 0)};
  auto d = weighted_moments(domino, "h");
  CHECK(d.records[0].mean == 1);
  CHECK(d.records[0].variance == 0);
  CHECK_FALSE(d.records[0].kurtosis);
  CHECK_FALSE(d.records[0].skewness_squared);

  auto only2 = weighted_moments(square, "v", 2);
  CHECK_FALSE(only2.records[0].mu3);
}

TEST_CASE("moment errors") {
  const std::vector<MultiPoly> polys{hv(1, 1, 0), MultiPoly(2)};
  try {
    weighted_moments(polys, "h");
    FAIL("expected an error");
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("n=1") != std::string::npos);
  }
  CHECK_THROWS_AS(weighted_moments(polys, "q"), std::invalid_argument);
  CHECK_THROWS_AS(weighted_moments(std::vector<MultiPoly>{hv(1, 1, 0)}, "m"), std::invalid_argument);
  CHECK_THROWS_AS(weighted_moments(polys, "h", 5), std::invalid_argument);
}

TEST_CASE("frame moments match exhaustive statistics") {
  for (auto mode : {TilingMode::Dimer, TilingMode::MonomerDimer}) {
    const int N = mode == TilingMode::Dimer ? 3 : 1;
    const auto polys = frame_seq_weighted(2, 2, 2, 2, N, mode);
    for (const char* var : {"h", "v"}) {
      const auto report = weighted_moments(polys, var);
      for (int n = 0; n <= N; ++n) {
        const auto xs = oracle::tile_counts(build_frame({2, 2, 2, 2, n, n}), mode, std::string(var) == "h" ? 0 : 1);
        const Exhaustive e = exhaustive(xs);
        const auto& rec = report.records[static_cast<std::size_t>(n)];
        CHECK(rec.count == static_cast<long>(xs.size()));
        CHECK(rec.mean == e.mean);
        CHECK(rec.variance == e.variance);
        CHECK(*rec.mu3 == e.mu3);
        CHECK(*rec.mu4 == e.mu4);
      }
    }
  }
}

TEST_CASE("moments of random regions match exhaustive statistics") {
  std::mt19937_64 rng(51);
  int done = 0;
  while (done < 100) {
    const Region r = testgen::random_region(rng, 20);
    const auto mode = done % 2 ? TilingMode::MonomerDimer : TilingMode::Dimer;
    if (mode == TilingMode::MonomerDimer && r.size() > 14) continue;
    const MultiPoly w = count_weighted(r, mode);
    if (w.is_zero()) continue;
    ++done;
    const int var = static_cast<int>(testgen::small_int(rng, 0, weight_arity(mode) - 1));
    const char* names[] = {"h", "v", "m"};
    const auto rec = weighted_moments(std::vector<MultiPoly>{w}, names[var]).records[0];
    const Exhaustive e = exhaustive(oracle::tile_counts(r, mode, var));
    CHECK(rec.mean == e.mean);
    CHECK(rec.variance == e.variance);
    CHECK(*rec.mu3 == e.mu3);
    CHECK(*rec.mu4 == e.mu4);
    // Scaling the enumerator changes nothing but the count.
    const auto scaled = weighted_moments(std::vector<MultiPoly>{w * Rational(7, 3)}, names[var]).records[0];
    CHECK(scaled.mean == rec.mean);
    CHECK(scaled.variance == rec.variance);
    CHECK(scaled.mu4 == rec.mu4);
    CHECK(scaled.kurtosis == rec.kurtosis);
  }
}

TEST_CASE("every dimer tiling covers the whole frame") {
  const auto polys = frame_seq_weighted(1, 3, 3, 1, 6, TilingMode::Dimer);
  const auto h = weighted_moments(polys, "h", 2), v = weighted_moments(polys, "v", 2);
  for (int n = 0; n <= 6; ++n) {
    const auto cells = static_cast<long>(build_frame({1, 3, 3, 1, n, n}).size());
    CHECK(2 * (h.records[static_cast<std::size_t>(n)].mean + v.records[static_cast<std::size_t>(n)].mean) == cells);
  }
}

TEST_CASE("to_decimal") {
  CHECK(to_decimal(Rational(1, 3), 4) == "0.3333");
  CHECK(to_decimal(Rational(2, 3), 2) == "0.67");
  CHECK(to_decimal(Rational(-5, 2), 0) == "-3");
  CHECK(to_decimal(Rational(1), 3) == "1.000");
  CHECK(to_decimal(Rational(1, 200), 2) == "0.01");
}

TEST_CASE("growth_rate") {
  const CFinite fib{{0, 1}, {1, 1}};
  const auto g = growth_rate(fib, {});
  CHECK(g.decimal == "1.618034");
  CHECK(g.error_bound < Rational(1, 100000));
  // The golden ratio lies within the stated bound.
  const Rational phi_lo(16180339887, 10000000000), phi_hi(16180339888, 10000000000);
  CHECK(g.ratio - g.error_bound < phi_hi);
  CHECK(g.ratio + g.error_bound > phi_lo);

  const auto c = growth_rate(CFinite{{7}, {1}}, std::vector<Rational>{7, 7, 7});
  CHECK(c.ratio == 1);
  CHECK(c.error_bound == 0);
  CHECK(c.decimal == "1.000000");

  // Knuth frames grow like the square of the growth of 2F^2 + (-1)^n.
  const auto knuth = guess_cfinite(to_rationals(frame_seq(2, 2, 2, 2, 30, TilingMode::Dimer)));
  REQUIRE(knuth);
  std::vector<Rational> formula;
  Rational f0 = 1, f1 = 1;  // F(1), F(2)
  for (int n = 0; n <= 45; ++n) {
    const Rational f2 = f0 + f1;  // F(n+3)
    const Rational fn2 = f1;      // F(n+2)
    formula.push_back(2 * fn2 * fn2 + (n % 2 ? -1 : 1));
    f0 = f1;
    f1 = f2;
  }
  const Rational inner_ratio = formula[40] / formula[39];
  const auto kg = growth_rate(*knuth, {}, {40, 8});
  CHECK(abs(kg.ratio - inner_ratio * inner_ratio) < Rational(1, 1000000));

  CHECK_THROWS_AS(growth_rate(CFinite{{1, -1}, {1, 0}}, {}), std::domain_error);
  CHECK_THROWS_AS(growth_rate(fib, std::vector<Rational>{0, 2}), std::invalid_argument);
}
