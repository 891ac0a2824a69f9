#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tilecount/multipoly.hpp"
#include "tilecount/ratfunc.hpp"

namespace tilecount {

/// A C-finite sequence coded as [[d1..dL],[c1..cL]]:
/// a(n) = c1 a(n-1) + ... + cL a(n-L) for n >= L, with a(k) = d(k+1).
/// Order 0 is the zero sequence.
struct CFinite {
  std::vector<Rational> initial;
  std::vector<Rational> coeffs;

  std::size_t order() const { return coeffs.size(); }
  /// Throws std::invalid_argument if the lengths differ.
  void validate() const;
  friend bool operator==(const CFinite&, const CFinite&) = default;
};

struct GuessConfig {
  int max_order = 16;
  /// Terms beyond 2L that must also satisfy a guessed order-L recurrence.
  int margin = 5;
  void validate() const;
};

enum class VerifyStatus { ProvedUnderBound, Inconclusive, Refuted };

/// Minimal-order recurrence reproducing every supplied term, trying
/// L = 1, 2, ... while 2L + margin terms are available. The all-zero
/// sequence yields order 0. nullopt if nothing up to max_order fits.
std::optional<CFinite> guess_cfinite(std::span<const Rational> seq, const GuessConfig& config = {});

Rational cfinite_nth(const CFinite& cf, std::size_t n);
/// a(0)..a(count-1).
std::vector<Rational> cfinite_terms(const CFinite& cf, std::size_t count);

/// Decided on the first order(a) + order(b) terms.
bool cfinite_equal(const CFinite& a, const CFinite& b);

/// Termwise sum and product, minimised. The sum is generated from the
/// direct sum of the companion matrices, the product from their Kronecker
/// product; the order bounds LA+LB and LA*LB certify the minimised result.
CFinite cfinite_add(const CFinite& a, const CFinite& b);
CFinite cfinite_mul(const CFinite& a, const CFinite& b);
CFinite cfinite_scale(const CFinite& a, const Rational& c);
/// n -> a(n + k).
CFinite cfinite_shift(const CFinite& a, std::size_t k);

/// sum a(n) t^n = N(t) / (1 - c1 t - ... - cL t^L), canonicalised.
RationalFunction to_rational_gf(const CFinite& cf, const std::string& var = "t");

/// guess_cfinite, then to_rational_gf, then a re-expansion check against
/// the whole input.
std::optional<RationalFunction> guess_rational_gf(std::span<const Rational> seq, const GuessConfig& config = {},
                                                  const std::string& var = "t");

/// ProvedUnderBound when seq (assumed C-finite of order <= bound) agrees
/// with cf on at least order(cf) + bound terms; Refuted on any mismatch;
/// otherwise Inconclusive.
VerifyStatus verify_cfinite_with_bound(const CFinite& cf, std::span<const Rational> seq, std::size_t bound);

/// sum D(m,n) x^m y^n = P(x,y) / (Q1(x) Q2(y)). P has arity 2 (x = var 0,
/// y = var 1); Q1 and Q2 have constant term 1.
struct BivariateGf {
  MultiPoly numerator;
  UniPoly den_x;
  UniPoly den_y;
};

/// Rows give Q2 (lcm of the row denominators), columns give Q1, and P is
/// the truncated product D * Q1 * Q2, which must vanish on at least
/// `margin` trailing rows and columns. nullopt on any failure.
std::optional<BivariateGf> guess_bivariate_gf(const std::vector<std::vector<Rational>>& table,
                                              const GuessConfig& config = {});

/// Series coefficients D(m, n), 0 <= m <= M, 0 <= n <= N.
std::vector<std::vector<Rational>> expand_bivariate(const BivariateGf& gf, int M, int N);

/// P1 * Q2 == P2 * Q1 where Q is the full product denominator.
bool same_bivariate(const MultiPoly& p1, const MultiPoly& q1, const MultiPoly& p2, const MultiPoly& q2);
/// den_x(x) * den_y(y) as a bivariate polynomial.
MultiPoly bivariate_denominator(const BivariateGf& gf);

enum class SquareClass { Square, TwiceSquare, Neither };

/// Throws std::domain_error for negative input. 0 is a Square.
SquareClass ciucu_classify(const Integer& value);

}  // namespace tilecount
