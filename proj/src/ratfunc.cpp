#include "tilecount/ratfunc.hpp"

#include <stdexcept>

namespace tilecount {

namespace {

// Multiplier making both polynomials integral and jointly primitive.
Rational primitive_scale(const UniPoly& a, const UniPoly& b) {
  Integer den_lcm = 1;
  for (const auto* p : {&a, &b}) {
    for (const auto& c : p->coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Integer content = 0;
  for (const auto* p : {&a, &b}) {
    for (const auto& c : p->coeffs()) {
      Integer scaled = c.get_num() * (den_lcm / c.get_den());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
    }
  }
  return make_rational(den_lcm, content);
}

}  // namespace

RationalFunction rf_normalize(const UniPoly& num, const UniPoly& den) {
  if (den.is_zero()) throw std::domain_error("division by zero polynomial");
  const std::string var = den.var();
  UniPoly p = num;
  UniPoly q = den;
  UniPoly g = gcd(p, q);
  if (g.degree() > 0) {
    p = divmod(p, g).first;
    q = divmod(q, g).first;
  }
  Rational s = primitive_scale(p, q);
  if (sgn(q.leading()) < 0) s = -s;
  RationalFunction rf;
  rf.num_ = (p * s).with_var(var);
  rf.den_ = (q * s).with_var(var);
  return rf;
}

std::vector<Rational> series_quotient(const UniPoly& num, const UniPoly& den, int n) {
  if (den.coeff(0) == 0) throw std::domain_error("no power series at t=0");
  if (n < 0) return {};
  const Rational inv0 = 1 / den.coeff(0);
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Rational acc = num.coeff(k);
    const int top = std::min(k, den.degree());
    for (int j = 1; j <= top; ++j) acc -= den.coeffs()[static_cast<std::size_t>(j)] * out[static_cast<std::size_t>(k - j)];
    out[static_cast<std::size_t>(k)] = acc * inv0;
  }
  return out;
}

std::vector<Rational> rf_series(const RationalFunction& rf, int n) {
  return series_quotient(rf.numerator(), rf.denominator(), n);
}

bool same_rational_function(const UniPoly& p1, const UniPoly& q1, const UniPoly& p2, const UniPoly& q2) {
  if (q1.is_zero() || q2.is_zero()) throw std::domain_error("division by zero polynomial");
  return p1 * q2 == p2 * q1;
}

bool same_rational_function(const RationalFunction& a, const RationalFunction& b) {
  return same_rational_function(a.numerator(), a.denominator(), b.numerator(), b.denominator());
}

}  // namespace tilecount
