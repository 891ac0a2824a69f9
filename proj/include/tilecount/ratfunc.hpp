#pragma once

#include <vector>

#include "tilecount/unipoly.hpp"

namespace tilecount {

/// A reduced quotient of univariate polynomials.
///
/// Canonical form: gcd(num, den) = 1, both scaled jointly to integer
/// coefficients with content 1, and the denominator's leading coefficient
/// is positive. Two canonical values are equal iff their fields are equal.
class RationalFunction {
 public:
  RationalFunction() : den_(UniPoly::constant(1)) {}

  const UniPoly& numerator() const { return num_; }
  const UniPoly& denominator() const { return den_; }
  const std::string& var() const { return den_.var(); }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  friend RationalFunction rf_normalize(const UniPoly& num, const UniPoly& den);
  UniPoly num_;
  UniPoly den_;
};

/// Throws std::domain_error("division by zero polynomial") when den is zero.
RationalFunction rf_normalize(const UniPoly& num, const UniPoly& den);

/// Coefficients of t^0..t^n of the power series, by exact long division.
/// Throws std::domain_error("no power series at t=0") when den(0) == 0.
std::vector<Rational> rf_series(const RationalFunction& rf, int n);
std::vector<Rational> series_quotient(const UniPoly& num, const UniPoly& den, int n);

/// p1 * q2 == p2 * q1; works on unreduced pairs as well.
bool same_rational_function(const UniPoly& p1, const UniPoly& q1, const UniPoly& p2, const UniPoly& q2);
bool same_rational_function(const RationalFunction& a, const RationalFunction& b);

}  // namespace tilecount
