#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tilecount/numbers.hpp"

namespace tilecount {

/// Dense univariate polynomial over Q, lowest degree first.
///
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and degree -1. The variable label only affects printing;
/// arithmetic and equality ignore it.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs, std::string var = "t");

  static UniPoly constant(const Rational& c, std::string var = "t");
  static UniPoly monomial(const Rational& c, int degree, std::string var = "t");
  /// The polynomial with the given integer coefficients, lowest first.
  static UniPoly from_integers(const std::vector<long>& coeffs, std::string var = "t");

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of var^k; zero beyond the degree.
  Rational coeff(int k) const;
  /// Leading coefficient. Precondition: nonzero.
  const Rational& leading() const { return coeffs_.back(); }
  const std::string& var() const { return var_; }
  UniPoly with_var(std::string var) const;

  Rational operator()(const Rational& x) const;
  UniPoly derivative() const;
  /// Drops all terms of degree >= n.
  UniPoly truncated(int n) const;
  UniPoly monic() const;

  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  UniPoly& operator*=(const Rational& rhs);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend UniPoly operator-(UniPoly a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();

  std::vector<Rational> coeffs_;
  std::string var_ = "t";
};

UniPoly pow(const UniPoly& p, unsigned k);

/// Euclidean division: a = q*b + r with deg r < deg b.
/// Throws std::domain_error when b is zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Monic lcm; lcm with 0 is 0.
UniPoly lcm(const UniPoly& a, const UniPoly& b);

}  // namespace tilecount
