#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "tilecount/numbers.hpp"
#include "tilecount/unipoly.hpp"

namespace tilecount {

/// Sparse polynomial in a small fixed number of variables (at most 4).
///
/// Exponent vectors are packed 16 bits per variable into a 64-bit key with
/// variable 0 in the high bits, so map order is lexicographic. Zero
/// coefficients are never stored. Arity is carried for printing and
/// evaluation; a constant of arity 0 combines with anything.
class MultiPoly {
 public:
  static constexpr int kMaxVars = 4;
  using Exponents = std::array<std::uint16_t, kMaxVars>;

  MultiPoly() = default;
  explicit MultiPoly(int arity);

  static MultiPoly constant(const Rational& c, int arity = 0);
  /// The single variable `index`.
  static MultiPoly variable(int index, int arity);
  static MultiPoly monomial(const Rational& c, const Exponents& exps, int arity);

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  /// Terms in ascending packed-key order.
  const std::map<std::uint64_t, Rational>& terms() const { return terms_; }

  static std::uint64_t pack(const Exponents& exps);
  static Exponents unpack(std::uint64_t key);

  Rational coeff(const Exponents& exps) const;
  int degree_in(int var) const;
  int total_degree() const;

  /// Values for the first `arity()` variables.
  Rational evaluate(std::span<const Rational> values) const;
  Rational evaluate_at_ones() const;
  /// Univariate polynomial in `var` with every other variable set to 1.
  UniPoly restrict_to(int var, std::string label = "t") const;
  /// Exchanges variables i and j.
  MultiPoly swapped(int i, int j) const;

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Rational& rhs);
  /// this += a * b without materialising the product.
  void add_product(const MultiPoly& a, const MultiPoly& b);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator-(MultiPoly a);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(std::uint64_t key, const Rational& c);

  std::map<std::uint64_t, Rational> terms_;
  int arity_ = 0;
};

MultiPoly pow(const MultiPoly& p, unsigned k);

}  // namespace tilecount
