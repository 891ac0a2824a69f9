#pragma once

// Arbitrary-precision scalars. Counting values overflow 64 bits quickly, so
// everything downstream is exact.

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tilecount {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
/// Throws std::domain_error when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// "p" for integral values, "p/q" otherwise.
std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

/// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
Integer parse_integer(std::string_view text);
Rational parse_rational(std::string_view text);

bool is_integral(const Rational& value);

std::vector<Rational> to_rationals(std::span<const Integer> values);

/// Throws std::domain_error if any value is non-integral.
std::vector<Integer> to_integers(std::span<const Rational> values);

}  // namespace tilecount
