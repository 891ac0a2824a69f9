#include "tilecount/numbers.hpp"

#include <cctype>
#include <stdexcept>

namespace tilecount {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("division by zero");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

Integer parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("malformed integer: '" + s + "'");
  for (std::size_t k = i; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
      throw std::invalid_argument("malformed integer: '" + s + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return make_rational(num, den);
}

bool is_integral(const Rational& value) { return value.get_den() == 1; }

std::vector<Rational> to_rationals(std::span<const Integer> values) {
  std::vector<Rational> out;
  out.reserve(values.size());
  for (const auto& v : values) out.emplace_back(v);
  return out;
}

std::vector<Integer> to_integers(std::span<const Rational> values) {
  std::vector<Integer> out;
  out.reserve(values.size());
  for (const auto& v : values) {
    if (!is_integral(v)) throw std::domain_error("non-integral value " + v.get_str());
    out.push_back(v.get_num());
  }
  return out;
}

}  // namespace tilecount
