#include "tilecount/unipoly.hpp"

#include <stdexcept>

namespace tilecount {

UniPoly::UniPoly(std::vector<Rational> coeffs, std::string var)
    : coeffs_(std::move(coeffs)), var_(std::move(var)) {
  trim();
}

UniPoly UniPoly::constant(const Rational& c, std::string var) {
  return UniPoly(std::vector<Rational>{c}, std::move(var));
}

UniPoly UniPoly::monomial(const Rational& c, int degree, std::string var) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return UniPoly(std::move(coeffs), std::move(var));
}

UniPoly UniPoly::from_integers(const std::vector<long>& coeffs, std::string var) {
  std::vector<Rational> out;
  out.reserve(coeffs.size());
  for (long c : coeffs) out.emplace_back(c);
  return UniPoly(std::move(out), std::move(var));
}

Rational UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

UniPoly UniPoly::with_var(std::string var) const {
  UniPoly p = *this;
  p.var_ = std::move(var);
  return p;
}

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly({}, var_);
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return UniPoly(std::move(d), var_);
}

UniPoly UniPoly::truncated(int n) const {
  if (n <= 0) return UniPoly({}, var_);
  std::size_t keep = std::min<std::size_t>(coeffs_.size(), static_cast<std::size_t>(n));
  return UniPoly(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(keep)), var_);
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading();
  return *this * inv;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& rhs) {
  if (rhs == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly({}, a.var_);
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out), a.var_);
}

UniPoly operator-(UniPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly pow(const UniPoly& p, unsigned k) {
  UniPoly result = UniPoly::constant(1, p.var());
  UniPoly base = p;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly({}, a.var()), a};
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db) + 1);
  const Rational inv_lead = 1 / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Rational& top = rem[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    Rational q = top * inv_lead;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
    }
    quo[static_cast<std::size_t>(k - db)] = std::move(q);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UniPoly(std::move(quo), a.var()), UniPoly(std::move(rem), a.var())};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a.monic();
  UniPoly y = b.monic();
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

UniPoly lcm(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly({}, a.var());
  return divmod(a * b, gcd(a, b)).first.monic();
}

}  // namespace tilecount
