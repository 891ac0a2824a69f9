#include "tilecount/multipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace tilecount {

namespace {

constexpr int shift_of(int var) { return 48 - 16 * var; }

}  // namespace

MultiPoly::MultiPoly(int arity) : arity_(arity) {
  if (arity < 0 || arity > kMaxVars) throw std::invalid_argument("MultiPoly arity out of range");
}

MultiPoly MultiPoly::constant(const Rational& c, int arity) {
  MultiPoly p(arity);
  p.add_term(0, c);
  return p;
}

MultiPoly MultiPoly::variable(int index, int arity) {
  if (index < 0 || index >= arity) throw std::invalid_argument("variable index out of range");
  Exponents e{};
  e[static_cast<std::size_t>(index)] = 1;
  return monomial(1, e, arity);
}

MultiPoly MultiPoly::monomial(const Rational& c, const Exponents& exps, int arity) {
  MultiPoly p(arity);
  p.add_term(pack(exps), c);
  return p;
}

std::uint64_t MultiPoly::pack(const Exponents& exps) {
  std::uint64_t key = 0;
  for (int v = 0; v < kMaxVars; ++v) {
    key |= static_cast<std::uint64_t>(exps[static_cast<std::size_t>(v)]) << shift_of(v);
  }
  return key;
}

MultiPoly::Exponents MultiPoly::unpack(std::uint64_t key) {
  Exponents e{};
  for (int v = 0; v < kMaxVars; ++v) {
    e[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>((key >> shift_of(v)) & 0xFFFFU);
  }
  return e;
}

Rational MultiPoly::coeff(const Exponents& exps) const {
  auto it = terms_.find(pack(exps));
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::degree_in(int var) const {
  int d = -1;
  for (const auto& [key, c] : terms_) d = std::max(d, static_cast<int>(unpack(key)[static_cast<std::size_t>(var)]));
  return d;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [key, c] : terms_) {
    auto e = unpack(key);
    int s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

Rational MultiPoly::evaluate(std::span<const Rational> values) const {
  Rational total = 0;
  for (const auto& [key, c] : terms_) {
    auto e = unpack(key);
    Rational term = c;
    for (int v = 0; v < kMaxVars; ++v) {
      unsigned k = e[static_cast<std::size_t>(v)];
      if (k == 0) continue;
      if (static_cast<std::size_t>(v) >= values.size()) {
        throw std::invalid_argument("evaluate: missing value for variable");
      }
      Rational power;
      mpz_pow_ui(power.get_num_mpz_t(), values[static_cast<std::size_t>(v)].get_num_mpz_t(), k);
      mpz_pow_ui(power.get_den_mpz_t(), values[static_cast<std::size_t>(v)].get_den_mpz_t(), k);
      power.canonicalize();
      term *= power;
    }
    total += term;
  }
  return total;
}

Rational MultiPoly::evaluate_at_ones() const {
  Rational total = 0;
  for (const auto& [key, c] : terms_) total += c;
  return total;
}

UniPoly MultiPoly::restrict_to(int var, std::string label) const {
  std::vector<Rational> coeffs(static_cast<std::size_t>(std::max(degree_in(var), 0)) + 1);
  for (const auto& [key, c] : terms_) coeffs[unpack(key)[static_cast<std::size_t>(var)]] += c;
  return UniPoly(std::move(coeffs), std::move(label));
}

MultiPoly MultiPoly::swapped(int i, int j) const {
  MultiPoly out(arity_);
  for (const auto& [key, c] : terms_) {
    auto e = unpack(key);
    std::swap(e[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(j)]);
    out.add_term(pack(e), c);
  }
  return out;
}

void MultiPoly::add_term(std::uint64_t key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  arity_ = std::max(arity_, rhs.arity_);
  for (const auto& [key, c] : rhs.terms_) add_term(key, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  arity_ = std::max(arity_, rhs.arity_);
  for (const auto& [key, c] : rhs.terms_) add_term(key, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& rhs) {
  if (rhs == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= rhs;
  return *this;
}

void MultiPoly::add_product(const MultiPoly& a, const MultiPoly& b) {
  arity_ = std::max({arity_, a.arity_, b.arity_});
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) add_term(ka + kb, ca * cb);
  }
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out(std::max(a.arity_, b.arity_));
  out.add_product(a, b);
  return out;
}

MultiPoly operator-(MultiPoly a) {
  for (auto& [key, c] : a.terms_) c = -c;
  return a;
}

MultiPoly pow(const MultiPoly& p, unsigned k) {
  MultiPoly result = MultiPoly::constant(1, p.arity());
  MultiPoly base = p;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

}  // namespace tilecount
