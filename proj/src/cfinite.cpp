#include "tilecount/cfinite.hpp"

#include <algorithm>
#include <stdexcept>

#include "tilecount/linsolve.hpp"
#include "tilecount/matrix.hpp"

namespace tilecount {

namespace {

CFinite zero_sequence() { return {}; }

// State s_n = (a(n+L-1), ..., a(n)); s_{n+1} = C s_n.
RatMatrix companion(const CFinite& cf) {
  const std::size_t L = cf.order();
  RatMatrix c(L, L);
  for (std::size_t j = 0; j < L; ++j) c(0, j) = cf.coeffs[j];
  for (std::size_t i = 1; i < L; ++i) c(i, i - 1) = 1;
  return c;
}

std::vector<Rational> initial_state(const CFinite& cf) {
  std::vector<Rational> s(cf.initial.rbegin(), cf.initial.rend());
  return s;
}

// Output is the last state component, i.e. a(n).
std::vector<Rational> run_state_space(const RatMatrix& step, std::vector<Rational> state,
                                      const std::vector<Rational>& readout, std::size_t count) {
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    Rational y = 0;
    for (std::size_t k = 0; k < state.size(); ++k) {
      if (readout[k] != 0) y += readout[k] * state[k];
    }
    out.push_back(y);
    if (n + 1 < count) state = mat_vec(step, state);
  }
  return out;
}

CFinite minimise(const std::vector<Rational>& terms, std::size_t bound) {
  GuessConfig cfg;
  cfg.max_order = static_cast<int>(std::max<std::size_t>(bound, 1));
  auto cf = guess_cfinite(terms, cfg);
  if (!cf) throw std::logic_error("C-finite minimisation failed within the certified bound");
  return *cf;
}

std::size_t certified_length(std::size_t bound) { return 2 * bound + static_cast<std::size_t>(GuessConfig{}.margin); }

UniPoly normalise_constant_term(const UniPoly& q) {
  const Rational c0 = q.coeff(0);
  if (c0 == 0) throw std::domain_error("denominator vanishes at 0");
  return q * (1 / c0);
}

}  // namespace

void CFinite::validate() const {
  if (initial.size() != coeffs.size()) throw std::invalid_argument("C-finite: initial and coefficient lengths differ");
}

void GuessConfig::validate() const {
  if (max_order < 1) throw std::invalid_argument("max order must be >= 1");
  if (margin < 1) throw std::invalid_argument("margin must be >= 1");
}

std::optional<CFinite> guess_cfinite(std::span<const Rational> seq, const GuessConfig& config) {
  config.validate();
  const std::size_t total = seq.size();
  bool all_zero = true;
  for (const auto& x : seq) all_zero = all_zero && x == 0;
  if (all_zero) {
    if (total >= static_cast<std::size_t>(config.margin)) return zero_sequence();
    return std::nullopt;
  }

  for (std::size_t L = 1; L <= static_cast<std::size_t>(config.max_order); ++L) {
    if (2 * L + static_cast<std::size_t>(config.margin) > total) break;
    // One equation per n in [L, total): a(n) = sum c_i a(n-i).
    RatMatrix a(total - L, L);
    std::vector<Rational> b(total - L);
    for (std::size_t n = L; n < total; ++n) {
      for (std::size_t i = 0; i < L; ++i) a(n - L, i) = seq[n - 1 - i];
      b[n - L] = seq[n];
    }
    if (auto x = solve_linear_exact(a, b)) {
      return CFinite{std::vector<Rational>(seq.begin(), seq.begin() + static_cast<long>(L)), std::move(*x)};
    }
  }
  return std::nullopt;
}

Rational cfinite_nth(const CFinite& cf, std::size_t n) {
  cf.validate();
  const std::size_t L = cf.order();
  if (L == 0) return 0;
  if (n < L) return cf.initial[n];
  std::vector<Rational> window = cf.initial;  // a(k-L) .. a(k-1), oldest first
  for (std::size_t k = L; k <= n; ++k) {
    Rational next = 0;
    for (std::size_t i = 0; i < L; ++i) next += cf.coeffs[i] * window[L - 1 - i];
    window.erase(window.begin());
    window.push_back(std::move(next));
  }
  return window.back();
}

std::vector<Rational> cfinite_terms(const CFinite& cf, std::size_t count) {
  cf.validate();
  const std::size_t L = cf.order();
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    if (L == 0) {
      out.emplace_back(0);
    } else if (n < L) {
      out.push_back(cf.initial[n]);
    } else {
      Rational next = 0;
      for (std::size_t i = 0; i < L; ++i) next += cf.coeffs[i] * out[n - 1 - i];
      out.push_back(std::move(next));
    }
  }
  return out;
}

bool cfinite_equal(const CFinite& a, const CFinite& b) {
  const std::size_t k = a.order() + b.order();
  return cfinite_terms(a, k) == cfinite_terms(b, k);
}

CFinite cfinite_add(const CFinite& a, const CFinite& b) {
  a.validate();
  b.validate();
  const std::size_t la = a.order(), lb = b.order();
  const std::size_t bound = la + lb;
  if (bound == 0) return zero_sequence();
  RatMatrix step(bound, bound);
  const RatMatrix ca = companion(a), cb = companion(b);
  for (std::size_t i = 0; i < la; ++i) {
    for (std::size_t j = 0; j < la; ++j) step(i, j) = ca(i, j);
  }
  for (std::size_t i = 0; i < lb; ++i) {
    for (std::size_t j = 0; j < lb; ++j) step(la + i, la + j) = cb(i, j);
  }
  std::vector<Rational> state = initial_state(a);
  for (auto& x : initial_state(b)) state.push_back(x);
  std::vector<Rational> readout(bound);
  if (la > 0) readout[la - 1] = 1;
  if (lb > 0) readout[bound - 1] = 1;
  return minimise(run_state_space(step, state, readout, certified_length(bound)), bound);
}

CFinite cfinite_mul(const CFinite& a, const CFinite& b) {
  a.validate();
  b.validate();
  const std::size_t la = a.order(), lb = b.order();
  const std::size_t bound = la * lb;
  if (bound == 0) return zero_sequence();
  const RatMatrix ca = companion(a), cb = companion(b);
  RatMatrix step(bound, bound);
  for (std::size_t i = 0; i < la; ++i) {
    for (std::size_t j = 0; j < la; ++j) {
      if (ca(i, j) == 0) continue;
      for (std::size_t k = 0; k < lb; ++k) {
        for (std::size_t l = 0; l < lb; ++l) step(i * lb + k, j * lb + l) = ca(i, j) * cb(k, l);
      }
    }
  }
  const auto sa = initial_state(a), sb = initial_state(b);
  std::vector<Rational> state(bound);
  for (std::size_t i = 0; i < la; ++i) {
    for (std::size_t k = 0; k < lb; ++k) state[i * lb + k] = sa[i] * sb[k];
  }
  std::vector<Rational> readout(bound);
  readout[bound - 1] = 1;
  return minimise(run_state_space(step, state, readout, certified_length(bound)), bound);
}

CFinite cfinite_scale(const CFinite& a, const Rational& c) {
  a.validate();
  if (c == 0) return zero_sequence();
  CFinite out = a;
  for (auto& d : out.initial) d *= c;
  return out;
}

CFinite cfinite_shift(const CFinite& a, std::size_t k) {
  a.validate();
  CFinite out = a;
  auto terms = cfinite_terms(a, k + a.order());
  out.initial.assign(terms.begin() + static_cast<long>(k), terms.end());
  return out;
}

RationalFunction to_rational_gf(const CFinite& cf, const std::string& var) {
  cf.validate();
  const std::size_t L = cf.order();
  std::vector<Rational> q(L + 1);
  q[0] = 1;
  for (std::size_t i = 0; i < L; ++i) q[i + 1] = -cf.coeffs[i];
  UniPoly den(std::move(q), var);
  UniPoly head(cf.initial, var);
  UniPoly num = (head * den).truncated(static_cast<int>(L));
  return rf_normalize(num.with_var(var), den);
}

std::optional<RationalFunction> guess_rational_gf(std::span<const Rational> seq, const GuessConfig& config,
                                                  const std::string& var) {
  auto cf = guess_cfinite(seq, config);
  if (!cf) return std::nullopt;
  RationalFunction rf = to_rational_gf(*cf, var);
  if (seq.empty()) return rf;
  auto check = rf_series(rf, static_cast<int>(seq.size()) - 1);
  if (!std::equal(check.begin(), check.end(), seq.begin(), seq.end())) return std::nullopt;
  return rf;
}

VerifyStatus verify_cfinite_with_bound(const CFinite& cf, std::span<const Rational> seq, std::size_t bound) {
  if (bound < cf.order()) throw std::invalid_argument("order bound is smaller than the recurrence order");
  auto expected = cfinite_terms(cf, seq.size());
  for (std::size_t n = 0; n < seq.size(); ++n) {
    if (expected[n] != seq[n]) return VerifyStatus::Refuted;
  }
  return seq.size() >= cf.order() + bound ? VerifyStatus::ProvedUnderBound : VerifyStatus::Inconclusive;
}

std::optional<BivariateGf> guess_bivariate_gf(const std::vector<std::vector<Rational>>& table,
                                              const GuessConfig& config) {
  config.validate();
  if (table.empty() || table.front().empty()) return std::nullopt;
  const std::size_t rows = table.size(), cols = table.front().size();
  for (const auto& r : table) {
    if (r.size() != cols) throw std::invalid_argument("bivariate table must be rectangular");
  }

  auto common_denominator = [&](bool by_row, const std::string& var) -> std::optional<UniPoly> {
    UniPoly acc = UniPoly::constant(1, var);
    const std::size_t lines = by_row ? rows : cols;
    for (std::size_t k = 0; k < lines; ++k) {
      std::vector<Rational> line;
      if (by_row) {
        line = table[k];
      } else {
        for (std::size_t i = 0; i < rows; ++i) line.push_back(table[i][k]);
      }
      auto rf = guess_rational_gf(line, config, var);
      if (!rf) return std::nullopt;
      acc = lcm(acc, rf->denominator());
      if (acc.degree() > config.max_order) return std::nullopt;
    }
    return normalise_constant_term(acc).with_var(var);
  };

  auto qy = common_denominator(true, "y");
  if (!qy) return std::nullopt;
  auto qx = common_denominator(false, "x");
  if (!qx) return std::nullopt;

  // G = D * Q1(x) * Q2(y), truncated to the table.
  std::vector<std::vector<Rational>> g(rows, std::vector<Rational>(cols));
  int top_i = -1, top_j = -1;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      Rational acc = 0;
      for (int a = 0; a <= qx->degree() && static_cast<std::size_t>(a) <= i; ++a) {
        const Rational& ca = qx->coeffs()[static_cast<std::size_t>(a)];
        if (ca == 0) continue;
        for (int b = 0; b <= qy->degree() && static_cast<std::size_t>(b) <= j; ++b) {
          const Rational& cb = qy->coeffs()[static_cast<std::size_t>(b)];
          if (cb == 0) continue;
          acc += ca * cb * table[i - static_cast<std::size_t>(a)][j - static_cast<std::size_t>(b)];
        }
      }
      if (acc != 0) {
        top_i = std::max(top_i, static_cast<int>(i));
        top_j = std::max(top_j, static_cast<int>(j));
      }
      g[i][j] = std::move(acc);
    }
  }
  if (static_cast<int>(rows) - 1 - top_i < config.margin || static_cast<int>(cols) - 1 - top_j < config.margin) {
    return std::nullopt;
  }

  BivariateGf gf{MultiPoly(2), *qx, *qy};
  for (int i = 0; i <= top_i; ++i) {
    for (int j = 0; j <= top_j; ++j) {
      const Rational& c = g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (c == 0) continue;
      MultiPoly::Exponents e{};
      e[0] = static_cast<std::uint16_t>(i);
      e[1] = static_cast<std::uint16_t>(j);
      gf.numerator += MultiPoly::monomial(c, e, 2);
    }
  }
  if (expand_bivariate(gf, static_cast<int>(rows) - 1, static_cast<int>(cols) - 1) != table) return std::nullopt;
  return gf;
}

std::vector<std::vector<Rational>> expand_bivariate(const BivariateGf& gf, int M, int N) {
  const int px = std::max(gf.numerator.degree_in(0), 0);
  const int py = std::max(gf.numerator.degree_in(1), 0);
  // Divide by Q1 along x for each power of y.
  std::vector<std::vector<Rational>> h(static_cast<std::size_t>(M) + 1,
                                       std::vector<Rational>(static_cast<std::size_t>(std::max(N, py)) + 1));
  for (int j = 0; j <= py; ++j) {
    std::vector<Rational> col(static_cast<std::size_t>(px) + 1);
    for (int i = 0; i <= px; ++i) {
      MultiPoly::Exponents e{};
      e[0] = static_cast<std::uint16_t>(i);
      e[1] = static_cast<std::uint16_t>(j);
      col[static_cast<std::size_t>(i)] = gf.numerator.coeff(e);
    }
    auto s = series_quotient(UniPoly(col, "x"), gf.den_x, M);
    for (int i = 0; i <= M; ++i) h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(i)];
  }
  std::vector<std::vector<Rational>> out;
  out.reserve(static_cast<std::size_t>(M) + 1);
  for (int i = 0; i <= M; ++i) out.push_back(series_quotient(UniPoly(h[static_cast<std::size_t>(i)], "y"), gf.den_y, N));
  return out;
}

bool same_bivariate(const MultiPoly& p1, const MultiPoly& q1, const MultiPoly& p2, const MultiPoly& q2) {
  return p1 * q2 == p2 * q1;
}

MultiPoly bivariate_denominator(const BivariateGf& gf) {
  MultiPoly qx(2), qy(2);
  for (int i = 0; i <= gf.den_x.degree(); ++i) {
    MultiPoly::Exponents e{};
    e[0] = static_cast<std::uint16_t>(i);
    qx += MultiPoly::monomial(gf.den_x.coeffs()[static_cast<std::size_t>(i)], e, 2);
  }
  for (int j = 0; j <= gf.den_y.degree(); ++j) {
    MultiPoly::Exponents e{};
    e[1] = static_cast<std::uint16_t>(j);
    qy += MultiPoly::monomial(gf.den_y.coeffs()[static_cast<std::size_t>(j)], e, 2);
  }
  return qx * qy;
}

SquareClass ciucu_classify(const Integer& value) {
  if (sgn(value) < 0) throw std::domain_error("ciucu_classify: negative value");
  if (mpz_perfect_square_p(value.get_mpz_t())) return SquareClass::Square;
  if (mpz_even_p(value.get_mpz_t())) {
    Integer half = value / 2;
    if (mpz_perfect_square_p(half.get_mpz_t())) return SquareClass::TwiceSquare;
  }
  return SquareClass::Neither;
}

}  // namespace tilecount
