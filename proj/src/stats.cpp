#include "tilecount/stats.hpp"

#include <algorithm>
#include <stdexcept>

namespace tilecount {

int weight_variable_index(const std::string& name) {
  if (name == "h") return kVarH;
  if (name == "v") return kVarV;
  if (name == "m") return kVarM;
  throw std::invalid_argument("unknown weight variable '" + name + "' (expected h, v or m)");
}

MomentReport weighted_moments(std::span<const MultiPoly> polys, const std::string& variable, int up_to) {
  if (up_to < 2 || up_to > 4) throw std::invalid_argument("moment order must be 2, 3 or 4");
  const int var = weight_variable_index(variable);
  MomentReport report{variable, up_to, {}};
  for (std::size_t n = 0; n < polys.size(); ++n) {
    if (var >= polys[n].arity()) {
      throw std::invalid_argument("variable " + variable + " not present at n=" + std::to_string(n));
    }
    UniPoly p = polys[n].restrict_to(var);
    const Rational total = p(1);
    if (total == 0) throw std::domain_error("zero enumerator at n=" + std::to_string(n));

    // Factorial moments f[k] = p^(k)(1) / p(1).
    std::vector<Rational> f(5);
    UniPoly d = p;
    for (int k = 1; k <= up_to; ++k) {
      d = d.derivative();
      f[static_cast<std::size_t>(k)] = d(1) / total;
    }
    const Rational e1 = f[1];
    const Rational e2 = f[2] + f[1];
    MomentRecord r;
    r.n = n;
    r.count = total;
    r.mean = e1;
    r.variance = e2 - e1 * e1;
    if (up_to >= 3) {
      const Rational e3 = f[3] + 3 * f[2] + f[1];
      r.mu3 = e3 - 3 * e1 * e2 + 2 * e1 * e1 * e1;
      if (r.variance != 0) r.skewness_squared = *r.mu3 * *r.mu3 / (r.variance * r.variance * r.variance);
      if (up_to >= 4) {
        const Rational e4 = f[4] + 6 * f[3] + 7 * f[2] + f[1];
        r.mu4 = e4 - 4 * e1 * e3 + 6 * e1 * e1 * e2 - 3 * e1 * e1 * e1 * e1;
        if (r.variance != 0) r.kurtosis = *r.mu4 / (r.variance * r.variance);
      }
    }
    report.records.push_back(std::move(r));
  }
  return report;
}

std::string to_decimal(const Rational& x, int digits) {
  if (digits < 0) throw std::invalid_argument("digits must be >= 0");
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const bool negative = sgn(x) < 0;
  const Rational ax = negative ? Rational(-x) : x;
  // floor(|x| * 10^d + 1/2)
  Rational shifted = ax * scale + Rational(1, 2);
  Integer q = shifted.get_num() / shifted.get_den();
  std::string s = q.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  if (negative && q != 0) s.insert(0, "-");
  return s;
}

GrowthEstimate growth_rate(const CFinite& cf, std::span<const Rational> terms, const GrowthOptions& options) {
  cf.validate();
  if (options.index < 2) throw std::invalid_argument("growth index must be >= 2");
  const std::size_t K = options.index;
  auto seq = cfinite_terms(cf, std::max(K + 1, terms.size()));
  for (std::size_t n = 0; n < terms.size(); ++n) {
    if (seq[n] != terms[n]) throw std::invalid_argument("terms disagree with the recurrence at n=" + std::to_string(n));
  }
  const std::size_t window = std::min<std::size_t>(10, K + 1);
  for (std::size_t n = K + 1 - window; n <= K; ++n) {
    if (sgn(seq[n]) <= 0) throw std::domain_error("sequence is not eventually positive (a(" + std::to_string(n) + ") <= 0)");
  }
  GrowthEstimate g;
  g.ratio = seq[K] / seq[K - 1];
  const Rational prev = seq[K - 1] / seq[K - 2];
  g.error_bound = abs(g.ratio - prev);
  g.decimal = to_decimal(g.ratio, options.digits);
  // Rounded upwards so the printed bound stays a bound.
  const int err_digits = options.digits + 4;
  Integer err_scale;
  mpz_ui_pow_ui(err_scale.get_mpz_t(), 10, static_cast<unsigned long>(err_digits));
  g.error_decimal = g.error_bound == 0 ? to_decimal(0, err_digits)
                                       : to_decimal(g.error_bound + Rational(1, 2) / err_scale, err_digits);
  return g;
}

}  // namespace tilecount
