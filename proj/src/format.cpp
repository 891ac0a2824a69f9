#include "tilecount/format.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tilecount {

namespace {

// Appends one term "c*body" to a running sum; body empty for constants.
void append_term(std::string& out, Rational c, const std::string& body) {
  const bool negative = sgn(c) < 0;
  if (negative) c = -c;
  std::string piece;
  if (body.empty()) {
    piece = format_rational(c);
  } else if (c == 1) {
    piece = body;
  } else {
    piece = format_rational(c) + "*" + body;
  }
  if (out.empty()) {
    out = negative ? "-" + piece : piece;
  } else {
    out += negative ? " - " : " + ";
    out += piece;
  }
}

std::string power(const std::string& name, int k) {
  return k == 1 ? name : name + "^" + std::to_string(k);
}

Json uni_to_json(const UniPoly& p) {
  return rationals_to_json(p.coeffs());
}

UniPoly uni_from_json(const Json& j, const std::string& var) {
  if (!j.is_array()) throw std::invalid_argument("expected a coefficient array");
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(rational_from_json(x));
  return UniPoly(std::move(c), var);
}

std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array");
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

Json optional_json(const std::optional<Rational>& x) {
  return x ? Json(format_rational(*x)) : Json(nullptr);
}

}  // namespace

std::string format_rational(const Rational& x) { return to_string(x); }

std::string format_poly(const UniPoly& p) {
  std::string out;
  for (int k = 0; k <= p.degree(); ++k) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    append_term(out, c, k == 0 ? "" : power(p.var(), k));
  }
  return out.empty() ? "0" : out;
}

std::string format_poly(const MultiPoly& p, std::span<const std::string> names) {
  std::vector<std::pair<MultiPoly::Exponents, Rational>> terms;
  for (const auto& [key, c] : p.terms()) terms.emplace_back(MultiPoly::unpack(key), c);
  auto total = [](const MultiPoly::Exponents& e) { return e[0] + e[1] + e[2] + e[3]; };
  std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    if (total(a.first) != total(b.first)) return total(a.first) < total(b.first);
    return a.first > b.first;
  });
  std::string out;
  for (const auto& [e, c] : terms) {
    std::string body;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (i >= names.size()) throw std::invalid_argument("polynomial has more variables than names");
      if (!body.empty()) body += "*";
      body += power(names[i], e[i]);
    }
    append_term(out, c, body);
  }
  return out.empty() ? "0" : out;
}

std::vector<std::string> weight_names(TilingMode mode) {
  if (mode == TilingMode::Dimer) return {"h", "v"};
  return {"h", "v", "m"};
}

std::string format_rf(const RationalFunction& rf) {
  return "(" + format_poly(rf.numerator()) + ")/(" + format_poly(rf.denominator()) + ")";
}

std::string format_cfinite(const CFinite& cf) {
  auto list = [](const std::vector<Rational>& xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + format_rational(xs[i]);
    return s + "]";
  };
  return "[" + list(cf.initial) + ", " + list(cf.coeffs) + "]";
}

std::string format_bivariate(const BivariateGf& gf) {
  const std::vector<std::string> names{"x", "y"};
  return "(" + format_poly(gf.numerator, names) + ")/((" + format_poly(gf.den_x.with_var("x")) + ")*(" +
         format_poly(gf.den_y.with_var("y")) + "))";
}

Json rationals_to_json(std::span<const Rational> xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(format_rational(x));
  return a;
}

Json poly_to_json(const MultiPoly& p, std::span<const std::string> names) {
  Json terms = Json::array();
  for (const auto& [key, c] : p.terms()) {
    const auto e = MultiPoly::unpack(key);
    Json exps = Json::array();
    for (std::size_t i = 0; i < names.size(); ++i) exps.push_back(e[i]);
    terms.push_back(Json{{"coeff", format_rational(c)}, {"exp", exps}});
  }
  return Json{{"vars", names}, {"terms", terms}};
}

Json rf_to_json(const RationalFunction& rf) {
  return Json{{"var", rf.var()}, {"numerator", uni_to_json(rf.numerator())}, {"denominator", uni_to_json(rf.denominator())}};
}

Json cfinite_to_json(const CFinite& cf) {
  return Json{{"initial", rationals_to_json(cf.initial)}, {"coeffs", rationals_to_json(cf.coeffs)}};
}

Json bivariate_to_json(const BivariateGf& gf) {
  const std::vector<std::string> names{"x", "y"};
  return Json{{"numerator", poly_to_json(gf.numerator, names)},
              {"den_x", uni_to_json(gf.den_x)},
              {"den_y", uni_to_json(gf.den_y)}};
}

Json moments_to_json(const MomentReport& report) {
  Json records = Json::array();
  for (const auto& r : report.records) {
    Json j{{"n", r.n},
           {"count", format_rational(r.count)},
           {"mean", format_rational(r.mean)},
           {"variance", format_rational(r.variance)}};
    if (report.up_to >= 3) {
      j["mu3"] = optional_json(r.mu3);
      j["skewness_squared"] = optional_json(r.skewness_squared);
    }
    if (report.up_to >= 4) {
      j["mu4"] = optional_json(r.mu4);
      j["kurtosis"] = optional_json(r.kurtosis);
    }
    records.push_back(std::move(j));
  }
  return Json{{"variable", report.variable}, {"up_to", report.up_to}, {"records", records}};
}

Json growth_to_json(const GrowthEstimate& g) {
  return Json{{"ratio", format_rational(g.ratio)},
              {"decimal", g.decimal},
              {"error_bound", format_rational(g.error_bound)},
              {"error_decimal", g.error_decimal}};
}

Json sequence_to_json(const Json& params, std::span<const Rational> terms) {
  return Json{{"params", params}, {"terms", rationals_to_json(terms)}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return parse_rational(j.dump());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected a rational as an integer or a \"p/q\" string, got " + j.dump());
}

CFinite cfinite_from_json(const Json& j) {
  CFinite cf;
  if (j.is_object()) {
    if (!j.contains("initial") || !j.contains("coeffs")) {
      throw std::invalid_argument("C-finite object needs \"initial\" and \"coeffs\"");
    }
    cf.initial = rationals_from_json(j.at("initial"));
    cf.coeffs = rationals_from_json(j.at("coeffs"));
  } else if (j.is_array() && j.size() == 2) {
    cf.initial = rationals_from_json(j[0]);
    cf.coeffs = rationals_from_json(j[1]);
  } else {
    throw std::invalid_argument("C-finite must be {\"initial\":[..],\"coeffs\":[..]} or [[..],[..]]");
  }
  cf.validate();
  return cf;
}

RationalFunction rf_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("numerator") || !j.contains("denominator")) {
    throw std::invalid_argument("rational function needs \"numerator\" and \"denominator\"");
  }
  const std::string var = j.value("var", std::string("t"));
  return rf_normalize(uni_from_json(j.at("numerator"), var), uni_from_json(j.at("denominator"), var));
}

CFinite parse_cfinite(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  return cfinite_from_json(j);
}

}  // namespace tilecount
