#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "tilecount/cfinite.hpp"
#include "tilecount/directenum.hpp"
#include "tilecount/multipoly.hpp"
#include "tilecount/ratfunc.hpp"
#include "tilecount/stats.hpp"

namespace tilecount {

using Json = nlohmann::ordered_json;

/// "p" or "p/q".
std::string format_rational(const Rational& x);

/// Constant first, ascending degree: "1 - 4*t + 3/2*t^2". Zero is "0".
std::string format_poly(const UniPoly& p);
/// Ascending total degree, then lexicographic: "1 + h^2 + 2*h*v".
std::string format_poly(const MultiPoly& p, std::span<const std::string> names);
/// h, v (and m for monomer-dimer).
std::vector<std::string> weight_names(TilingMode mode);
/// "(num)/(den)".
std::string format_rf(const RationalFunction& rf);
/// [[d1, ..., dL], [c1, ..., cL]]
std::string format_cfinite(const CFinite& cf);
std::string format_bivariate(const BivariateGf& gf);

Json rationals_to_json(std::span<const Rational> xs);
Json poly_to_json(const MultiPoly& p, std::span<const std::string> names);
Json rf_to_json(const RationalFunction& rf);
Json cfinite_to_json(const CFinite& cf);
Json bivariate_to_json(const BivariateGf& gf);
Json moments_to_json(const MomentReport& report);
Json growth_to_json(const GrowthEstimate& g);
Json sequence_to_json(const Json& params, std::span<const Rational> terms);

/// Accepts "p", "p/q" strings and JSON integers.
Rational rational_from_json(const Json& j);
/// {"initial": [...], "coeffs": [...]} or [[...], [...]].
CFinite cfinite_from_json(const Json& j);
RationalFunction rf_from_json(const Json& j);
/// Parses JSON text; throws std::invalid_argument on malformed input.
CFinite parse_cfinite(const std::string& text);

}  // namespace tilecount
