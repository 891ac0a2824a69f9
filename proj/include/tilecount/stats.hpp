#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tilecount/cfinite.hpp"
#include "tilecount/directenum.hpp"
#include "tilecount/multipoly.hpp"

namespace tilecount {

/// Exact statistics of one weight enumerator. mu3/mu4 are central moments;
/// skewness is reported squared so that it stays rational. The
/// standardized fields are absent when the variance is 0.
struct MomentRecord {
  std::size_t n = 0;
  Rational count;
  Rational mean;
  Rational variance;
  std::optional<Rational> mu3;
  std::optional<Rational> mu4;
  std::optional<Rational> skewness_squared;
  std::optional<Rational> kurtosis;
};

struct MomentReport {
  std::string variable;
  int up_to = 2;
  std::vector<MomentRecord> records;
};

/// Index of the weight variable called h, v or m. Throws
/// std::invalid_argument for other names.
int weight_variable_index(const std::string& name);

/// Moments of the tile count `variable` (h, v or m) for each polynomial,
/// with the other variables set to 1. up_to is 2, 3 or 4. Throws
/// std::domain_error naming n when a polynomial vanishes at all-ones.
MomentReport weighted_moments(std::span<const MultiPoly> polys, const std::string& variable, int up_to = 4);

struct GrowthOptions {
  std::size_t index = 40;
  int digits = 6;
};

struct GrowthEstimate {
  Rational ratio;        ///< a(K) / a(K-1)
  Rational error_bound;  ///< |a(K)/a(K-1) - a(K-1)/a(K-2)|
  std::string decimal;   ///< ratio rounded to `digits` places
  std::string error_decimal;
};

/// Dominant growth ratio from consecutive terms generated by cf at
/// index K = options.index. `terms`, if nonempty, must agree with cf.
/// Throws std::domain_error unless the last ten terms up to K are positive.
GrowthEstimate growth_rate(const CFinite& cf, std::span<const Rational> terms, const GrowthOptions& options = {});

/// x rounded half away from zero to `digits` decimal places.
std::string to_decimal(const Rational& x, int digits);

}  // namespace tilecount
