#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tilecount/matrix.hpp"

namespace tilecount {

/// Exact Gaussian elimination over Q for A x = b, A of any shape.
///
/// Pivots are the first nonzero entry of each column, scanning rows top to
/// bottom, so the result is reproducible. Free variables are set to zero.
/// Returns nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve_linear_exact(const RatMatrix& a, std::span<const Rational> b);

}  // namespace tilecount
