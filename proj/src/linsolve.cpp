#include "tilecount/linsolve.hpp"

#include <stdexcept>

namespace tilecount {

std::optional<std::vector<Rational>> solve_linear_exact(const RatMatrix& a, std::span<const Rational> b) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  if (b.size() != rows) throw std::invalid_argument("solve_linear_exact: right-hand side length mismatch");

  // Augmented working copy.
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = a(i, j);
    m[i][cols] = b[i];
  }

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (std::size_t j = c; j <= cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j <= cols; ++j) {
        if (m[r][j] != 0) m[i][j] -= f * m[r][j];
      }
    }
    pivot_col.push_back(c);
    ++r;
  }

  for (std::size_t i = r; i < rows; ++i) {
    if (m[i][cols] != 0) return std::nullopt;
  }

  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = m[i][cols];
  return x;
}

}  // namespace tilecount
