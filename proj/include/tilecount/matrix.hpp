#pragma once

// Dense matrices over the exact rings used by the transfer-matrix engines.
//
// The product kernels come in two flavours: a plain serial loop kept as the
// reference implementation, and an OpenMP row-parallel version that the
// engines call. Both compute the same sums in the same order per entry, so
// results are identical regardless of thread count.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "tilecount/multipoly.hpp"
#include "tilecount/numbers.hpp"

namespace tilecount {

template <class T>
T ring_one() {
  return T(1);
}
template <>
inline MultiPoly ring_one<MultiPoly>() {
  return MultiPoly::constant(1);
}

template <class T>
T ring_zero() {
  return T(0);
}
template <>
inline MultiPoly ring_zero<MultiPoly>() {
  return MultiPoly();
}

inline bool ring_is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool ring_is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool ring_is_zero(const MultiPoly& x) { return x.is_zero(); }

inline void fused_add_product(Integer& acc, const Integer& a, const Integer& b) { acc += a * b; }
inline void fused_add_product(Rational& acc, const Rational& a, const Rational& b) { acc += a * b; }
inline void fused_add_product(MultiPoly& acc, const MultiPoly& a, const MultiPoly& b) {
  acc.add_product(a, b);
}

/// Row-major matrix over an exact ring. Corner matrices are rectangular, so
/// squareness is only enforced where an operation needs it.
template <class T>
class RingMatrix {
 public:
  RingMatrix() = default;
  RingMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, ring_zero<T>()) {}

  static RingMatrix identity(std::size_t n) {
    RingMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ring_one<T>();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const RingMatrix& a, const RingMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = RingMatrix<Integer>;
using RatMatrix = RingMatrix<Rational>;
using PolyMatrix = RingMatrix<MultiPoly>;

namespace detail {

template <class T>
void check_product_shape(const RingMatrix<T>& a, const RingMatrix<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
}

template <class T>
void multiply_row(const RingMatrix<T>& a, const RingMatrix<T>& b, RingMatrix<T>& c, std::size_t i) {
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const T& aik = a(i, k);
    if (ring_is_zero(aik)) continue;
    for (std::size_t j = 0; j < b.cols(); ++j) {
      const T& bkj = b(k, j);
      if (ring_is_zero(bkj)) continue;
      fused_add_product(c(i, j), aik, bkj);
    }
  }
}

}  // namespace detail

/// Reference product.
template <class T>
RingMatrix<T> mat_mul_serial(const RingMatrix<T>& a, const RingMatrix<T>& b) {
  detail::check_product_shape(a, b);
  RingMatrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) detail::multiply_row(a, b, c, i);
  return c;
}

/// Row-parallel product.
template <class T>
RingMatrix<T> mat_mul(const RingMatrix<T>& a, const RingMatrix<T>& b) {
  detail::check_product_shape(a, b);
  RingMatrix<T> c(a.rows(), b.cols());
  const auto rows = static_cast<long>(a.rows());
#pragma omp parallel for schedule(dynamic) if (rows >= 16)
  for (long i = 0; i < rows; ++i) detail::multiply_row(a, b, c, static_cast<std::size_t>(i));
  return c;
}

/// Row vector times matrix, serial reference.
template <class T>
std::vector<T> vec_mat_serial(const std::vector<T>& v, const RingMatrix<T>& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("vector-matrix product: shape mismatch");
  std::vector<T> out(m.cols(), ring_zero<T>());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (ring_is_zero(v[k]) || ring_is_zero(m(k, j))) continue;
      fused_add_product(out[j], v[k], m(k, j));
    }
  }
  return out;
}

/// Row vector times matrix, parallel over output entries.
template <class T>
std::vector<T> vec_mat(const std::vector<T>& v, const RingMatrix<T>& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("vector-matrix product: shape mismatch");
  std::vector<T> out(m.cols(), ring_zero<T>());
  const auto cols = static_cast<long>(m.cols());
#pragma omp parallel for schedule(static) if (cols >= 64)
  for (long jj = 0; jj < cols; ++jj) {
    const auto j = static_cast<std::size_t>(jj);
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (ring_is_zero(v[k]) || ring_is_zero(m(k, j))) continue;
      fused_add_product(out[j], v[k], m(k, j));
    }
  }
  return out;
}

/// Matrix times column vector.
template <class T>
std::vector<T> mat_vec(const RingMatrix<T>& m, const std::vector<T>& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  std::vector<T> out(m.rows(), ring_zero<T>());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (ring_is_zero(v[k]) || ring_is_zero(m(i, k))) continue;
      fused_add_product(out[i], m(i, k), v[k]);
    }
  }
  return out;
}

/// M^k by binary exponentiation; M^0 is the identity.
template <class T>
RingMatrix<T> mat_pow(const RingMatrix<T>& m, unsigned long k) {
  if (!m.is_square()) throw std::invalid_argument("mat_pow: matrix must be square");
  RingMatrix<T> result = RingMatrix<T>::identity(m.rows());
  RingMatrix<T> base = m;
  bool first = true;
  while (k > 0) {
    if (k & 1UL) {
      result = first ? base : mat_mul(result, base);
      first = false;
    }
    k >>= 1UL;
    if (k > 0) base = mat_mul(base, base);
  }
  return result;
}

template <class T>
T trace(const RingMatrix<T>& m) {
  if (!m.is_square()) throw std::invalid_argument("trace: matrix must be square");
  T acc = ring_zero<T>();
  for (std::size_t i = 0; i < m.rows(); ++i) acc += m(i, i);
  return acc;
}

/// trace(a * b) without forming the product.
template <class T>
T trace_of_product(const RingMatrix<T>& a, const RingMatrix<T>& b) {
  if (a.rows() != b.cols() || a.cols() != b.rows()) throw std::invalid_argument("trace_of_product: shape mismatch");
  T acc = ring_zero<T>();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (ring_is_zero(a(i, k)) || ring_is_zero(b(k, i))) continue;
      fused_add_product(acc, a(i, k), b(k, i));
    }
  }
  return acc;
}

template <class T>
RingMatrix<T> transpose(const RingMatrix<T>& m) {
  RingMatrix<T> t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  }
  return t;
}

/// Applies f entrywise, e.g. to evaluate a weighted matrix at h = v = 1.
template <class T, class F>
auto map_entries(const RingMatrix<T>& m, F&& f) {
  using U = decltype(f(m(0, 0)));
  RingMatrix<U> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = f(m(i, j));
  }
  return out;
}

}  // namespace tilecount
