#pragma once

// Real and complex quaternions in the basis (1, i, k, j), their 2x2 complex
// embedding, and the time-reversal dual of 2n x 2n complex matrices.

#include <cstddef>
#include <vector>

#include "cmvrmt/core.hpp"

namespace cmvrmt {

namespace detail {
inline double conj_scalar(double x) { return x; }
inline cplx conj_scalar(cplx x) { return std::conj(x); }
}  // namespace detail

/// q = a + b*i + c*k + d*j. Note the component order follows the basis
/// (1, i, k, j), not Hamilton's (1, i, j, k).
template <typename T>
struct Quaternion {
  T a{};
  T b{};
  T c{};
  T d{};

  static Quaternion one() { return {T(1), T(0), T(0), T(0)}; }

  /// a - b i - c k - d j
  Quaternion conjugate() const { return {a, -b, -c, -d}; }

  /// Componentwise complex conjugate of conjugate(); equals conjugate() for
  /// real quaternions.
  Quaternion hermitian_conjugate() const {
    return {detail::conj_scalar(a), -detail::conj_scalar(b),
            -detail::conj_scalar(c), -detail::conj_scalar(d)};
  }

  friend Quaternion operator+(const Quaternion& p, const Quaternion& q) {
    return {p.a + q.a, p.b + q.b, p.c + q.c, p.d + q.d};
  }

  friend Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    // Hamilton product written with (w, x, y, z) = (a, b, d, c).
    const T w = p.a * q.a - p.b * q.b - p.d * q.d - p.c * q.c;
    const T x = p.a * q.b + p.b * q.a + p.d * q.c - p.c * q.d;
    const T y = p.a * q.d - p.b * q.c + p.d * q.a + p.c * q.b;
    const T z = p.a * q.c + p.b * q.d - p.d * q.b + p.c * q.a;
    return {w, x, z, y};
  }
};

using RealQuaternion = Quaternion<double>;
using ComplexQuaternion = Quaternion<cplx>;

/// [[a + ib, -c + id], [c + id, a - ib]]
template <typename T>
Mat2 complex_embed(const Quaternion<T>& q) {
  const cplx a(q.a), b(q.b), c(q.c), d(q.d);
  Mat2 m;
  m << a + kI * b, -c + kI * d,
       c + kI * d, a - kI * b;
  return m;
}

/// Inverse of complex_embed on all of C^{2x2} (complex flavor).
ComplexQuaternion complex_unembed(const Mat2& m);

/// Row-major rectangular array of quaternions.
template <typename T>
class QuaternionMatrix {
 public:
  QuaternionMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QuaternionMatrix identity(std::size_t n) {
    QuaternionMatrix q(n, n);
    for (std::size_t i = 0; i < n; ++i) q(i, i) = Quaternion<T>::one();
    return q;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Quaternion<T>& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Quaternion<T>& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  /// [q^dagger_ji]
  QuaternionMatrix adjoint() const {
    QuaternionMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        out(j, i) = (*this)(i, j).hermitian_conjugate();
    return out;
  }

  friend QuaternionMatrix operator*(const QuaternionMatrix& p, const QuaternionMatrix& q) {
    if (p.cols_ != q.rows_) throw DomainError("quaternion matrix product: shape mismatch");
    QuaternionMatrix out(p.rows_, q.cols_);
    for (std::size_t i = 0; i < p.rows_; ++i)
      for (std::size_t j = 0; j < q.cols_; ++j) {
        Quaternion<T> acc{};
        for (std::size_t k = 0; k < p.cols_; ++k) acc = acc + p(i, k) * q(k, j);
        out(i, j) = acc;
      }
    return out;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Quaternion<T>> data_;
};

/// Blockwise complex_embed: an r x c quaternion array becomes 2r x 2c.
template <typename T>
CMatrix embed_matrix(const QuaternionMatrix<T>& q) {
  CMatrix m(2 * q.rows(), 2 * q.cols());
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j)
      m.template block<2, 2>(2 * i, 2 * j) = complex_embed(q(i, j));
  return m;
}

/// Z = I_n (x) [[0, -1], [1, 0]].
CMatrix symplectic_form(std::size_t n);

/// Time-reversal dual M^R = Z^T M^T Z. Throws DomainError on odd dimension.
CMatrix dual(const CMatrix& m);

inline constexpr double kStructureTol = 1e-10;

/// max|M^R - M| < tol
bool is_self_dual(const CMatrix& m, double tol = kStructureTol);

/// max|C^dagger C - I| < tol for the embedded matrix C = embed(Q).
bool is_quaternion_unitary(const CMatrix& embedded, double tol = kStructureTol);

template <typename T>
bool is_quaternion_unitary(const QuaternionMatrix<T>& q, double tol = kStructureTol) {
  return is_quaternion_unitary(embed_matrix(q), tol);
}

/// True when every 2x2 block has the real-quaternion pattern
/// m22 = conj(m11), m21 = -conj(m12).
bool is_real_quaternionic(const CMatrix& m, double tol = kStructureTol);

}  // namespace cmvrmt
