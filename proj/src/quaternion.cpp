#include "cmvrmt/quaternion.hpp"

namespace cmvrmt {

ComplexQuaternion complex_unembed(const Mat2& m) {
  // m11 = a + ib, m22 = a - ib, m21 = c + id, m12 = -c + id.
  const cplx a = 0.5 * (m(0, 0) + m(1, 1));
  const cplx b = (m(0, 0) - m(1, 1)) / (2.0 * kI);
  const cplx c = 0.5 * (m(1, 0) - m(0, 1));
  const cplx d = (m(1, 0) + m(0, 1)) / (2.0 * kI);
  return {a, b, c, d};
}

CMatrix symplectic_form(std::size_t n) {
  CMatrix z = CMatrix::Zero(2 * n, 2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    z(2 * k, 2 * k + 1) = -1.0;
    z(2 * k + 1, 2 * k) = 1.0;
  }
  return z;
}

CMatrix dual(const CMatrix& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0)
    throw DomainError("dual: matrix must be square of even dimension");
  // Column i of Z has its single nonzero in row i^1: +1 for even i, -1 for odd.
  const auto n = m.rows();
  CMatrix out(n, n);
  auto sign = [](Eigen::Index i) { return (i % 2 == 0) ? 1.0 : -1.0; };
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      out(i, j) = sign(i) * sign(j) * m(j ^ 1, i ^ 1);
  return out;
}

bool is_self_dual(const CMatrix& m, double tol) {
  return max_abs(dual(m) - m) < tol;
}

bool is_quaternion_unitary(const CMatrix& embedded, double tol) {
  if (embedded.rows() != embedded.cols() || embedded.rows() % 2 != 0) return false;
  const CMatrix g = embedded.adjoint() * embedded;
  return max_abs(g - CMatrix::Identity(g.rows(), g.cols())) < tol;
}

bool is_real_quaternionic(const CMatrix& m, double tol) {
  if (m.rows() % 2 != 0 || m.cols() % 2 != 0) return false;
  for (Eigen::Index i = 0; i < m.rows(); i += 2)
    for (Eigen::Index j = 0; j < m.cols(); j += 2) {
      if (std::abs(m(i + 1, j + 1) - std::conj(m(i, j))) > tol) return false;
      if (std::abs(m(i + 1, j) + std::conj(m(i, j + 1))) > tol) return false;
    }
  return true;
}

}  // namespace cmvrmt
