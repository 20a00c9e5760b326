#include "cmvrmt/haar.hpp"

#include "cmvrmt/distributions.hpp"
#include "cmvrmt/quaternion.hpp"

namespace cmvrmt {

namespace {

constexpr double kNullProjection = 1e-8;

// Projects v off columns [0, k) of m twice and normalizes; false if the
// remainder is numerically null.
bool orthonormalize_against(const CMatrix& m, Eigen::Index k, CVector& v) {
  for (int pass = 0; pass < 2; ++pass)
    for (Eigen::Index j = 0; j < k; ++j) v -= m.col(j).dot(v) * m.col(j);
  const double nv = v.norm();
  if (nv < kNullProjection) return false;
  v /= nv;
  return true;
}

CVector gaussian_vector(Eigen::Index dim, bool real, Rng& rng) {
  CVector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = real ? cplx(standard_normal(rng), 0.0) : complex_normal(rng);
  return v;
}

}  // namespace

CMatrix sample_haar(Group group, std::size_t n, Rng& rng) {
  if (n == 0) throw DomainError("sample_haar: n must be positive");
  if (group == Group::USp) {
    const auto dim = static_cast<Eigen::Index>(2 * n);
    CMatrix m = CMatrix::Zero(dim, dim);
    for (Eigen::Index k = 0; k < dim; k += 2) {
      CVector v;
      do v = gaussian_vector(dim, false, rng);
      while (!orthonormalize_against(m, k, v));
      m.col(k) = v;
      for (Eigen::Index i = 0; i < dim; i += 2) {
        m(i, k + 1) = -std::conj(v(i + 1));
        m(i + 1, k + 1) = std::conj(v(i));
      }
    }
    return m;
  }
  const auto dim = static_cast<Eigen::Index>(n);
  const bool real = group == Group::O;
  CMatrix m = CMatrix::Zero(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    CVector v;
    do v = gaussian_vector(dim, real, rng);
    while (!orthonormalize_against(m, k, v));
    m.col(k) = v;
  }
  return m;
}

CMatrix sample_coe(std::size_t n, Rng& rng) {
  const CMatrix u = sample_haar(Group::U, n, rng);
  return u.transpose() * u;
}

CMatrix sample_cse(std::size_t n, Rng& rng) {
  const CMatrix u = sample_haar(Group::U, 2 * n, rng);
  return dual(u) * u;
}

}  // namespace cmvrmt
