#include "cmvrmt/cmv.hpp"

#include <cmath>

#include "cmvrmt/spectra.hpp"

namespace cmvrmt {

namespace {

// Xi_k for k = first, first + 2, ... placed on the diagonal; first = 1 adds the leading [1].
CMatrix scalar_factor(const std::vector<cplx>& a, std::size_t first) {
  const std::size_t n = a.size();
  const auto dim = static_cast<Eigen::Index>(n);
  CMatrix f = CMatrix::Zero(dim, dim);
  if (first == 1) f(0, 0) = 1.0;
  for (std::size_t k = first; k < n; k += 2) {
    const auto i = static_cast<Eigen::Index>(k);
    if (k + 1 == n) {
      f(i, i) = std::conj(a[k]);
      break;
    }
    const double r = std::sqrt(std::max(0.0, 1.0 - std::norm(a[k])));
    f(i, i) = std::conj(a[k]);
    f(i, i + 1) = r;
    f(i + 1, i) = r;
    f(i + 1, i + 1) = -a[k];
  }
  return f;
}

CMatrix block_factor(const std::vector<Mat2>& a, std::size_t first) {
  const std::size_t n = a.size();
  const auto dim = static_cast<Eigen::Index>(2 * n);
  CMatrix f = CMatrix::Zero(dim, dim);
  if (first == 1) f.block<2, 2>(0, 0).setIdentity();
  for (std::size_t k = first; k < n; k += 2) {
    const auto i = static_cast<Eigen::Index>(2 * k);
    const Mat2& x = a[k];
    f.block<2, 2>(i, i) = x.adjoint();
    if (k + 1 == n) break;
    f.block<2, 2>(i, i + 2) = psd_sqrt2(Mat2::Identity() - x.adjoint() * x);
    f.block<2, 2>(i + 2, i) = psd_sqrt2(Mat2::Identity() - x * x.adjoint());
    f.block<2, 2>(i + 2, i + 2) = -x;
  }
  return f;
}

// sqrt with argument taken in [0, 2 pi).
cplx sqrt_arg_0_2pi(cplx z) {
  double th = std::arg(z);
  if (th < 0.0) th += 2.0 * kPi;
  return std::polar(std::sqrt(std::abs(z)), 0.5 * th);
}

}  // namespace

CMatrix cmv_factor_l(const VerblunskyString& alphas) { return scalar_factor(alphas.scalars(), 0); }
CMatrix cmv_factor_m(const VerblunskyString& alphas) { return scalar_factor(alphas.scalars(), 1); }

CmvOperator build_cmv(const VerblunskyString& alphas) {
  if (alphas.size() == 0) throw DomainError("build_cmv: empty coefficient string");
  const auto& a = alphas.scalars();
  return {scalar_factor(a, 0) * scalar_factor(a, 1), CmvForm::Cmv, 2};
}

CmvOperator build_block_cmv(const VerblunskyString& alphas) {
  if (alphas.size() == 0) throw DomainError("build_block_cmv: empty coefficient string");
  const auto& a = alphas.blocks();
  return {block_factor(a, 0) * block_factor(a, 1), CmvForm::BlockCmv, 2};
}

Mat2 psd_sqrt2(const Mat2& in) {
  const double scale = std::max(1.0, max_abs(in));
  if (max_abs(in - in.adjoint()) > 1e-12 * scale) throw DomainError("psd_sqrt2: input not Hermitian");
  Mat2 m = 0.5 * (in + in.adjoint());
  const double tr = m.trace().real();
  const double det = m.determinant().real();
  const double disc = std::sqrt(std::max(0.0, 0.25 * tr * tr - det));
  const double lmax = 0.5 * tr + disc;
  const double lmin = 0.5 * tr - disc;
  if (lmin < -1e-12) throw DomainError("psd_sqrt2: input not positive semidefinite");
  if (lmin < 0.0) {
    // Remove the slightly negative eigencomponent.
    if (lmax <= 0.0) return Mat2::Zero();
    const Mat2 p = (m - lmax * Mat2::Identity()) / (lmin - lmax);
    m -= lmin * p;
  }
  const double s = std::sqrt(std::max(0.0, lmax) * std::max(0.0, lmin));
  const double t = std::sqrt(std::max(0.0, lmax) + std::max(0.0, lmin) + 2.0 * s);
  if (t == 0.0) return Mat2::Zero();
  Mat2 r = (m + s * Mat2::Identity()) / t;
  return 0.5 * (r + r.adjoint());
}

CMatrix truncate_first(const CMatrix& c, int width) {
  if (c.rows() != c.cols()) throw DomainError("truncate_first: matrix not square");
  if (width < 1 || c.rows() <= width) throw DomainError("truncate_first: dimension too small");
  const Eigen::Index m = c.rows() - width;
  return c.bottomRightCorner(m, m);
}

ReversedTruncation reversed_truncation_coeffs(const VerblunskyString& alphas) {
  const auto& a = alphas.scalars();
  if (a.size() < 2) throw DomainError("reversed_truncation_coeffs: need at least two coefficients");
  if (!alphas.terminal_unimodular(1e-10))
    throw DomainError("reversed_truncation_coeffs: last coefficient not unimodular");
  const std::size_t n = a.size() - 1;
  const cplx an = a[n];
  std::vector<cplx> b(n);
  for (std::size_t k = 0; k < n; ++k) b[k] = -std::conj(a[n - 1 - k]) * an;
  const bool transpose = n % 2 == 0;
  if (alphas.flavor() == Flavor::Real) {
    std::vector<double> br(n);
    for (std::size_t k = 0; k < n; ++k) br[k] = b[k].real();
    return {VerblunskyString::real(br), transpose};
  }
  return {VerblunskyString::complex(std::move(b)), transpose};
}

CmvOperator build_symmetric_cmv(const VerblunskyString& alphas, SymmetricVariant variant) {
  const auto& a = alphas.scalars();
  const std::size_t n = a.size();
  if (n == 0) throw DomainError("build_symmetric_cmv: empty coefficient string");
  const bool tilde = variant == SymmetricVariant::STilde;
  if (n % 2 == 0) {
    const cplx excluded = tilde ? -1.0 : 1.0;
    if (std::abs(a[n - 1] - excluded) <= 1e-14)
      throw DomainError("build_symmetric_cmv: excluded terminal coefficient for even n");
  }
  const auto dim = static_cast<Eigen::Index>(n);
  CMatrix nm = CMatrix::Zero(dim, dim);
  nm(0, 0) = 1.0;
  for (std::size_t k = 1; k < n; k += 2) {
    const auto i = static_cast<Eigen::Index>(k);
    const cplx x = a[k];
    if (k + 1 == n) {
      nm(i, i) = tilde ? std::conj(std::sqrt(x)) : -std::conj(sqrt_arg_0_2pi(x));
      break;
    }
    const double r = std::sqrt(std::max(0.0, 1.0 - std::norm(x)));
    if (tilde) {
      const double d = std::sqrt(2.0 * (1.0 + x.real()));
      nm(i, i) = (1.0 + std::conj(x)) / d;
      nm(i, i + 1) = r / d;
      nm(i + 1, i) = kI * r / d;
      nm(i + 1, i + 1) = -kI * (1.0 + x) / d;
    } else {
      const double d = std::sqrt(2.0 * (1.0 - x.real()));
      nm(i, i) = kI * (1.0 - std::conj(x)) / d;
      nm(i, i + 1) = -kI * r / d;
      nm(i + 1, i) = r / d;
      nm(i + 1, i + 1) = (1.0 - x) / d;
    }
  }
  const CMatrix s = nm * cmv_factor_l(alphas) * nm.transpose();
  return {0.5 * (s + s.transpose()), CmvForm::SymmetricCmv, 3};
}

VerblunskyString cmvfy(const CMatrix& u, double tol) {
  if (u.rows() != u.cols() || u.rows() == 0) throw DomainError("cmvfy: matrix not square");
  if (max_abs(u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols())) > tol)
    throw DomainError("cmvfy: matrix not unitary");
  const PointMeasure mu = spectral_measure(u);
  if (static_cast<Eigen::Index>(mu.size()) != u.rows()) throw DomainError("cmvfy: e1 is not cyclic");
  return verblunsky_from_measure(mu);
}

int bandwidth(const CMatrix& m, double tol) {
  int w = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (std::abs(m(i, j)) > tol) w = std::max(w, static_cast<int>(std::abs(i - j)));
  return w;
}

}  // namespace cmvrmt
