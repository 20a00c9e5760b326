#include "cmvrmt/jacobians.hpp"

#include <cmath>
#include <functional>

#include "cmvrmt/polynomial.hpp"

namespace cmvrmt {

namespace {

using RealMap = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

double fd_det(const RealMap& f, const Eigen::VectorXd& x, double h) {
  const Eigen::Index m = x.size();
  Eigen::MatrixXd j(m, m);
  for (Eigen::Index c = 0; c < m; ++c) {
    Eigen::VectorXd xp = x, xm = x;
    xp(c) += h;
    xm(c) -= h;
    j.col(c) = (f(xp) - f(xm)) / (2.0 * h);
  }
  return j.fullPivLu().determinant();
}

Eigen::VectorXd pack(const std::vector<cplx>& v, bool real) {
  const auto n = static_cast<Eigen::Index>(v.size());
  Eigen::VectorXd x(real ? n : 2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (real) {
      x(i) = v[static_cast<std::size_t>(i)].real();
    } else {
      x(2 * i) = v[static_cast<std::size_t>(i)].real();
      x(2 * i + 1) = v[static_cast<std::size_t>(i)].imag();
    }
  }
  return x;
}

std::vector<cplx> unpack(const Eigen::VectorXd& x, bool real) {
  std::vector<cplx> v;
  if (real)
    for (Eigen::Index i = 0; i < x.size(); ++i) v.emplace_back(x(i), 0.0);
  else
    for (Eigen::Index i = 0; i + 1 < x.size(); i += 2) v.emplace_back(x(i), x(i + 1));
  return v;
}

TestReport relative_report(std::string name, double fd, double closed, std::size_t n) {
  const double err = std::abs(fd - closed) / std::max(std::abs(closed), 1e-300);
  return threshold_report(std::move(name), err, kFdTol, n);
}

}  // namespace

double fd_det_roots_to_coeffs(const std::vector<cplx>& zs, bool real, double h) {
  if (zs.empty()) throw DomainError("fd_det_roots_to_coeffs: no roots");
  const RealMap f = [real](const Eigen::VectorXd& x) { return pack(monic_tail(poly_from_roots(unpack(x, real))), real); };
  return fd_det(f, pack(zs, real), h);
}

double closed_det_roots_to_coeffs(const std::vector<cplx>& zs, bool real) {
  double d = real && zs.size() % 2 == 1 ? -1.0 : 1.0;
  for (std::size_t k = 0; k < zs.size(); ++k)
    for (std::size_t j = 0; j < k; ++j) d *= real ? (zs[k] - zs[j]).real() : std::norm(zs[k] - zs[j]);
  return d;
}

double fd_det_coeffs_to_alphas(const VerblunskyString& alphas, double h) {
  if (!alphas.is_scalar() || alphas.size() == 0) throw DomainError("fd_det_coeffs_to_alphas: need a scalar string");
  const bool real = alphas.flavor() == Flavor::Real;
  const RealMap f = [real](const Eigen::VectorXd& x) {
    const std::vector<cplx> a = unpack(x, real);
    VerblunskyString s = VerblunskyString::complex(a);
    return pack(monic_tail(szego_forward(s).back()), real);
  };
  return fd_det(f, pack(alphas.scalars(), real), h);
}

double closed_det_coeffs_to_alphas(const VerblunskyString& alphas) {
  const auto& a = alphas.scalars();
  const std::size_t n = a.size();
  double d = n % 2 == 0 ? 1.0 : -1.0;
  if (alphas.flavor() == Flavor::Real) {
    for (std::size_t k = 0; k < n; ++k) {
      const double x = a[k].real();
      const double one_minus_sq = 1.0 - x * x;
      if (k % 2 == 0)
        d *= std::pow(one_minus_sq, static_cast<double>(k / 2));
      else
        d *= (1.0 - x) * std::pow(one_minus_sq, static_cast<double>((k - 1) / 2));
    }
  } else {
    for (std::size_t k = 0; k < n; ++k) d *= std::pow(1.0 - std::norm(a[k]), static_cast<double>(k));
  }
  return d;
}

TestReport jacobian_fd_roots_to_coeffs(const std::vector<cplx>& zs, bool real) {
  for (std::size_t k = 0; k < zs.size(); ++k)
    for (std::size_t j = 0; j < k; ++j)
      if (std::abs(zs[k] - zs[j]) < 1e3 * kFdStep) throw DomainError("jacobian_fd_roots_to_coeffs: roots too close for finite differences");
  return relative_report(real ? "jacobian_roots_real" : "jacobian_roots_complex", fd_det_roots_to_coeffs(zs, real),
                         closed_det_roots_to_coeffs(zs, real), zs.size());
}

TestReport jacobian_fd_coeffs_to_alphas(const VerblunskyString& alphas) {
  for (const cplx& a : alphas.scalars())
    if (!(std::abs(a) < 1.0 - 1e3 * kFdStep)) throw DomainError("jacobian_fd_coeffs_to_alphas: coefficient at the boundary");
  const bool real = alphas.flavor() == Flavor::Real;
  return relative_report(real ? "jacobian_alphas_real" : "jacobian_alphas_complex", fd_det_coeffs_to_alphas(alphas),
                         closed_det_coeffs_to_alphas(alphas), alphas.size());
}

}  // namespace cmvrmt
