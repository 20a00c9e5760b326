#include "cmvrmt/opuc.hpp"

#include <cmath>

namespace cmvrmt {

namespace {

constexpr double kEndTol = 1e-12;

double max_eig_gram(const Mat2& a) {
  const Mat2 g = a.adjoint() * a;
  const double tr = g.trace().real();
  const double det = g.determinant().real();
  const double disc = std::max(0.0, 0.25 * tr * tr - det);
  return 0.5 * tr + std::sqrt(disc);
}

}  // namespace

VerblunskyString VerblunskyString::complex(std::vector<cplx> alphas) {
  VerblunskyString s;
  s.flavor_ = Flavor::Complex;
  s.scalars_ = std::move(alphas);
  s.validate();
  return s;
}

VerblunskyString VerblunskyString::real(const std::vector<double>& alphas) {
  VerblunskyString s;
  s.flavor_ = Flavor::Real;
  s.scalars_.assign(alphas.begin(), alphas.end());
  s.validate();
  return s;
}

VerblunskyString VerblunskyString::matrix2(std::vector<Mat2> alphas) {
  VerblunskyString s;
  s.flavor_ = Flavor::Matrix2;
  s.blocks_ = std::move(alphas);
  s.validate();
  return s;
}

void VerblunskyString::validate() const {
  const std::size_t n = size();
  for (std::size_t k = 0; k < n; ++k) {
    const bool last = k + 1 == n;
    if (flavor_ == Flavor::Matrix2) {
      const double top = max_eig_gram(blocks_[k]);
      if (!std::isfinite(top) || (last ? top > 1.0 + 1e-10 : top >= 1.0))
        throw DomainError("verblunsky: block coefficient outside the unit ball");
    } else {
      const double r = std::abs(scalars_[k]);
      if (!std::isfinite(r) || (last ? r > 1.0 + kEndTol : r >= 1.0))
        throw DomainError("verblunsky: coefficient outside the unit disk");
      if (flavor_ == Flavor::Real && scalars_[k].imag() != 0.0)
        throw DomainError("verblunsky: real flavor with complex entry");
    }
  }
}

const std::vector<cplx>& VerblunskyString::scalars() const {
  if (flavor_ == Flavor::Matrix2) throw DomainError("verblunsky: scalar access on block string");
  return scalars_;
}

const std::vector<Mat2>& VerblunskyString::blocks() const {
  if (flavor_ != Flavor::Matrix2) throw DomainError("verblunsky: block access on scalar string");
  return blocks_;
}

double VerblunskyString::rho(std::size_t k) const {
  const double a = std::abs(scalars().at(k));
  return std::sqrt(std::max(0.0, 1.0 - a * a));
}

bool VerblunskyString::terminal_unimodular(double tol) const {
  if (size() == 0) return false;
  if (flavor_ == Flavor::Matrix2) {
    const Mat2& a = blocks_.back();
    return max_abs(a.adjoint() * a - CMatrix(Mat2::Identity())) < tol;
  }
  return std::abs(std::abs(scalars_.back()) - 1.0) < tol;
}

VerblunskyString VerblunskyString::as_real(double tol) const {
  std::vector<double> re;
  re.reserve(scalars().size());
  for (cplx a : scalars_) {
    if (std::abs(a.imag()) > tol) throw DomainError("verblunsky: coefficient not real");
    re.push_back(a.real());
  }
  if (!re.empty() && std::abs(re.back()) > 1.0) re.back() = std::copysign(1.0, re.back());
  return real(re);
}

std::vector<Poly> szego_forward(const VerblunskyString& alphas) {
  const auto& a = alphas.scalars();
  std::vector<Poly> phi;
  phi.reserve(a.size() + 1);
  phi.push_back(Poly{cplx(1.0)});
  for (std::size_t k = 0; k < a.size(); ++k) {
    const Poly& p = phi.back();
    const Poly ps = reversed_poly(p);
    Poly next(p.size() + 1, cplx(0.0));
    for (std::size_t j = 0; j < p.size(); ++j) next[j + 1] += p[j];
    const cplx ab = std::conj(a[k]);
    for (std::size_t j = 0; j < ps.size(); ++j) next[j] -= ab * ps[j];
    next.back() = 1.0;
    phi.push_back(std::move(next));
  }
  return phi;
}

std::vector<double> opuc_norm_products(const VerblunskyString& alphas) {
  const auto& a = alphas.scalars();
  std::vector<double> out(a.size() + 1);
  out[0] = 1.0;
  for (std::size_t k = 0; k < a.size(); ++k) out[k + 1] = out[k] * (1.0 - std::norm(a[k]));
  return out;
}

VerblunskyString alphas_from_polys(const std::vector<Poly>& phis) {
  std::vector<cplx> a;
  for (std::size_t k = 1; k < phis.size(); ++k) a.push_back(-std::conj(phis[k][0]));
  return VerblunskyString::complex(std::move(a));
}

VerblunskyString verblunsky_from_measure(const PointMeasure& mu) {
  mu.validate(1e-12, 1e-10);
  const std::size_t n = mu.size();
  const Eigen::Map<const CVector> z(mu.nodes.data(), static_cast<Eigen::Index>(n));
  const Eigen::Map<const Eigen::VectorXd> w(mu.weights.data(), static_cast<Eigen::Index>(n));

  auto inner = [&](const CVector& f, const CVector& g) {
    return (w.cast<cplx>().array() * f.conjugate().array() * g.array()).sum();
  };

  std::vector<CVector> vals{CVector::Ones(static_cast<Eigen::Index>(n))};
  std::vector<Poly> coefs{Poly{cplx(1.0)}};
  std::vector<double> norms{1.0};
  std::vector<cplx> alphas;
  alphas.reserve(n);

  for (std::size_t k = 0; k < n; ++k) {
    CVector v = z.cwiseProduct(vals[k]);
    Poly c(k + 2, cplx(0.0));
    for (std::size_t j = 0; j <= k; ++j) c[j + 1] = coefs[k][j];
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i <= k; ++i) {
        const cplx h = inner(vals[i], v) / norms[i];
        v -= h * vals[i];
        for (std::size_t j = 0; j < coefs[i].size(); ++j) c[j] -= h * coefs[i][j];
      }
    }
    c.back() = 1.0;
    cplx a = -std::conj(c[0]);
    if (k + 1 == n) {
      a /= std::abs(a);
    } else {
      const double nn = inner(v, v).real();
      if (!(nn > 1e-20))
        throw DegenerateSpectrum("verblunsky_from_measure: orthogonal polynomial norm underflow");
      norms.push_back(nn);
      vals.push_back(std::move(v));
      coefs.push_back(std::move(c));
    }
    alphas.push_back(a);
  }
  return VerblunskyString::complex(std::move(alphas));
}

}  // namespace cmvrmt
