#include <algorithm>
#include <cmath>

#include "cmvrmt/opuc.hpp"

namespace cmvrmt {

namespace {

constexpr double kFloor = 1e-12;

double rel_err(cplx a, cplx b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), kFloor});
}

// |exp(x) - 1| for log-space comparisons.
double log_rel_err(cplx diff) { return std::abs(std::exp(diff) - 1.0); }

struct Acc {
  IdentityCheck check;
  explicit Acc(std::string name) { check.name = std::move(name); }
  void add(double e) {
    check.max_rel_err = std::max(check.max_rel_err, std::isnan(e) ? INFINITY : e);
    ++check.evaluations;
  }
};

cplx cauchy_det(const std::vector<cplx>& z) {
  const auto k = static_cast<Eigen::Index>(z.size());
  CMatrix m(k, k);
  for (Eigen::Index j = 0; j < k; ++j)
    for (Eigen::Index s = 0; s < k; ++s) m(j, s) = 1.0 / (1.0 - z[j] * std::conj(z[s]));
  return m.determinant();
}

cplx cauchy_rhs(const std::vector<cplx>& z) {
  cplx num = 1.0, den = 1.0;
  for (std::size_t j = 0; j < z.size(); ++j)
    for (std::size_t s = 0; s < z.size(); ++s) {
      den *= 1.0 - z[j] * std::conj(z[s]);
      if (j < s) num *= std::norm(z[s] - z[j]);
    }
  return num / den;
}

// Newton steps in extended precision; roots near the circle lose digits in
// 1 - |z|^2 otherwise.
using lcplx = std::complex<long double>;

using LPoly = std::vector<lcplx>;

// Szego recurrence in extended precision.
std::vector<LPoly> szego_extended(const std::vector<cplx>& a) {
  std::vector<LPoly> phi{{1.0L}};
  for (cplx ak : a) {
    const LPoly& p = phi.back();
    const std::size_t k = p.size() - 1;
    LPoly next(k + 2, 0.0L);
    const lcplx ab = std::conj(lcplx(ak.real(), ak.imag()));
    for (std::size_t j = 0; j <= k; ++j) {
      next[j + 1] += p[j];
      next[j] -= ab * std::conj(p[k - j]);
    }
    phi.push_back(std::move(next));
  }
  return phi;
}

lcplx polish_extended(const LPoly& p, cplx z0) {
  using lc = lcplx;
  lc z(z0.real(), z0.imag());
  for (int it = 0; it < 3; ++it) {
    lc v = 0.0L, d = 0.0L;
    for (std::size_t k = p.size(); k-- > 0;) {
      d = d * z + v;
      v = v * z + p[k];
    }
    if (d == lc(0.0L)) break;
    const lc step = v / d;
    z -= step;
    if (std::abs(step) <= 1e-19L * std::abs(z)) break;
  }
  return z;
}

const cplx kDefaultProbes[] = {{0.3, 0.1}, {0.0, -0.5}, {0.7, 0.0}, {-0.2, -0.6}, {-0.45, 0.35}};

}  // namespace

double IdentityReport::worst() const {
  double w = 0.0;
  for (const auto& c : checks) w = std::max(w, c.max_rel_err);
  return w;
}

const IdentityCheck* IdentityReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

IdentityReport identity_suite(const VerblunskyString& alphas, const std::optional<PointMeasure>& mu,
                              std::span<const cplx> probes) {
  const auto& a = alphas.scalars();
  const std::size_t n = a.size();
  const auto phi = szego_forward(alphas);
  const auto norms = opuc_norm_products(alphas);
  const bool full = alphas.terminal_unimodular(1e-12);
  // Degrees whose zeros lie strictly inside the disk.
  const std::size_t kin = full ? n - 1 : n;
  if (probes.empty()) probes = kDefaultProbes;

  std::vector<std::vector<cplx>> roots(n + 1);
  std::vector<std::vector<lcplx>> roots_ext(n + 1);
  const auto phi_ext = szego_extended(a);
  for (std::size_t k = 1; k <= n; ++k) {
    roots[k] = aberth_roots(phi[k]);
    for (cplx& r : roots[k]) {
      roots_ext[k].push_back(polish_extended(phi_ext[k], r));
      r = cplx(static_cast<double>(roots_ext[k].back().real()), static_cast<double>(roots_ext[k].back().imag()));
    }
  }

  IdentityReport rep;

  Acc roots_acc("root_product");
  for (std::size_t k = 1; k <= n; ++k) {
    cplx prod = (k % 2 == 0) ? 1.0 : -1.0;
    for (cplx r : roots[k]) prod *= r;
    const cplx target = -std::conj(a[k - 1]);
    roots_acc.add(std::max(rel_err(prod, target), rel_err(phi[k][0], target)));
  }
  rep.checks.push_back(roots_acc.check);

  if (alphas.flavor() == Flavor::Real) {
    Acc ends("real_endpoint_products");
    for (std::size_t k = 1; k <= n; ++k) {
      cplx lm = 1.0, lp = 1.0;
      for (cplx r : roots[k]) {
        lm *= 1.0 - r;
        lp *= 1.0 + r;
      }
      double rm = 1.0, rp = 1.0, scale = 1.0;
      for (std::size_t j = 0; j < k; ++j) {
        rm *= 1.0 - a[j].real();
        rp *= 1.0 + ((j % 2 == 0) ? 1.0 : -1.0) * a[j].real();
        scale *= 1.0 + std::abs(a[j]);
      }
      // A terminal +-1 zeroes one side exactly; measure against the product scale.
      auto err = [scale](cplx x, cplx y) { return std::abs(x - y) / std::max({std::abs(x), std::abs(y), scale}); };
      if (k <= kin) ends.add(std::max(err(lm, rm), err(lp, rp)));
      ends.add(std::max(err(poly_eval(phi[k], 1.0), rm),
                        err(poly_eval(phi[k], -1.0), ((k % 2 == 0) ? 1.0 : -1.0) * rp)));
    }
    rep.checks.push_back(ends.check);
  }

  if (mu) {
    if (mu->size() != n) throw DomainError("identity_suite: measure size mismatch");
    Acc norm_acc("norm_products");
    for (std::size_t k = 0; k <= kin; ++k) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += mu->weights[j] * std::norm(poly_eval(phi[k], mu->nodes[j]));
      norm_acc.add(rel_err(s, norms[k]));
    }
    rep.checks.push_back(norm_acc.check);
  }

  Acc cd("christoffel_darboux");
  for (std::size_t k = 1; k <= kin; ++k) {
    const double nk = std::sqrt(norms[k]);
    const Poly pk = phi[k];
    const Poly pks = reversed_poly(pk);
    for (cplx z : probes)
      for (cplx zeta : probes) {
        cplx lhs = 0.0;
        for (std::size_t j = 0; j < k; ++j)
          lhs += poly_eval(phi[j], z) * std::conj(poly_eval(phi[j], zeta)) / norms[j];
        const cplx rhs = (poly_eval(pks, z) * std::conj(poly_eval(pks, zeta)) -
                          poly_eval(pk, z) * std::conj(poly_eval(pk, zeta))) /
                         (nk * nk) / (1.0 - z * std::conj(zeta));
        cd.add(rel_err(lhs, rhs));
      }
  }
  rep.checks.push_back(cd.check);

  Acc cauchy("cauchy_determinant");
  {
    const std::vector<cplx> pts(probes.begin(), probes.end());
    cauchy.add(rel_err(cauchy_det(pts), cauchy_rhs(pts)));
    for (std::size_t k = 1; k <= kin; ++k) cauchy.add(rel_err(cauchy_det(roots[k]), cauchy_rhs(roots[k])));
  }
  rep.checks.push_back(cauchy.check);

  if (mu && full) {
    Acc disc("discriminant_weights");
    double lhs = 0.0;
    for (std::size_t j = 0; j + 2 <= n; ++j)
      lhs += static_cast<double>(n - j - 1) * std::log1p(-std::norm(a[j]));
    double rhs = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      rhs += std::log(mu->weights[j]);
      for (std::size_t s = j + 1; s < n; ++s) rhs += 2.0 * std::log(std::abs(mu->nodes[s] - mu->nodes[j]));
    }
    disc.add(log_rel_err(lhs - rhs));
    rep.checks.push_back(disc.check);
  }

  Acc dbl("root_double_product");
  for (std::size_t k = 1; k <= kin; ++k) {
    double lhs = 0.0;
    for (std::size_t j = 0; j < k; ++j) lhs += static_cast<double>(j + 1) * std::log1p(-std::norm(a[j]));
    lcplx rhs = 0.0L;
    for (lcplx zj : roots_ext[k])
      for (lcplx zs : roots_ext[k]) rhs += std::log(1.0L - zj * std::conj(zs));
    dbl.add(log_rel_err(cplx(static_cast<double>(rhs.real()), static_cast<double>(rhs.imag())) - lhs));
  }
  rep.checks.push_back(dbl.check);

  return rep;
}

}  // namespace cmvrmt
