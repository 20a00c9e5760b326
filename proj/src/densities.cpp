#include "cmvrmt/densities.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include <boost/math/special_functions/gamma.hpp>

namespace cmvrmt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLn2 = std::numbers::ln2;

double lg(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("normalization constant: gamma argument out of range");
  return boost::math::lgamma(x);
}

double log_factorial(std::size_t n) { return lg(static_cast<double>(n) + 1.0); }

void require_beta(double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("beta must be positive");
}

void require_disk(const std::vector<cplx>& zs) {
  for (const cplx& z : zs)
    if (!(std::abs(z) < 1.0)) throw DomainError("point outside the open unit disk");
}

// sum_{j,k} log|1 - z_j conj(z_k)|
double log_double_product(const std::vector<cplx>& zs) {
  double s = 0.0;
  for (const cplx& zj : zs)
    for (const cplx& zk : zs) s += std::log(std::abs(1.0 - zj * std::conj(zk)));
  return s;
}

// sum_{j<k} log|z_k - z_j|
double log_vandermonde(const std::vector<cplx>& zs) {
  double s = 0.0;
  for (std::size_t k = 0; k < zs.size(); ++k)
    for (std::size_t j = 0; j < k; ++j) s += std::log(std::abs(zs[k] - zs[j]));
  return s;
}

double log_vandermonde_cos(const std::vector<double>& thetas) {
  double s = 0.0;
  for (std::size_t k = 0; k < thetas.size(); ++k)
    for (std::size_t j = 0; j < k; ++j)
      s += std::log(4.0 * std::abs(std::sin(0.5 * (thetas[k] + thetas[j])))) +
           std::log(std::abs(std::sin(0.5 * (thetas[k] - thetas[j]))));
  return s;
}

double log_weights(const std::vector<double>& mus, std::size_t count, double exponent) {
  double s = 0.0;
  for (std::size_t j = 0; j < count; ++j) s += exponent * std::log(mus[j]);
  return s;
}

void require_simplex(const std::vector<double>& mus) {
  double total = 0.0;
  for (double m : mus) {
    if (!(m > 0.0)) throw DomainError("weights must be positive");
    total += m;
  }
  if (std::abs(total - 1.0) > 1e-10) throw DomainError("weights must sum to 1");
}

double log_C(std::size_t n, double beta, double a, double b) {
  const double nd = static_cast<double>(n);
  double s = log_factorial(n) + (nd * (a + b + 1.0) + beta * nd * (nd - 1.0)) * kLn2;
  for (std::size_t j = 0; j < n; ++j) {
    const double jd = static_cast<double>(j);
    s += lg(a + 1.0 + 0.5 * beta * jd) + lg(b + 1.0 + 0.5 * beta * jd) + lg(0.5 * beta * (jd + 1.0));
    s -= lg(a + b + 2.0 + 0.5 * beta * (nd - 1.0 + jd)) + lg(0.5 * beta);
  }
  return s;
}

double log_gamma_ratio_product(std::size_t upto, double beta) {
  double s = 0.0;
  for (std::size_t j = 1; j <= upto; ++j) {
    const double x = 0.25 * beta * static_cast<double>(j);
    s += lg(x) - lg(0.5 + x);
  }
  return s;
}

double log_P(std::size_t n, double beta, double a, double b) {
  const double nd = static_cast<double>(n);
  double s = (nd * (a + b + 1.0) + 0.25 * beta * nd * (nd - 1.0)) * kLn2;
  const std::size_t half = n / 2;
  for (std::size_t j = 0; j <= (n - 1) / 2; ++j) {
    const double jd = static_cast<double>(j);
    s += lg(a + 1.0 + 0.5 * beta * jd) + lg(b + 1.0 + 0.5 * beta * jd);
    s -= lg(a + b + 2.0 + 0.5 * beta * (static_cast<double>(half) + jd));
  }
  for (std::size_t j = 1; j <= half; ++j) s += lg(0.5 * beta * static_cast<double>(j));
  return s;
}

double log_abs_prod(const std::vector<cplx>& zs) {
  double s = 0.0;
  for (const cplx& z : zs) s += std::log(std::abs(z));
  return s;
}

double log_weight_factor(const WeightFn& weight, double r) {
  const double w = weight(r);
  if (!std::isfinite(w) || w < 0.0) throw DomainError("weight function returned a non-finite or negative value");
  return std::log(w);
}

}  // namespace

void LogGasParams::validate() const {
  if (!std::isfinite(eps1) || !std::isfinite(eps2) || eps1 == 0.0 || eps1 + eps2 == 0.0)
    throw DomainError("log-gas: invalid permittivities");
  if (!(kT > 0.0) || !std::isfinite(kT)) throw DomainError("log-gas: temperature must be positive");
}

LogGasParams loggas_params_for(double gamma, double alpha, double eps1) {
  if (!(gamma > 0.0) || alpha == -1.0 || eps1 == 0.0) throw DomainError("log-gas: exponents not realizable");
  LogGasParams p;
  p.eps1 = eps1;
  p.eps2 = eps1 * (1.0 - alpha) / (1.0 + alpha);
  p.kT = 1.0 / (2.0 * kPi * eps1 * gamma);
  p.validate();
  return p;
}

NormalizationTable normalization_table(const NormalizationParams& p) {
  require_beta(p.beta);
  if (p.n == 0) throw DomainError("normalization_table: n must be positive");
  if (!(p.a > -1.0) || !(p.b > -1.0)) throw DomainError("normalization_table: a, b must exceed -1");
  const double n = static_cast<double>(p.n);
  const double beta = p.beta;
  NormalizationTable t;
  t.log_Z = lg(0.5 * beta * n + 1.0) - n * lg(0.5 * beta + 1.0);
  t.log_Zp = n * lg(0.5 * beta) - lg(0.5 * beta * n);
  t.log_C = log_C(p.n, beta, p.a, p.b);
  t.log_K = t.log_Zp;
  t.log_L = (n - 1.0) * lg(0.5 * beta) + 2.0 * lg(0.25 * beta) - lg(0.5 * beta * n);
  t.log_D = -t.log_L + log_factorial(p.n - 1) + (n - 0.5) * std::log(kPi) -
            ((2.0 * n - 1.0) * 0.5 * beta - n) * kLn2 + log_gamma_ratio_product(2 * p.n - 1, beta);
  t.log_M = n * lg(0.5 * beta) + lg(0.25 * beta) - lg(0.5 * beta * (n + 0.5));
  t.log_E = -t.log_M + log_factorial(p.n) + n * std::log(kPi) - (0.5 * beta - 1.0) * n * kLn2 +
            log_gamma_ratio_product(2 * p.n, beta);
  t.log_P = log_P(p.n, beta, p.a, p.b);
  return t;
}

double log_density_trunc_circular(const std::vector<cplx>& zs, double beta) {
  require_beta(beta);
  require_disk(zs);
  const double n = static_cast<double>(zs.size());
  const double vdm = log_vandermonde(zs);
  if (vdm == -kInf) return -kInf;
  return n * (std::log(beta) - std::log(2.0 * kPi)) + (0.5 * beta - 1.0) * log_double_product(zs) + 2.0 * vdm;
}

double log_density_trunc_orthogonal(const EigenCloud& cloud, double beta, double a, double b) {
  require_beta(beta);
  if (!cloud.stratum) throw DomainError("log_density_trunc_orthogonal: cloud is not stratified");
  const auto& zs = cloud.values;
  const std::size_t L = static_cast<std::size_t>(cloud.stratum->real_count);
  const std::size_t M = static_cast<std::size_t>(cloud.stratum->pair_count);
  if (L + 2 * M != zs.size() || zs.empty()) throw DomainError("log_density_trunc_orthogonal: stratum does not match cloud");
  for (std::size_t j = 0; j < L; ++j)
    if (zs[j].imag() != 0.0) throw DomainError("log_density_trunc_orthogonal: real stratum has imaginary parts");
  for (std::size_t j = 0; j < M; ++j)
    if (zs[L + M + j] != std::conj(zs[L + j]) || !(zs[L + j].imag() > 0.0))
      throw DomainError("log_density_trunc_orthogonal: cloud is not conjugation-closed");
  require_disk(zs);
  const double vdm = log_vandermonde(zs);
  if (vdm == -kInf) return -kInf;
  const double ea = a + 0.5 - 0.25 * beta;
  const double eb = b + 0.5 - 0.25 * beta;
  double s = (0.25 * beta - 0.5) * log_double_product(zs) + vdm;
  for (const cplx& z : zs) s += ea * std::log(std::abs(1.0 - z)) + eb * std::log(std::abs(1.0 + z));
  return s - normalization_table({zs.size(), beta, a, b}).log_P;
}

double log_density_spectral_circular(const std::vector<double>& thetas, const std::vector<double>& mus,
                                     double beta) {
  require_beta(beta);
  const std::size_t n = thetas.size();
  if (n == 0 || mus.size() != n) throw DomainError("log_density_spectral_circular: need n angles and n weights");
  require_simplex(mus);
  std::vector<cplx> pts;
  for (double t : thetas) {
    if (!(t >= 0.0 && t < 2.0 * kPi)) throw DomainError("log_density_spectral_circular: angle outside [0, 2 pi)");
    pts.push_back(std::polar(1.0, t));
  }
  const double vdm = log_vandermonde(pts);
  if (vdm == -kInf) throw DomainError("log_density_spectral_circular: angles must be distinct");
  const auto t = normalization_table({n, beta});
  const double nd = static_cast<double>(n);
  return -t.log_Z + beta * vdm - nd * std::log(2.0 * kPi) - t.log_Zp + log_weights(mus, n, 0.5 * beta - 1.0);
}

double log_density_spectral_orthogonal(const std::vector<double>& thetas, const std::vector<double>& mus,
                                       OrthoCase c, double beta, double a, double b) {
  require_beta(beta);
  const std::size_t m = thetas.size();
  const std::size_t expected = c == OrthoCase::A ? m : c == OrthoCase::B ? m + 2 : m + 1;
  if (mus.size() != expected || mus.empty()) throw DomainError("log_density_spectral_orthogonal: weight count does not match case");
  require_simplex(mus);
  for (double t : thetas)
    if (!(t > 0.0 && t < kPi)) throw DomainError("log_density_spectral_orthogonal: angle outside (0, pi)");
  const double vdm = log_vandermonde_cos(thetas);
  if (vdm == -kInf) throw DomainError("log_density_spectral_orthogonal: angles must be distinct");

  double e_minus = 0.0, e_plus = 0.0;  // exponents of |1 - cos| and |1 + cos|
  switch (c) {
    case OrthoCase::A: e_minus = a + 0.5; e_plus = b + 0.5; break;
    case OrthoCase::B: e_minus = e_plus = 0.75 * beta - 0.5; break;
    case OrthoCase::C: e_minus = 0.75 * beta - 0.5; e_plus = 0.25 * beta - 0.5; break;
    case OrthoCase::D: e_minus = 0.25 * beta - 0.5; e_plus = 0.75 * beta - 0.5; break;
  }
  // log(1 -+ cos t) = log 2 + 2 log sin(t/2) resp. cos(t/2)
  auto xlog = [](double e, double half) { return e == 0.0 ? 0.0 : e * (kLn2 + 2.0 * std::log(half)); };
  double angles = beta * vdm;
  for (double t : thetas) angles += xlog(e_minus, std::sin(0.5 * t)) + xlog(e_plus, std::cos(0.5 * t));

  const std::size_t n = c == OrthoCase::B ? m + 1 : m;
  if (n == 0) throw DomainError("log_density_spectral_orthogonal: case A needs at least one angle");
  const auto t = normalization_table({n, beta, c == OrthoCase::A ? a : -0.5, c == OrthoCase::A ? b : -0.5});
  switch (c) {
    case OrthoCase::A:
      return angles - t.log_C + log_weights(mus, n, 0.5 * beta - 1.0) - t.log_K;
    case OrthoCase::B:
      return angles - t.log_D + log_weights(mus, n - 1, 0.5 * beta - 1.0) +
             (0.25 * beta - 1.0) * (std::log(mus[n - 1]) + std::log(mus[n])) - t.log_L;
    case OrthoCase::C:
    case OrthoCase::D:
      return angles - t.log_E + log_weights(mus, n, 0.5 * beta - 1.0) + (0.25 * beta - 1.0) * std::log(mus[n]) -
             t.log_M;
  }
  return 0.0;
}

double log_density_nonideal(const std::vector<cplx>& zs, double beta, const WeightFn& weight) {
  const double base = log_density_trunc_circular(zs, beta);
  if (base == -kInf) return base;
  return base + log_weight_factor(weight, std::exp(log_abs_prod(zs)));
}

double log_density_nonideal(const EigenCloud& cloud, double beta, const WeightFn& weight) {
  const double ab = 0.25 * beta - 1.0;
  if (!(ab > -1.0)) throw DomainError("log_density_nonideal: beta must be positive");
  const double base = log_density_trunc_orthogonal(cloud, beta, ab, ab);
  if (base == -kInf) return base;
  return base + log_weight_factor(weight, std::exp(log_abs_prod(cloud.values)));
}

double log_gas_potential(cplx z, cplx z0, const LogGasParams& p) {
  const double c = 1.0 / (2.0 * kPi * p.eps1);
  return -c * std::log(std::abs(z - z0)) - c * p.alpha() * std::log(std::abs(1.0 - z * std::conj(z0)));
}

double log_gas_self_energy(cplx z0, const LogGasParams& p) {
  return -p.alpha() / (4.0 * kPi * p.eps1) * std::log(1.0 - std::norm(z0));
}

double log_gas_energy(const std::vector<cplx>& zs, const LogGasParams& params) {
  params.validate();
  require_disk(zs);
  double h = 0.0;
  for (const cplx& z : zs) h += log_gas_self_energy(z, params);
  for (std::size_t j = 0; j < zs.size(); ++j)
    for (std::size_t k = j + 1; k < zs.size(); ++k) {
      if (zs[j] == zs[k]) return kInf;
      h += log_gas_potential(zs[k], zs[j], params);
    }
  return h;
}

}  // namespace cmvrmt
