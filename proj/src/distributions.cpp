#include "cmvrmt/distributions.hpp"

#include <cmath>
#include <random>

#include "cmvrmt/quaternion.hpp"

namespace cmvrmt {

double standard_normal(Rng& rng) {
  std::normal_distribution<double> d(0.0, 1.0);
  return d(rng);
}

cplx complex_normal(Rng& rng) {
  const double x = standard_normal(rng);
  const double y = standard_normal(rng);
  return cplx(x, y) * std::sqrt(0.5);
}

double sample_beta(double p, double q, Rng& rng) {
  if (!(p > 0.0) || !(q > 0.0)) throw DomainError("sample_beta: parameters must be positive");
  std::gamma_distribution<double> gp(p, 1.0), gq(q, 1.0);
  for (;;) {
    const double x = gp(rng);
    const double y = gq(rng);
    if (x + y > 0.0) return x / (x + y);
  }
}

double sample_beta_sym(double s, double t, Rng& rng) {
  if (!(s >= 0.0) || !(t >= 0.0)) throw DomainError("sample_beta_sym: negative parameter");
  if (s == 0.0 && t == 0.0) return (rng() & 1u) ? 1.0 : -1.0;
  if (s == 0.0) return 1.0;
  if (t == 0.0) return -1.0;
  for (;;) {
    // (1+x)/2 ~ Beta(t, s).
    const double x = 2.0 * sample_beta(t, s, rng) - 1.0;
    if (x > -1.0 && x < 1.0) return x;
  }
}

cplx sample_theta(double nu, Rng& rng) {
  if (!(nu >= 1.0)) throw DomainError("sample_theta: nu must be >= 1");
  const double phase = 2.0 * kPi * rng.uniform01();
  if (nu == 1.0) return std::polar(1.0, phase);
  for (;;) {
    const double r2 = sample_beta(1.0, 0.5 * (nu - 1.0), rng);
    if (r2 < 1.0) return std::polar(std::sqrt(r2), phase);
  }
}

Mat2 sample_upsilon(double nu, Rng& rng) {
  if (!(nu >= 3.0)) throw DomainError("sample_upsilon: nu must be >= 3");
  double g[4];
  double norm = 0.0;
  do {
    norm = 0.0;
    for (double& x : g) {
      x = standard_normal(rng);
      norm += x * x;
    }
  } while (norm == 0.0);
  norm = std::sqrt(norm);
  double radius = 1.0;
  if (nu > 3.0) {
    do radius = std::sqrt(sample_beta(2.0, 0.5 * (nu - 3.0), rng));
    while (!(radius < 1.0));
  }
  const RealQuaternion q{radius * g[0] / norm, radius * g[1] / norm, radius * g[2] / norm,
                         radius * g[3] / norm};
  return complex_embed(q);
}

std::vector<double> sample_simplex_pushforward(SimplexKind kind, std::size_t n, Rng& rng) {
  if (n == 0) throw DomainError("sample_simplex_pushforward: n must be positive");
  std::vector<int> groups;
  switch (kind) {
    case SimplexKind::A: groups.assign(n, 1); break;
    case SimplexKind::B: groups.assign(n, 2); break;
    case SimplexKind::C:
      groups.assign(n - 1, 2);
      groups.push_back(1);
      groups.push_back(1);
      break;
    case SimplexKind::D:
      groups.assign(n, 2);
      groups.push_back(1);
      break;
    case SimplexKind::E: groups.assign(n, 4); break;
  }
  for (;;) {
    std::vector<double> mu;
    mu.reserve(groups.size());
    double total = 0.0;
    for (int g : groups) {
      double s = 0.0;
      for (int i = 0; i < g; ++i) {
        const double x = standard_normal(rng);
        s += x * x;
      }
      mu.push_back(s);
      total += s;
    }
    if (total == 0.0) continue;
    for (double& m : mu) m /= total;
    return mu;
  }
}

}  // namespace cmvrmt
