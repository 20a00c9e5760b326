#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "cmvrmt/densities.hpp"
#include "test_support.hpp"

using namespace cmvrmt;

namespace {

double integrate(const std::function<double(double)>& f, double lo, double hi) {
  static thread_local boost::math::quadrature::tanh_sinh<double> ts(8);
  return ts.integrate(f, lo, hi, 1e-9);
}

// Integral over m in (0, 1) of f(m, 1 - m), both arguments accurate near the ends.
double integrate_pair(const std::function<double(double, double)>& f) {
  static thread_local boost::math::quadrature::tanh_sinh<double> ts(8);
  return ts.integrate([&](double x, double xc) { return f(x, xc > 0.0 ? xc : 1.0 - x); }, 0.0, 1.0, 1e-10);
}

// Trapezoid rule for smooth 2 pi-periodic integrands.
double periodic(const std::function<double(double)>& f, int points = 256) {
  double s = 0.0;
  for (int k = 0; k < points; ++k) s += f(2.0 * kPi * k / points);
  return 2.0 * kPi * s / points;
}

EigenCloud real_cloud(std::vector<cplx> v, int L, int M) {
  EigenCloud c;
  c.values = std::move(v);
  c.stratum = Stratum{L, M};
  return c;
}

double gk(const std::function<double(double)>& f, double lo, double hi) {
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, lo, hi, 8, 1e-10);
}

// Truncated circular density over D^2 via rotation invariance in the first
// point; radii r = sin u.
double trunc_circular_mass_n2(double beta) {
  return 2.0 * kPi * gk([&](double u1) {
    const double r1 = std::sin(u1);
    return r1 * std::cos(u1) * gk([&](double u2) {
      const double r2 = std::sin(u2);
      if (r1 >= 1.0 || r2 >= 1.0) return 0.0;
      return r2 * std::cos(u2) * periodic([&](double phi) {
        return std::exp(log_density_trunc_circular({r1, std::polar(r2, phi)}, beta));
      });
    }, 0.0, kPi / 2.0);
  }, 0.0, kPi / 2.0);
}

// Truncated orthogonal mass: ordered reals in D_{2,0} plus one pair in D_{0,1} with 2 dx dy.
double trunc_orthogonal_mass_n2(double beta, double a, double b) {
  const double reals = integrate([&](double x1) {
    return integrate([&](double x2) {
      if (x1 <= -1.0 || x2 >= 1.0 || x1 >= x2) return 0.0;
      return std::exp(log_density_trunc_orthogonal(real_cloud({x1, x2}, 2, 0), beta, a, b));
    }, x1, 1.0);
  }, -1.0, 1.0);
  const double pairs = integrate([&](double x) {
    const double h = std::sqrt(1.0 - x * x);
    return integrate([&](double y) {
      const cplx z(x, y);
      if (std::abs(z) >= 1.0) return 0.0;
      return 2.0 * std::exp(log_density_trunc_orthogonal(real_cloud({z, std::conj(z)}, 0, 1), beta, a, b));
    }, 0.0, h);
  }, -1.0, 1.0);
  return reals + pairs;
}

}  // namespace

TEST_CASE("truncated circular density values") {
  CHECK(log_density_trunc_circular({cplx(0.3, -0.2)}, 2.0) == doctest::Approx(-std::log(kPi)).epsilon(1e-14));
  CHECK(log_density_trunc_circular({0.0}, 4.0) == doctest::Approx(std::log(2.0 / kPi)).epsilon(1e-14));
  CHECK(log_density_trunc_circular({0.2, 0.2}, 2.0) == -std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(log_density_trunc_circular({1.0}, 2.0), DomainError);
  CHECK_THROWS_AS(log_density_trunc_circular({0.1}, 0.0), DomainError);

  Rng rng(40, 0);
  for (double beta : {0.7, 2.0, 3.5}) {
    const auto z = testing::disk_points(5, rng);
    double prod = std::pow(beta / (2.0 * kPi), 5.0);
    for (const cplx& x : z)
      for (const cplx& y : z) prod *= std::pow(std::abs(1.0 - x * std::conj(y)), beta / 2.0 - 1.0);
    for (std::size_t k = 0; k < 5; ++k)
      for (std::size_t j = 0; j < k; ++j) prod *= std::norm(z[k] - z[j]);
    CHECK(log_density_trunc_circular(z, beta) == doctest::Approx(std::log(prod)).epsilon(1e-12));

    auto perm = z;
    std::swap(perm[0], perm[3]);
    CHECK(log_density_trunc_circular(perm, beta) == doctest::Approx(log_density_trunc_circular(z, beta)));
  }
}

TEST_CASE("truncated circular density integrates to one") {
  for (double beta : {1.0, 2.0, 4.0}) {
    const double one = 2.0 * kPi * integrate([&](double r) {
      return r * std::exp(log_density_trunc_circular({r}, beta));
    }, 0.0, 1.0);
    CHECK(one == doctest::Approx(1.0).epsilon(1e-8));
  }
  for (double beta : {1.0, 2.0, 4.0}) CHECK(trunc_circular_mass_n2(beta) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("normalization constants") {
  const auto t1 = normalization_table({1, 2.0, -0.5, -0.5});
  CHECK(std::exp(t1.log_P) == doctest::Approx(kPi).epsilon(1e-14));
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto t = normalization_table({n, 2.0});
    CHECK(t.log_Zp == doctest::Approx(-std::lgamma(static_cast<double>(n))).epsilon(1e-12));
    CHECK(t.log_K == t.log_Zp);
    CHECK(t.log_Z == doctest::Approx(std::lgamma(n + 1.0)).epsilon(1e-12));  // Z_{n,2} = n!
  }
  CHECK(std::exp(normalization_table({2, 4.0}).log_Z) == doctest::Approx(6.0));
  CHECK_THROWS_AS(normalization_table({0, 2.0}), DomainError);
  CHECK_THROWS_AS(normalization_table({2, 2.0, -1.5, 0.0}), DomainError);
}

TEST_CASE("truncated orthogonal density") {
  for (double x : {-0.7, 0.0, 0.3}) {
    const double v = log_density_trunc_orthogonal(real_cloud({x}, 1, 0), 2.0, -0.5, -0.5);
    CHECK(v == doctest::Approx(-std::log(kPi * std::sqrt(1.0 - x * x))).epsilon(1e-13));
  }
  const double x = 0.4;
  const double two = log_density_trunc_orthogonal(real_cloud({-x, x}, 2, 0), 2.0, -0.5, -0.5);
  const double log_p2 = normalization_table({2, 2.0, -0.5, -0.5}).log_P;
  CHECK(two == doctest::Approx(std::log(2.0 * x) - std::log(1.0 - x * x) - log_p2).epsilon(1e-13));

  const cplx z(0.2, 0.5);
  const auto pair = real_cloud({0.1, z, std::conj(z)}, 1, 1);
  const auto swapped = real_cloud({0.1, std::conj(z), z}, 1, 1);
  CHECK_THROWS_AS(log_density_trunc_orthogonal(swapped, 2.0, 0.0, 0.0), DomainError);
  EigenCloud plain;
  plain.values = pair.values;
  CHECK_THROWS_AS(log_density_trunc_orthogonal(plain, 2.0, 0.0, 0.0), DomainError);
  CHECK(std::isfinite(log_density_trunc_orthogonal(pair, 2.0, 0.0, 0.0)));
  CHECK(log_density_trunc_orthogonal(real_cloud({0.3, 0.3}, 2, 0), 2.0, 0.0, 0.0) ==
        -std::numeric_limits<double>::infinity());

  for (auto [beta, a, b] : {std::tuple{2.0, -0.5, -0.5}, std::tuple{1.0, 0.3, -0.2}, std::tuple{4.0, 0.0, 0.5}}) {
    const double one = integrate([&](double t) {
      return std::exp(log_density_trunc_orthogonal(real_cloud({t}, 1, 0), beta, a, b));
    }, -1.0, 1.0);
    CHECK(one == doctest::Approx(1.0).epsilon(1e-8));
  }
  for (auto [beta, a, b] : {std::tuple{2.0, 0.0, 0.0}, std::tuple{4.0, 0.3, -0.2}, std::tuple{1.0, 0.0, 0.0}})
    CHECK(trunc_orthogonal_mass_n2(beta, a, b) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("spectral circular density") {
  CHECK(log_density_spectral_circular({1.0}, {1.0}, 2.0) == doctest::Approx(-std::log(2.0 * kPi)).epsilon(1e-14));
  CHECK_THROWS_AS(log_density_spectral_circular({1.0, 2.0}, {0.5, 0.6}, 2.0), DomainError);
  CHECK_THROWS_AS(log_density_spectral_circular({1.0, 1.0}, {0.5, 0.5}, 2.0), DomainError);
  for (double beta : {1.0, 2.0, 4.0}) {
    const double mass = 2.0 * kPi * integrate([&](double phi) {
      return integrate_pair([&](double m, double mc) {
        return std::exp(log_density_spectral_circular({0.0, phi}, {m, mc}, beta));
      });
    }, 0.0, 2.0 * kPi);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-7));
  }
}

TEST_CASE("spectral orthogonal densities") {
  // One angle, case A: the weight is fixed at 1.
  for (auto [beta, a, b] : {std::tuple{2.0, -0.5, -0.5}, std::tuple{1.5, 0.3, -0.2}}) {
    const double mass = integrate([&](double t) {
      return std::exp(log_density_spectral_orthogonal({t}, {1.0}, OrthoCase::A, beta, a, b));
    }, 0.0, kPi);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-8));
  }
  // Haar O(2) on SO(2): angle uniform on (0, pi).
  CHECK(std::exp(log_density_spectral_orthogonal({0.8}, {1.0}, OrthoCase::A, 2.0)) ==
        doctest::Approx(1.0 / kPi).epsilon(1e-13));

  // Case B without angles: weights at +-1 only.
  for (double beta : {1.0, 2.0, 4.0}) {
    const double mass = integrate_pair([&](double m, double mc) {
      return std::exp(log_density_spectral_orthogonal({}, {m, mc}, OrthoCase::B, beta));
    });
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-7));
  }

  for (OrthoCase c : {OrthoCase::C, OrthoCase::D})
    for (double beta : {1.0, 2.0, 4.0}) {
      const double mass = integrate([&](double t) {
        return integrate_pair([&](double m, double mc) {
          return std::exp(log_density_spectral_orthogonal({t}, {m, mc}, c, beta));
        });
      }, 1e-20, kPi);
      CHECK(mass == doctest::Approx(1.0).epsilon(1e-7));
    }

  for (double beta : {2.0, 4.0}) {
    const double mass = integrate([&](double t1) {
      return integrate([&](double t2) {
        if (t1 == t2) return 0.0;
        return std::exp(log_density_spectral_orthogonal({t1, t2}, {0.5, 0.5}, OrthoCase::A, beta, 0.2, -0.1) -
                        (beta / 2.0 - 1.0) * 2.0 * std::log(0.5)) *
               std::tgamma(beta / 2.0) * std::tgamma(beta / 2.0) / std::tgamma(beta);
      }, 0.0, kPi);
    }, 0.0, kPi);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
  }

  // Case B, one angle: weights (mu_1, mu_2, mu_3) with the last two at +-1.
  for (double beta : {2.0, 4.0}) {
    boost::math::quadrature::tanh_sinh<double> ts(7);
    const double mass = integrate([&](double t) {
      return integrate([&](double m1) {
        const double rest = 1.0 - m1;
        return ts.integrate([&](double m2, double xc) {
          const double m3 = xc > 0.0 ? xc : rest - m2;
          if (!(m3 > 0.0) || !(m2 > 0.0)) return 0.0;
          const double tot = m1 + m2 + m3;
          return std::exp(log_density_spectral_orthogonal({t}, {m1 / tot, m2 / tot, m3 / tot}, OrthoCase::B, beta));
        }, 0.0, rest, 1e-8);
      }, 0.0, 1.0);
    }, 0.0, kPi);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
  }

  // At beta = 2 the case B weights at +-1 enter as (mu_n mu_{n+1})^{-1/2}.
  const double t = 1.1;
  const double d1 = log_density_spectral_orthogonal({t}, {0.4, 0.3, 0.3}, OrthoCase::B, 2.0);
  const double d2 = log_density_spectral_orthogonal({t}, {0.4, 0.1, 0.5}, OrthoCase::B, 2.0);
  CHECK(d1 - d2 == doctest::Approx(-0.5 * std::log(0.09 / 0.05)).epsilon(1e-13));

  CHECK_THROWS_AS(log_density_spectral_orthogonal({1.0}, {0.5, 0.5}, OrthoCase::A, 2.0), DomainError);
  CHECK_THROWS_AS(log_density_spectral_orthogonal({4.0}, {1.0}, OrthoCase::A, 2.0), DomainError);
}

TEST_CASE("coupled densities") {
  Rng rng(41, 0);
  const auto z = testing::disk_points(4, rng);
  const WeightFn one = [](double) { return 1.0; };
  CHECK(log_density_nonideal(z, 2.0, one) == log_density_trunc_circular(z, 2.0));
  double r = 1.0;
  for (const cplx& x : z) r *= std::abs(x);
  const WeightFn lin = [](double s) { return 2.0 * s; };
  CHECK(log_density_nonideal(z, 2.0, lin) ==
        doctest::Approx(log_density_trunc_circular(z, 2.0) + std::log(2.0 * r)).epsilon(1e-13));

  const auto c = real_cloud({-0.3, 0.5}, 2, 0);
  CHECK(log_density_nonideal(c, 3.0, one) == log_density_trunc_orthogonal(c, 3.0, -0.25, -0.25));
  const WeightFn neg = [](double) { return -1.0; };
  CHECK_THROWS_AS(log_density_nonideal(z, 2.0, neg), DomainError);
}

TEST_CASE("log-gas energy") {
  const auto p = loggas_params_for(2.0, 0.3);
  CHECK(p.gamma() == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(p.alpha() == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(log_gas_energy({0.0}, p) == 0.0);

  const double r = 0.4;
  const double c = 1.0 / (2.0 * kPi * p.eps1);
  const double expect = -c * (std::log(2.0 * r) + p.alpha() * std::log(1.0 + r * r)) -
                        2.0 * p.alpha() / (4.0 * kPi * p.eps1) * std::log(1.0 - r * r);
  CHECK(log_gas_energy({r, -r}, p) == doctest::Approx(expect).epsilon(1e-14));
  CHECK(log_gas_energy({r, r}, p) == std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(loggas_params_for(2.0, -1.0), DomainError);

  Rng rng(42, 0);
  for (double beta : {1.5, 3.0}) {
    const auto q = loggas_params_for(2.0, beta / 2.0 - 1.0);
    std::vector<double> diff;
    for (int t = 0; t < 50; ++t) {
      const auto z = testing::disk_points(3, rng);
      diff.push_back(-log_gas_energy(z, q) / q.kT - log_density_trunc_circular(z, beta));
    }
    for (double d : diff) CHECK(d == doctest::Approx(diff[0]).epsilon(1e-12));
  }
}
