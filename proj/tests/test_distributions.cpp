#include <doctest.h>

#include "cmvrmt/distributions.hpp"
#include "cmvrmt/haar.hpp"
#include "cmvrmt/quaternion.hpp"
#include "cmvrmt/stats.hpp"

using namespace cmvrmt;

TEST_CASE("sample_beta_sym") {
  Rng rng(30, 0);
  std::size_t plus = 0;
  for (int i = 0; i < 2000; ++i) {
    const double x = sample_beta_sym(0.0, 0.0, rng);
    CHECK(std::abs(x) == 1.0);
    plus += x > 0;
  }
  CHECK(chi2_counts({plus, 2000 - plus}, {0.5, 0.5}).pass);
  CHECK(sample_beta_sym(0.0, 2.0, rng) == 1.0);
  CHECK(sample_beta_sym(2.0, 0.0, rng) == -1.0);

  std::vector<double> u(100000);
  for (auto& x : u) x = sample_beta_sym(1.0, 1.0, rng);
  const auto ks = ks_one_sample(u, uniform_cdf(-1.0, 1.0));
  CHECK(ks.pass);
  CHECK(ks.statistic < 0.006);

  std::vector<double> b(50000);
  for (auto& x : b) x = sample_beta_sym(2.5, 2.5, rng);
  std::vector<double> sq(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) sq[i] = b[i] * b[i];
  CHECK(std::abs(mean(b)) < 4 * standard_error(b));
  CHECK(std::abs(mean(sq) - 1.0 / 6.0) < 4 * standard_error(sq));
  CHECK(ks_one_sample(b, beta_sym_cdf(2.5, 2.5)).pass);

  std::vector<double> skew(20000);
  for (auto& x : skew) x = sample_beta_sym(1.5, 3.0, rng);
  CHECK(ks_one_sample(skew, beta_sym_cdf(1.5, 3.0)).pass);
  CHECK(mean(skew) > 0.0);
}

TEST_CASE("sample_theta") {
  Rng rng(31, 0);
  for (int i = 0; i < 100; ++i) CHECK(std::abs(std::abs(sample_theta(1.0, rng)) - 1.0) < 1e-15);
  std::vector<double> r2(20000), phase(20000);
  for (std::size_t i = 0; i < r2.size(); ++i) {
    const cplx z = sample_theta(5.0, rng);
    r2[i] = std::norm(z);
    phase[i] = std::arg(z);
  }
  CHECK(std::abs(mean(r2) - 1.0 / 3.0) < 4 * standard_error(r2));
  CHECK(ks_one_sample(r2, beta_cdf(1.0, 2.0)).pass);
  CHECK(ks_one_sample(phase, uniform_cdf(-kPi, kPi)).pass);
  // Theta(3) is uniform on the disk
  std::vector<double> d(20000);
  for (auto& x : d) x = std::norm(sample_theta(3.0, rng));
  CHECK(ks_one_sample(d, uniform_cdf()).pass);
}

TEST_CASE("sample_upsilon") {
  Rng rng(32, 0);
  for (int i = 0; i < 200; ++i) {
    const Mat2 u = sample_upsilon(3.0, rng);
    CHECK(max_abs(u.adjoint() * u - Mat2::Identity()) < 1e-14);
    CHECK(std::abs(u.determinant() - 1.0) < 1e-14);
  }
  std::vector<double> r2(20000);
  for (auto& x : r2) {
    const Mat2 u = sample_upsilon(5.0, rng);
    CHECK(u(1, 1) == std::conj(u(0, 0)));
    CHECK(u(1, 0) == -std::conj(u(0, 1)));
    x = std::norm(u(0, 0)) + std::norm(u(0, 1));
  }
  CHECK(ks_one_sample(r2, beta_cdf(2.0, 1.0)).pass);
  CHECK_THROWS_AS(sample_upsilon(2.0, rng), DomainError);
}

TEST_CASE("simplex pushforwards") {
  Rng rng(33, 0);
  const auto one = sample_simplex_pushforward(SimplexKind::A, 1, rng);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == doctest::Approx(1.0).epsilon(1e-15));

  std::vector<double> b(20000), e(20000);
  for (std::size_t i = 0; i < b.size(); ++i) {
    b[i] = sample_simplex_pushforward(SimplexKind::B, 2, rng)[0];
    e[i] = sample_simplex_pushforward(SimplexKind::E, 2, rng)[0];
  }
  CHECK(ks_one_sample(b, uniform_cdf()).pass);
  CHECK(ks_one_sample(e, beta_cdf(2.0, 2.0)).pass);

  for (auto [kind, n, len] : {std::tuple{SimplexKind::A, 4, 4}, std::tuple{SimplexKind::B, 3, 3},
                              std::tuple{SimplexKind::C, 3, 4}, std::tuple{SimplexKind::D, 3, 4},
                              std::tuple{SimplexKind::E, 3, 3}}) {
    const auto w = sample_simplex_pushforward(kind, static_cast<std::size_t>(n), rng);
    REQUIRE(w.size() == static_cast<std::size_t>(len));
    double s = 0.0;
    for (double x : w) {
      CHECK(x > 0.0);
      s += x;
    }
    CHECK(std::abs(s - 1.0) < 1e-14);
  }
  // C: the single-coordinate weights are Beta(1/2, n - 1/2)
  std::vector<double> c(20000);
  for (auto& x : c) x = sample_simplex_pushforward(SimplexKind::C, 3, rng).back();
  CHECK(ks_one_sample(c, beta_cdf(0.5, 2.5)).pass);
}

TEST_CASE("Haar samplers") {
  Rng rng(34, 0);
  std::vector<double> phase(20000);
  for (auto& x : phase) x = std::arg(sample_haar(Group::U, 1, rng)(0, 0));
  CHECK(ks_one_sample(phase, uniform_cdf(-kPi, kPi)).pass);

  std::size_t pos = 0;
  const std::size_t total = 4000;
  for (std::size_t i = 0; i < total; ++i) {
    const CMatrix o = sample_haar(Group::O, 2, rng);
    CHECK(max_abs(CMatrix(o.imag().cast<cplx>())) == 0.0);
    pos += o.determinant().real() > 0.0;
  }
  const double sigma = std::sqrt(0.25 / total);
  CHECK(std::abs(static_cast<double>(pos) / total - 0.5) < 3 * sigma);

  for (std::size_t n : {1u, 2u, 4u}) {
    const CMatrix u = sample_haar(Group::USp, n, rng);
    CHECK(max_abs(u.adjoint() * u - CMatrix::Identity(2 * n, 2 * n)) < 1e-12);
    CHECK(max_abs(dual(u) * u - CMatrix::Identity(2 * n, 2 * n)) < 1e-12);
    Eigen::ComplexEigenSolver<CMatrix> es(u, false);
    const CVector ev = es.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
      double best = 1e9;
      for (Eigen::Index j = 0; j < ev.size(); ++j) best = std::min(best, std::abs(ev(j) - std::conj(ev(i))));
      CHECK(best < 1e-10);
    }
  }

  const CMatrix coe = sample_coe(5, rng);
  CHECK(max_abs(CMatrix(coe - coe.transpose())) < 1e-14);
  CHECK(max_abs(coe.adjoint() * coe - CMatrix::Identity(5, 5)) < 1e-12);
  const CMatrix cse = sample_cse(3, rng);
  CHECK(is_self_dual(cse, 1e-12));
  CHECK(max_abs(cse.adjoint() * cse - CMatrix::Identity(6, 6)) < 1e-12);
}
