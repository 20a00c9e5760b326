#include <doctest.h>

#include "cmvrmt/distributions.hpp"
#include "cmvrmt/stats.hpp"

using namespace cmvrmt;

TEST_CASE("critical values") {
  std::vector<double> x(400);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = (i + 0.5) / x.size();
  const auto r = ks_one_sample(x, uniform_cdf());
  CHECK(r.threshold == doctest::Approx(1.9495 / (20.0 + 0.12 + 0.11 / 20.0)));
  CHECK(r.statistic == doctest::Approx(0.5 / 400.0));
  CHECK(r.pass);
  const auto t = ks_two_sample(std::vector<double>(100, 0.0), std::vector<double>(400, 0.0));
  CHECK(t.threshold == doctest::Approx(1.9495 * std::sqrt(500.0 / 40000.0)));
}

TEST_CASE("null calibration") {
  int ks_pass = 0, ks2_pass = 0, chi_pass = 0;
  for (std::uint64_t rep = 0; rep < 50; ++rep) {
    Rng rng = make_stream(77, rep);
    std::vector<double> a(2000), b(2000);
    for (auto& v : a) v = sample_beta(2.0, 3.0, rng);
    for (auto& v : b) v = sample_beta(2.0, 3.0, rng);
    ks_pass += ks_one_sample(a, beta_cdf(2.0, 3.0)).pass;
    ks2_pass += ks_two_sample(a, b).pass;
    chi_pass += chi2_bins(a, {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.7, 1.0}, beta_cdf(2.0, 3.0)).pass;
  }
  CHECK(ks_pass >= 48);
  CHECK(ks2_pass >= 48);
  CHECK(chi_pass >= 48);
}

TEST_CASE("alternatives are rejected") {
  CHECK_FALSE(ks_one_sample(std::vector<double>(200, 0.5), uniform_cdf()).pass);
  Rng rng(78, 0);
  std::vector<double> a(5000), b(5000);
  for (auto& v : a) v = sample_beta(2.0, 2.0, rng);
  for (auto& v : b) v = sample_beta(2.5, 2.0, rng);
  CHECK_FALSE(ks_two_sample(a, b).pass);
  CHECK_FALSE(ks_one_sample(a, uniform_cdf()).pass);
  CHECK_FALSE(chi2_counts({600, 400}, {0.5, 0.5}).pass);
  CHECK(chi2_counts({510, 490}, {0.5, 0.5}).pass);
}

TEST_CASE("domain checks and helpers") {
  CHECK_THROWS_AS(ks_one_sample(std::vector<double>(99, 0.5), uniform_cdf()), DomainError);
  CHECK_THROWS_AS(chi2_counts({50, 50}, {0.3, 0.3}), DomainError);
  CHECK(arcsine_cdf()(0.0) == doctest::Approx(0.5));
  CHECK(beta_sym_cdf(1.0, 1.0)(0.5) == doctest::Approx(0.75));
  CHECK(beta_cdf(1.0, 3.0)(0.5) == doctest::Approx(1.0 - 0.125));
  CHECK(mean({1.0, 2.0, 3.0}) == 2.0);
  CHECK(standard_error({1.0, 2.0, 3.0}) == doctest::Approx(1.0 / std::sqrt(3.0)));
  CHECK(threshold_report("x", 1.0, 2.0).pass);
  CHECK_FALSE(threshold_report("x", std::nan(""), 2.0).pass);
}
