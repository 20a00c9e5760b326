#include <doctest.h>

#include "cmvrmt/cmv.hpp"
#include "cmvrmt/ensembles.hpp"
#include "cmvrmt/stats.hpp"

using namespace cmvrmt;

namespace {

std::vector<double> alpha0_sq(const EnsembleSpec& s, std::size_t count, std::uint64_t seed) {
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng = make_stream(seed, i);
    out[i] = std::norm(verblunsky_model(s, rng).scalars()[0]);
  }
  return out;
}

}  // namespace

TEST_CASE("coefficient laws") {
  // Theta(nu): |z|^2 ~ Beta(1, (nu - 1) / 2)
  CHECK(ks_one_sample(alpha0_sq(make_spec(Family::CUE, 5), 10000, 1), beta_cdf(1.0, 4.0)).pass);

  auto cb = make_spec(Family::CircularBeta, 3);
  cb.beta = 4.0;
  cb.truncated = true;
  CHECK(ks_one_sample(alpha0_sq(cb, 10000, 2), beta_cdf(1.0, 2.0)).pass);

  for (std::size_t n : {2u, 3u, 6u}) {
    Rng rng(3, n);
    const auto a = verblunsky_model(make_spec(Family::SO, 2 * n), rng);
    CHECK(a.scalars().back() == cplx(-1.0));
    CHECK(a.flavor() == Flavor::Real);
  }
  Rng rng(4, 0);
  CHECK(verblunsky_model(make_spec(Family::CUE, 4), rng).terminal_unimodular());
  auto tr = make_spec(Family::CUE, 4);
  tr.truncated = true;
  const auto t = verblunsky_model(tr, rng);
  for (const cplx& x : t.scalars()) CHECK(std::abs(x) < 1.0);
  CHECK(verblunsky_model(make_spec(Family::USp, 3), rng).flavor() == Flavor::Matrix2);
}

TEST_CASE("spec validation and parsing") {
  CHECK(parse_ensemble("trunc-usp").truncated);
  CHECK(parse_ensemble("trunc-usp").family == Family::USp);
  CHECK(parse_ensemble("cue").family == Family::CUE);
  CHECK_THROWS_AS(parse_ensemble("gue"), DomainError);
  auto bad = make_spec(Family::CUE, 0);
  CHECK_THROWS_AS(bad.validate(), DomainError);
  auto neg = make_spec(Family::CircularBeta, 3);
  neg.beta = -1.0;
  CHECK_THROWS_AS(neg.validate(), DomainError);
}

TEST_CASE("sampled clouds") {
  const auto cue = sample_ensemble_eigs(make_spec(Family::CUE, 3), 50, 5, 2);
  REQUIRE(cue.size() == 50);
  for (const auto& c : cue) {
    REQUIRE(c.size() == 3);
    for (const cplx& z : c.values) CHECK(std::abs(std::abs(z) - 1.0) < 1e-9);
  }

  auto t1 = make_spec(Family::CUE, 1);
  t1.truncated = true;
  std::vector<double> r2;
  for (std::size_t i = 0; i < 10000; ++i) {
    Rng rng = make_stream(6, i);
    const auto a = verblunsky_model(t1, rng);
    Rng again = make_stream(6, i);
    const auto c = sample_model_eigs(t1, again);
    CHECK(std::abs(c.values[0] - std::conj(a.scalars()[0])) < 1e-14);
    r2.push_back(std::norm(c.values[0]));
  }
  CHECK(ks_one_sample(r2, uniform_cdf()).pass);

  auto usp = make_spec(Family::USp, 2);
  usp.truncated = true;
  for (const auto& c : sample_ensemble_eigs(usp, 30, 7, 1)) {
    REQUIRE(c.size() == 4);
    for (const cplx& z : c.values) {
      double best = 1e9;
      for (const cplx& w : c.values) best = std::min(best, std::abs(w - std::conj(z)));
      CHECK(best < 1e-8);
      CHECK(std::abs(z) < 1.0);
    }
  }
}

TEST_CASE("output does not depend on the worker count") {
  auto s = make_spec(Family::OrthogonalBeta, 5);
  s.beta = 1.5;
  s.a = 0.2;
  s.b = -0.3;
  const auto one = sample_ensemble_eigs(s, 40, 9, 1);
  const auto many = sample_ensemble_eigs(s, 40, 9, 8);
  for (std::size_t r = 0; r < 40; ++r) {
    CHECK(one[r].values == many[r].values);
    CHECK(one[r].provenance.rep == r);
    CHECK(one[r].provenance.seed == 9);
  }
}

TEST_CASE("figure presets") {
  CHECK(figure_spec(FigurePreset::TruncCue).n == 301);
  CHECK(figure_spec(FigurePreset::TruncO).n == 301);
  const auto u = figure_spec(FigurePreset::TruncUsp);
  CHECK(u.n == 151);
  CHECK(u.block());
}
