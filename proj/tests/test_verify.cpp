#include <doctest.h>

#include "cmvrmt/haar.hpp"
#include "cmvrmt/verify.hpp"

using namespace cmvrmt;

TEST_CASE("direct matrices") {
  Rng rng(70, 0);
  auto t = make_spec(Family::CUE, 3);
  t.truncated = true;
  const CMatrix m = direct_matrix(t, rng);
  CHECK(m.rows() == 3);
  CHECK(m.norm() < 3.0);
  const CMatrix so = direct_matrix(make_spec(Family::SO, 4), rng);
  CHECK(so.determinant().real() == doctest::Approx(1.0));
  const CMatrix om = direct_matrix(make_spec(Family::OMinusSO, 4), rng);
  CHECK(om.determinant().real() == doctest::Approx(-1.0));
  auto tu = make_spec(Family::USp, 3);
  tu.truncated = true;
  CHECK(direct_matrix(tu, rng).rows() == 6);
  CHECK_THROWS_AS(direct_matrix(make_spec(Family::CircularBeta, 3), rng), DomainError);
}

TEST_CASE("model against direct sampling") {
  auto t = make_spec(Family::CUE, 3);
  t.truncated = true;
  const auto reports = model_vs_haar(t, 1500, 11, 0);
  CHECK_FALSE(reports.empty());
  CHECK(all_pass(reports));
}

TEST_CASE("quick suite passes and a perturbed constant is caught") {
  VerifyOptions opt;
  opt.suite = Suite::Quick;
  const auto reports = run_suite(opt);
  for (const auto& r : reports) {
    INFO(r.name << " " << r.statistic << " " << r.threshold);
    CHECK(r.pass);
  }
  opt.mutate_constant = true;
  CHECK_FALSE(all_pass(run_suite(opt)));
  const json j = reports_to_json(reports);
  CHECK(j.size() == reports.size());
}
