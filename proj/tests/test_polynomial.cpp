#include <doctest.h>

#include <algorithm>

#include "cmvrmt/polynomial.hpp"
#include "cmvrmt/spectra.hpp"
#include "test_support.hpp"

using namespace cmvrmt;

TEST_CASE("evaluation, product and reversal") {
  const Poly p{1.0, -2.0, 1.0};  // (z - 1)^2
  CHECK(std::abs(poly_eval(p, 1.0)) == 0.0);
  CHECK(std::abs(poly_eval(p, 3.0) - 4.0) == 0.0);
  const Poly q = poly_mul({-1.0, 1.0}, {-1.0, 1.0});
  for (std::size_t k = 0; k < 3; ++k) CHECK(q[k] == p[k]);

  CHECK(reversed_poly({0.0, 1.0}) == Poly{1.0, 0.0});
  const cplx a(0.3, -0.4);
  const Poly r = reversed_poly({-std::conj(a), 1.0});
  CHECK(r[0] == cplx(1.0));
  CHECK(r[1] == -a);

  Rng rng(5, 0);
  Poly five(6);
  for (auto& c : five) c = complex_normal(rng);
  CHECK(reversed_poly(reversed_poly(five)) == five);
}

TEST_CASE("poly_from_roots and monic_tail") {
  const Poly p = poly_from_roots({1.0, -1.0});
  CHECK(p == Poly{-1.0, 0.0, 1.0});
  const auto tail = monic_tail(poly_from_roots({0.2, -0.4}));
  REQUIRE(tail.size() == 2);
  CHECK(std::abs(tail[0] - 0.2) < 1e-15);   // -(z1 + z2)
  CHECK(std::abs(tail[1] + 0.08) < 1e-15);  // z1 z2
}

TEST_CASE("aberth_roots on closed-form cases") {
  // z^2 - z/3 - 1/3
  const auto roots = aberth_roots({-1.0 / 3.0, -1.0 / 3.0, 1.0});
  const double disc = std::sqrt(1.0 / 9.0 + 4.0 / 3.0);
  const std::vector<cplx> expected{(1.0 / 3.0 + disc) / 2.0, (1.0 / 3.0 - disc) / 2.0};
  CHECK(matching_distance(roots, expected) < 1e-14);

  // z^5 - 1 with a zero root peeled: z (z^5 - 1)
  const auto r6 = aberth_roots({0.0, -1.0, 0.0, 0.0, 0.0, 0.0, 1.0});
  std::vector<cplx> want{0.0};
  for (int k = 0; k < 5; ++k) want.push_back(std::polar(1.0, 2.0 * kPi * k / 5.0));
  CHECK(matching_distance(r6, want) < 1e-13);

  // Non-monic input.
  const auto r2 = aberth_roots({6.0, -5.0, 1.0 * 1.0});
  CHECK(matching_distance(r2, {2.0, 3.0}) < 1e-13);
}

TEST_CASE("aberth_roots against random roots") {
  Rng rng(6, 0);
  for (int t = 0; t < 50; ++t) {
    const auto z = testing::disk_points(12, rng);
    CHECK(matching_distance(aberth_roots(poly_from_roots(z)), z) < 1e-9);
  }
}
