#include <doctest.h>

#include "cmvrmt/rng.hpp"
#include "cmvrmt/stats.hpp"

using namespace cmvrmt;

TEST_CASE("Philox4x32-10 known answers") {
  using A4 = std::array<std::uint32_t, 4>;
  CHECK(Philox4x32::block({0, 0, 0, 0}, {0, 0}) == A4{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(Philox4x32::block({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
        A4{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(Philox4x32::block({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
        A4{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("streams are deterministic") {
  Rng a = make_stream(42, 3), b = make_stream(42, 3);
  for (int i = 0; i < 1000; ++i) CHECK(a() == b());
  Rng c = make_stream(42, 4);
  Rng d = make_stream(42, 3);
  int same = 0;
  for (int i = 0; i < 1000; ++i) same += c() == d();
  CHECK(same < 3);
}

TEST_CASE("uniform01 range and independence across streams") {
  Rng r0 = make_stream(7, 0), r1 = make_stream(7, 1);
  std::vector<double> x, y;
  double lo = 1.0, hi = 0.0;
  for (int i = 0; i < 20000; ++i) {
    x.push_back(r0.uniform01());
    y.push_back(r1.uniform01());
    lo = std::min(lo, x.back());
    hi = std::max(hi, x.back());
  }
  CHECK(lo >= 0.0);
  CHECK(hi < 1.0);
  CHECK(ks_one_sample(x, uniform_cdf()).pass);
  CHECK(ks_two_sample(x, y).pass);
  double cov = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) cov += (x[i] - 0.5) * (y[i] - 0.5);
  cov /= static_cast<double>(x.size());
  // sd of the mean product is 1/12 / sqrt(n) ~ 6e-4
  CHECK(std::abs(cov) < 5 * 6e-4);
}
