#pragma once

#include <vector>

#include "cmvrmt/core.hpp"
#include "cmvrmt/distributions.hpp"
#include "cmvrmt/opuc.hpp"
#include "cmvrmt/rng.hpp"

namespace testing {

using namespace cmvrmt;

inline std::vector<cplx> disk_points(std::size_t n, Rng& rng, double radius = 0.9) {
  std::vector<cplx> a(n);
  for (auto& x : a) x = radius * sample_theta(3.0, rng);
  return a;
}

inline VerblunskyString random_string(std::size_t n, Rng& rng, bool unimodular_last) {
  auto a = disk_points(n, rng);
  if (unimodular_last) a.back() = std::polar(1.0, 2.0 * kPi * rng.uniform01());
  return VerblunskyString::complex(a);
}

inline VerblunskyString random_real_string(std::size_t n, Rng& rng, bool unimodular_last) {
  std::vector<double> a(n);
  for (auto& x : a) x = 0.9 * (2.0 * rng.uniform01() - 1.0);
  if (unimodular_last) a.back() = rng.uniform01() < 0.5 ? -1.0 : 1.0;
  return VerblunskyString::real(a);
}

inline CMatrix random_matrix(Eigen::Index r, Eigen::Index c, Rng& rng) {
  CMatrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = complex_normal(rng);
  return m;
}

}  // namespace testing
