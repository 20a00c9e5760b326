#include <doctest.h>

#include "cmvrmt/eigensolver.hpp"
#include "cmvrmt/haar.hpp"
#include "cmvrmt/spectra.hpp"
#include "test_support.hpp"

using namespace cmvrmt;

namespace {

CVector oracle(const CMatrix& m) {
  Eigen::ComplexEigenSolver<CMatrix> es(m, false);
  return es.eigenvalues();
}

}  // namespace

TEST_CASE("diagonal and permutation matrices") {
  CMatrix d = CMatrix::Zero(3, 3);
  d(0, 0) = 1.0;
  d(1, 1) = kI;
  d(2, 2) = -1.0;
  CHECK(matching_distance(eigenvalues(d), oracle(d)) < 1e-15);
  CMatrix swap(2, 2);
  swap << 0.0, 1.0, 1.0, 0.0;
  CHECK(matching_distance(eigenvalues(swap), CVector{{1.0, -1.0}}) < 1e-14);
  CHECK(eigenvalues(CMatrix(0, 0)).size() == 0);
}

TEST_CASE("Hessenberg reduction") {
  Rng rng(17, 0);
  const CMatrix a = testing::random_matrix(7, 7, rng);
  CMatrix h, q;
  hessenberg_reduce(a, h, &q);
  CHECK(max_abs(q * h * q.adjoint() - a) < 1e-13);
  CHECK(max_abs(q.adjoint() * q - CMatrix::Identity(7, 7)) < 1e-14);
  for (Eigen::Index i = 2; i < 7; ++i)
    for (Eigen::Index j = 0; j + 1 < i; ++j) CHECK(h(i, j) == cplx(0.0));
}

TEST_CASE("Schur form against the Eigen solver") {
  Rng rng(18, 0);
  for (int n : {1, 2, 5, 12, 30}) {
    const CMatrix a = testing::random_matrix(n, n, rng);
    const auto s = complex_schur(a);
    CHECK(max_abs(s.q * s.t * s.q.adjoint() - a) < 1e-12 * n);
    for (int i = 1; i < n; ++i)
      for (int j = 0; j < i; ++j) CHECK(s.t(i, j) == cplx(0.0));
    CHECK(matching_distance(eigenvalues(a), oracle(a)) < 1e-10);
  }
  for (int n : {4, 20}) {
    const CMatrix u = sample_haar(Group::U, n, rng);
    const CVector ev = eigenvalues(u);
    CHECK(matching_distance(ev, oracle(u)) < 1e-12);
    for (Eigen::Index i = 0; i < ev.size(); ++i) CHECK(std::abs(std::abs(ev(i)) - 1.0) < 1e-12);
  }
}

TEST_CASE("iteration cap") {
  EigenOptions opt;
  opt.max_iter_per_eigenvalue = 0;
  Rng rng(19, 0);
  CHECK_THROWS_AS(complex_schur(testing::random_matrix(6, 6, rng), opt), ConvergenceError);
}
