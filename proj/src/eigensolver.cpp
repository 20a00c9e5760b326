#include "cmvrmt/eigensolver.hpp"

#include <cmath>
#include <limits>

namespace cmvrmt {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double abs1(cplx z) { return std::abs(z.real()) + std::abs(z.imag()); }

// G = [[c, s], [-conj(s), c]] with G [x; y] = [r; 0].
struct Givens {
  double c;
  cplx s;
};

Givens make_givens(cplx x, cplx y) {
  const double ax = std::abs(x);
  if (y == cplx(0.0)) return {1.0, 0.0};
  if (ax == 0.0) return {0.0, 1.0};
  const double r = std::hypot(ax, std::abs(y));
  return {ax / r, (x / ax) * std::conj(y) / r};
}

void rotate_rows(CMatrix& m, Eigen::Index k, const Givens& g, Eigen::Index c0, Eigen::Index c1) {
  for (Eigen::Index j = c0; j < c1; ++j) {
    const cplx a = m(k, j), b = m(k + 1, j);
    m(k, j) = g.c * a + g.s * b;
    m(k + 1, j) = -std::conj(g.s) * a + g.c * b;
  }
}

// m <- m G^dagger on columns k, k+1.
void rotate_cols(CMatrix& m, Eigen::Index k, const Givens& g, Eigen::Index r0, Eigen::Index r1) {
  for (Eigen::Index i = r0; i < r1; ++i) {
    const cplx a = m(i, k), b = m(i, k + 1);
    m(i, k) = a * g.c + b * std::conj(g.s);
    m(i, k + 1) = -a * g.s + b * g.c;
  }
}

// Eigenvalue of [[a, b], [c, d]] closest to d.
cplx wilkinson_shift(cplx a, cplx b, cplx c, cplx d) {
  const cplx p = 0.5 * (a - d);
  const cplx bc = b * c;
  if (bc == cplx(0.0)) return d;
  const cplx disc = std::sqrt(p * p + bc);
  const cplx den1 = p + disc, den2 = p - disc;
  const cplx den = std::abs(den1) >= std::abs(den2) ? den1 : den2;
  if (den == cplx(0.0)) return d;
  return d - bc / den;
}

}  // namespace

void hessenberg_reduce(const CMatrix& a, CMatrix& h, CMatrix* q) {
  const Eigen::Index n = a.rows();
  h = a;
  if (q) *q = CMatrix::Identity(n, n);
  for (Eigen::Index k = 0; k + 2 < n; ++k) {
    const Eigen::Index m = n - k - 1;
    CVector v = h.col(k).tail(m);
    const double tail = v.tail(m - 1).norm();
    if (tail == 0.0) continue;
    const double xn = std::hypot(std::abs(v(0)), tail);
    const cplx phase = v(0) == cplx(0.0) ? cplx(1.0) : v(0) / std::abs(v(0));
    v(0) += phase * xn;
    v /= v.norm();
    // Reflector P = I - 2 v v^dagger applied on both sides.
    auto blk_rows = h.bottomRows(m);
    const Eigen::RowVectorXcd w = v.adjoint() * blk_rows;
    blk_rows -= 2.0 * v * w;
    auto blk_cols = h.rightCols(m);
    const CVector u = blk_cols * v;
    blk_cols -= 2.0 * u * v.adjoint();
    h.col(k).tail(m - 1).setZero();
    if (q) {
      auto qc = q->rightCols(m);
      const CVector uq = qc * v;
      qc -= 2.0 * uq * v.adjoint();
    }
  }
}

SchurDecomposition complex_schur(const CMatrix& a, const EigenOptions& opt) {
  if (a.rows() != a.cols()) throw DomainError("complex_schur: matrix not square");
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (!std::isfinite(a.data()[i].real()) || !std::isfinite(a.data()[i].imag()))
      throw DomainError("complex_schur: non-finite entry");
  const Eigen::Index n = a.rows();
  SchurDecomposition out;
  hessenberg_reduce(a, out.t, opt.compute_q ? &out.q : nullptr);
  CMatrix& h = out.t;
  if (n <= 1) return out;

  const double hnorm = std::max(h.cwiseAbs().maxCoeff(), std::numeric_limits<double>::min());
  Eigen::Index hi = n - 1;
  int iter = 0;
  while (hi > 0) {
    Eigen::Index l = hi;
    for (; l > 0; --l) {
      double s = abs1(h(l - 1, l - 1)) + abs1(h(l, l));
      if (s == 0.0) s = hnorm;
      if (abs1(h(l, l - 1)) <= kEps * s) {
        h(l, l - 1) = 0.0;
        break;
      }
    }
    if (l == hi) {
      --hi;
      iter = 0;
      continue;
    }
    if (++iter > opt.max_iter_per_eigenvalue)
      throw ConvergenceError("complex_schur: iteration cap exceeded");

    cplx mu;
    if (iter % 10 == 0) {
      // Exceptional shift to break cycles.
      mu = h(hi, hi) + 0.75 * std::abs(h(hi, hi - 1)) * cplx(1.0, 0.5);
    } else {
      mu = wilkinson_shift(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
    }

    cplx x = h(l, l) - mu;
    cplx y = h(l + 1, l);
    for (Eigen::Index k = l; k < hi; ++k) {
      const Givens g = make_givens(x, y);
      rotate_rows(h, k, g, k == l ? k : k - 1, n);
      if (k > l) h(k + 1, k - 1) = 0.0;
      rotate_cols(h, k, g, 0, std::min(k + 2, hi) + 1);
      if (opt.compute_q) rotate_cols(out.q, k, g, 0, n);
      if (k + 1 < hi) {
        x = h(k + 1, k);
        y = h(k + 2, k);
      }
    }
  }
  for (Eigen::Index i = 1; i < n; ++i)
    for (Eigen::Index j = 0; j < i; ++j) h(i, j) = 0.0;
  return out;
}

CVector eigenvalues(const CMatrix& a) {
  EigenOptions opt;
  opt.compute_q = false;
  return complex_schur(a, opt).t.diagonal();
}

}  // namespace cmvrmt
