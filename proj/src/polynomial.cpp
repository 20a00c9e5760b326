#include "cmvrmt/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cmvrmt {

cplx poly_eval(const Poly& p, cplx z) {
  cplx acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Poly reversed_poly(const Poly& p) {
  Poly r(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) r[j] = std::conj(p[p.size() - 1 - j]);
  return r;
}

Poly poly_mul(const Poly& p, const Poly& q) {
  if (p.empty() || q.empty()) return {};
  Poly r(p.size() + q.size() - 1, cplx(0.0));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return r;
}

Poly poly_from_roots(const std::vector<cplx>& roots) {
  Poly p{cplx(1.0)};
  for (cplx r : roots) {
    Poly next(p.size() + 1, cplx(0.0));
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i + 1] += p[i];
      next[i] -= r * p[i];
    }
    p = std::move(next);
  }
  return p;
}

std::vector<cplx> monic_tail(const Poly& p) {
  const std::size_t k = p.size() - 1;
  std::vector<cplx> kappa(k);
  for (std::size_t j = 1; j <= k; ++j) kappa[j - 1] = p[k - j];
  return kappa;
}

namespace {

// p(z), p'(z), and the running-error bound sum |c_k| |z|^k.
struct Eval {
  cplx p;
  cplx dp;
  double bound;
};

Eval eval_with_bound(const Poly& c, cplx z) {
  cplx p = 0.0, dp = 0.0;
  double b = 0.0;
  const double az = std::abs(z);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
    b = b * az + std::abs(*it);
  }
  return {p, dp, b};
}

}  // namespace

std::vector<cplx> aberth_roots(const Poly& input, const RootOptions& opt) {
  Poly c = input;
  while (!c.empty() && c.back() == cplx(0.0)) c.pop_back();
  if (c.empty()) throw DomainError("aberth_roots: zero polynomial");

  std::vector<cplx> roots;
  // Exact zero roots are peeled off; Aberth converges only linearly on them.
  std::size_t zeros = 0;
  while (zeros + 1 < c.size() && c[zeros] == cplx(0.0)) ++zeros;
  roots.assign(zeros, cplx(0.0));
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(zeros));

  const std::size_t n = c.size() - 1;
  if (n == 0) return roots;
  for (auto& x : c) x /= c.back();

  // Starting points on a circle of the Fujiwara-bound radius, rotated off the axes.
  double radius = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    double t = std::pow(std::abs(c[n - k]), 1.0 / static_cast<double>(k));
    if (k == n) t = std::pow(std::abs(c[0]) / 2.0, 1.0 / static_cast<double>(n));
    radius = std::max(radius, t);
  }
  radius = std::max(2.0 * radius, 1e-3);
  std::vector<cplx> z(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double ang = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n) + 0.4;
    z[i] = std::polar(radius * 0.5, ang);
  }

  constexpr double eps = std::numeric_limits<double>::epsilon();
  std::vector<bool> done(n, false);
  std::size_t remaining = n;
  for (int iter = 0; iter < opt.max_iter && remaining > 0; ++iter) {
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      const Eval e = eval_with_bound(c, z[i]);
      if (std::abs(e.p) <= 4.0 * eps * e.bound) {
        done[i] = true;
        --remaining;
        continue;
      }
      const cplx ratio = e.p / e.dp;
      cplx sum = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      const cplx w = ratio / (1.0 - ratio * sum);
      z[i] -= w;
      if (std::abs(w) <= opt.tol * std::max(1.0, std::abs(z[i]))) {
        done[i] = true;
        --remaining;
      }
    }
  }
  if (remaining > 0) throw ConvergenceError("aberth_roots: iteration cap reached");

  for (auto& zi : z) {
    for (int s = 0; s < opt.polish_steps; ++s) {
      const Eval e = eval_with_bound(c, zi);
      if (e.dp == cplx(0.0)) break;
      const cplx cand = zi - e.p / e.dp;
      if (std::abs(poly_eval(c, cand)) < std::abs(e.p)) zi = cand;
      else break;
    }
  }
  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

}  // namespace cmvrmt
