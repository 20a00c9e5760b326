#pragma once

#include <vector>

#include "cmvrmt/core.hpp"
#include "cmvrmt/rng.hpp"

namespace cmvrmt {

double standard_normal(Rng& rng);

/// (X + iY) / sqrt(2) with X, Y standard normal.
cplx complex_normal(Rng& rng);

/// Beta(p, q) on [0, 1] via a gamma ratio; p, q > 0.
double sample_beta(double p, double q, Rng& rng);

/// B(s, t) on [-1, 1]: density proportional to (1-x)^{s-1} (1+x)^{t-1}.
/// s = t = 0 gives +-1 with equal probability; s = 0 < t gives 1 and
/// t = 0 < s gives -1 (the limiting point masses).
double sample_beta_sym(double s, double t, Rng& rng);

/// Theta(nu) on the closed disk, nu >= 1: |z|^2 ~ Beta(1, (nu-1)/2) with a
/// uniform phase; nu = 1 is the uniform law on the circle.
cplx sample_theta(double nu, Rng& rng);

/// Upsilon(nu), nu >= 3: complex_embed of (a0, a1, a2, a3) with
/// |a|^2 ~ Beta(2, (nu-3)/2) and uniform direction on S^3; nu = 3 is Haar SU(2).
Mat2 sample_upsilon(double nu, Rng& rng);

enum class SimplexKind { A, B, C, D, E };

/// Squared-norm groupings of a uniform point on a sphere. With the index n:
/// A: n singles from R^n; B: n pairs from R^{2n}; C: n-1 pairs and 2 singles
/// from R^{2n} (n+1 weights); D: n pairs and 1 single from R^{2n+1} (n+1
/// weights); E: n quadruples from R^{4n}.
std::vector<double> sample_simplex_pushforward(SimplexKind kind, std::size_t n, Rng& rng);

}  // namespace cmvrmt
