#pragma once

#include <vector>

#include "cmvrmt/core.hpp"

namespace cmvrmt {

/// Dense complex polynomial, coefficients in ascending powers: c[0] + c[1] z + ...
/// The nominal degree is size() - 1 even when the top coefficient is zero;
/// reversal depends on it.
using Poly = std::vector<cplx>;

cplx poly_eval(const Poly& p, cplx z);

/// P*(z) = z^k conj(P(1/conj z)) with k = p.size() - 1.
Poly reversed_poly(const Poly& p);

Poly poly_mul(const Poly& p, const Poly& q);

/// Monic polynomial with the given roots.
Poly poly_from_roots(const std::vector<cplx>& roots);

/// For a monic degree-k p, returns (kappa_1, ..., kappa_k) with
/// p = z^k + kappa_1 z^{k-1} + ... + kappa_k.
std::vector<cplx> monic_tail(const Poly& p);

struct RootOptions {
  int max_iter = 500;
  double tol = 1e-14;
  int polish_steps = 2;
};

/// All roots of p via Aberth-Ehrlich simultaneous iteration followed by Newton
/// polishing. Throws ConvergenceError when the iteration cap is reached.
std::vector<cplx> aberth_roots(const Poly& p, const RootOptions& opt = {});

}  // namespace cmvrmt
