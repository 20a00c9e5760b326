#pragma once

#include "cmvrmt/core.hpp"

namespace cmvrmt {

/// A = Q T Q^dagger with T upper triangular and Q unitary.
struct SchurDecomposition {
  CMatrix t;
  CMatrix q;
};

struct EigenOptions {
  int max_iter_per_eigenvalue = 50;
  bool compute_q = true;
};

/// Householder reduction to upper Hessenberg form: A = Q H Q^dagger.
void hessenberg_reduce(const CMatrix& a, CMatrix& h, CMatrix* q);

/// Complex Schur form by single-shift (Wilkinson) QR iteration with Givens
/// rotations. Throws ConvergenceError when an eigenvalue exceeds the iteration cap.
SchurDecomposition complex_schur(const CMatrix& a, const EigenOptions& opt = {});

/// Eigenvalues (diagonal of the Schur form) in the order the iteration delivers them.
CVector eigenvalues(const CMatrix& a);

}  // namespace cmvrmt
