#pragma once

#include "cmvrmt/core.hpp"
#include "cmvrmt/opuc.hpp"

namespace cmvrmt {

enum class CmvForm { Cmv, SymmetricCmv, BlockCmv };

struct CmvOperator {
  CMatrix entries;
  CmvForm form = CmvForm::Cmv;
  /// Half-bandwidth in scalar (or 2x2-block) units: 2 for CMV, 3 for symmetric CMV.
  int band_hint = 2;

  Eigen::Index dim() const { return entries.rows(); }
};

/// C = L M from the Xi blocks of a scalar string (n >= 1).
CmvOperator build_cmv(const VerblunskyString& alphas);

/// Block version with 2x2 coefficients; the result is 2n x 2n.
CmvOperator build_block_cmv(const VerblunskyString& alphas);

/// The L and M factors of a scalar string, exposed for structural tests.
CMatrix cmv_factor_l(const VerblunskyString& alphas);
CMatrix cmv_factor_m(const VerblunskyString& alphas);

/// Square root of a 2x2 Hermitian PSD matrix. Eigenvalues down to -1e-12 are
/// clamped to zero; anything else non-PSD or non-Hermitian throws DomainError.
Mat2 psd_sqrt2(const Mat2& m);

/// Deletes the first `width` rows and columns (1 for scalar, 2 for one quaternionic unit).
CMatrix truncate_first(const CMatrix& c, int width = 1);

struct ReversedTruncation {
  VerblunskyString alphas;
  /// The minor is spectrally equivalent to build_cmv(alphas) transposed.
  bool transpose;
};

/// For (alpha_0..alpha_n) with |alpha_n| = 1: the string
/// (-conj(alpha_{n-1}) alpha_n, ..., -conj(alpha_0) alpha_n) whose CMV operator
/// (transposed for even n) has the spectrum of the first minor.
ReversedTruncation reversed_truncation_coeffs(const VerblunskyString& alphas);

enum class SymmetricVariant { S, STilde };

/// Symmetric seven-diagonal form N L N^T with the same characteristic
/// polynomial as build_cmv(alphas). Throws DomainError for the variant's
/// excluded case (even n with alpha_{n-1} = 1 for S, = -1 for STilde).
CmvOperator build_symmetric_cmv(const VerblunskyString& alphas,
                                SymmetricVariant variant = SymmetricVariant::S);

/// Verblunsky coefficients of the spectral measure of U at e1. Throws
/// DomainError when U is not unitary within tol or e1 is not cyclic.
VerblunskyString cmvfy(const CMatrix& u, double tol = 1e-8);

/// Largest |i - j| over entries with modulus above tol.
int bandwidth(const CMatrix& m, double tol = 0.0);

}  // namespace cmvrmt
