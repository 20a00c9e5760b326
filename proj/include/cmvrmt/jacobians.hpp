#pragma once

#include <vector>

#include "cmvrmt/core.hpp"
#include "cmvrmt/opuc.hpp"
#include "cmvrmt/stats.hpp"

namespace cmvrmt {

inline constexpr double kFdStep = 1e-6;
inline constexpr double kFdTol = 1e-5;

/// Central-difference Jacobian determinant of the map from roots to the
/// non-leading coefficients of the monic polynomial. real = true treats the
/// roots as real (n x n); otherwise the map is R^{2n} -> R^{2n}.
double fd_det_roots_to_coeffs(const std::vector<cplx>& zs, bool real, double h = kFdStep);

/// (-1)^n prod_{j<k} (z_k - z_j) for real roots, |prod_{j<k} (z_k - z_j)|^2 otherwise.
double closed_det_roots_to_coeffs(const std::vector<cplx>& zs, bool real);

/// Same for the map alpha_0..alpha_{n-1} -> kappa^{(n)} (tail of Phi_n); the
/// flavor of the string selects the real or complex version.
double fd_det_coeffs_to_alphas(const VerblunskyString& alphas, double h = kFdStep);
double closed_det_coeffs_to_alphas(const VerblunskyString& alphas);

/// Relative error of the finite-difference determinant against the closed form.
TestReport jacobian_fd_roots_to_coeffs(const std::vector<cplx>& zs, bool real);
TestReport jacobian_fd_coeffs_to_alphas(const VerblunskyString& alphas);

}  // namespace cmvrmt
