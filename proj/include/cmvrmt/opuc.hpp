#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cmvrmt/core.hpp"
#include "cmvrmt/measure.hpp"
#include "cmvrmt/polynomial.hpp"

namespace cmvrmt {

enum class Flavor { Complex, Real, Matrix2 };

/// Verblunsky coefficients alpha_0..alpha_{n-1}. Scalar flavors keep their
/// values as complex numbers (zero imaginary part for Real); Matrix2 keeps
/// 2x2 blocks. Interior entries lie strictly inside the unit disk (ball),
/// the last one in the closed disk.
class VerblunskyString {
 public:
  static VerblunskyString complex(std::vector<cplx> alphas);
  static VerblunskyString real(const std::vector<double>& alphas);
  static VerblunskyString matrix2(std::vector<Mat2> alphas);

  Flavor flavor() const { return flavor_; }
  bool is_scalar() const { return flavor_ != Flavor::Matrix2; }
  std::size_t size() const { return flavor_ == Flavor::Matrix2 ? blocks_.size() : scalars_.size(); }

  /// Throws DomainError on the Matrix2 flavor.
  const std::vector<cplx>& scalars() const;
  /// Throws DomainError on scalar flavors.
  const std::vector<Mat2>& blocks() const;

  /// Scalar rho_k = sqrt(1 - |alpha_k|^2).
  double rho(std::size_t k) const;

  /// |alpha_{n-1}| = 1 within tol (scalar); alpha^dagger alpha = I within tol (Matrix2).
  bool terminal_unimodular(double tol = 1e-12) const;

  /// Real flavor when every imaginary part is below tol; throws DomainError otherwise.
  VerblunskyString as_real(double tol = 1e-12) const;

 private:
  VerblunskyString() = default;
  void validate() const;

  Flavor flavor_ = Flavor::Complex;
  std::vector<cplx> scalars_;
  std::vector<Mat2> blocks_;
};

/// Monic orthogonal polynomials Phi_0..Phi_n from the Szego recurrence.
std::vector<Poly> szego_forward(const VerblunskyString& alphas);

/// ||Phi_k||^2 = prod_{j<k} (1 - |alpha_j|^2), k = 0..n.
std::vector<double> opuc_norm_products(const VerblunskyString& alphas);

/// alpha_k = -conj(Phi_{k+1}(0)) for each polynomial of a Szego sequence.
VerblunskyString alphas_from_polys(const std::vector<Poly>& phis);

/// Verblunsky coefficients of a finitely supported measure via re-orthogonalized
/// Gram-Schmidt. Throws DomainError on invalid input and DegenerateSpectrum when
/// an intermediate norm underflows (measure too close to fewer support points).
VerblunskyString verblunsky_from_measure(const PointMeasure& mu);

struct IdentityCheck {
  std::string name;
  double max_rel_err = 0.0;
  int evaluations = 0;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  double worst() const;
  const IdentityCheck* find(const std::string& name) const;
};

/// Evaluates both sides of the OPUC identities (root products, norm products,
/// Christoffel-Darboux, Cauchy determinant, discriminant/weight product, double
/// product over roots). The measure-dependent checks run only when mu is given
/// and matches alphas. Real-coefficient products at z = +-1 run for real
/// flavors. Probe points (inside the disk) feed the Christoffel-Darboux check.
IdentityReport identity_suite(const VerblunskyString& alphas,
                              const std::optional<PointMeasure>& mu = std::nullopt,
                              std::span<const cplx> probes = {});

}  // namespace cmvrmt
