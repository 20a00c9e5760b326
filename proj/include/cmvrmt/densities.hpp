#pragma once

#include <functional>
#include <vector>

#include "cmvrmt/core.hpp"
#include "cmvrmt/spectra.hpp"

namespace cmvrmt {

struct LogGasParams {
  double eps1 = 1.0;
  double eps2 = 1.0;
  double kT = 1.0;

  double alpha() const { return (eps1 - eps2) / (eps1 + eps2); }
  double gamma() const { return 1.0 / (2.0 * kPi * eps1 * kT); }
  void validate() const;
};

/// Permittivities and temperature realizing the exponents (gamma, alpha), alpha != -1.
LogGasParams loggas_params_for(double gamma, double alpha, double eps1 = 1.0);

struct NormalizationParams {
  std::size_t n = 1;
  double beta = 2.0;
  double a = -0.5;
  double b = -0.5;
};

/// Logarithms of the normalization constants. n counts eigenvalues for Z, Z'
/// and P, and angles/half-dimension for the orthogonal constants C..M.
struct NormalizationTable {
  double log_Z = 0.0;
  double log_Zp = 0.0;
  double log_C = 0.0;
  double log_K = 0.0;
  double log_D = 0.0;
  double log_L = 0.0;
  double log_E = 0.0;
  double log_M = 0.0;
  double log_P = 0.0;
};

NormalizationTable normalization_table(const NormalizationParams& p);

/// Truncated circular beta law on the open disk, w.r.t. Lebesgue measure on D^n.
/// -inf on coincident points; DomainError if some |z| >= 1.
double log_density_trunc_circular(const std::vector<cplx>& zs, double beta);

/// Truncated orthogonal beta law. The input must be stratified (see stratify).
/// The density is w.r.t. |dz_1 ^ ... ^ dz_n|: dx per real point and 2 dx dy per
/// conjugate pair, so the 2^M factor sits in the reference measure.
double log_density_trunc_orthogonal(const EigenCloud& cloud, double beta, double a, double b);

/// Eigenangles in [0, 2 pi) and weights summing to 1; density w.r.t.
/// d theta_1..d theta_n d mu_1..d mu_{n-1}.
double log_density_spectral_circular(const std::vector<double>& thetas, const std::vector<double>& mus,
                                     double beta);

enum class OrthoCase { A, B, C, D };

/// Layout per case, with m = thetas.size() angles in (0, pi):
///   A: dimension 2m, m weights;      B: dimension 2m+2, m+2 weights (last two at 1 and -1);
///   C: dimension 2m+1, m+1 weights (last at 1);  D: as C with the last weight at -1.
/// Density w.r.t. the angles and all weights but the last.
double log_density_spectral_orthogonal(const std::vector<double>& thetas, const std::vector<double>& mus,
                                       OrthoCase c, double beta, double a = -0.5, double b = -0.5);

using WeightFn = std::function<double(double)>;

/// Coupled circular model: truncated circular density times weight(|prod z|).
double log_density_nonideal(const std::vector<cplx>& zs, double beta, const WeightFn& weight);

/// Coupled orthogonal model: truncated orthogonal density with a = b = beta/4 - 1
/// times weight(|prod z|).
double log_density_nonideal(const EigenCloud& cloud, double beta, const WeightFn& weight);

/// Total electrostatic energy H of unit charges in the disk; +inf on coincidence.
double log_gas_energy(const std::vector<cplx>& zs, const LogGasParams& params);

/// Pair potential V(z | z0) and self-energy W(z0).
double log_gas_potential(cplx z, cplx z0, const LogGasParams& params);
double log_gas_self_energy(cplx z0, const LogGasParams& params);

}  // namespace cmvrmt
