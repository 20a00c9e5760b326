#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cmvrmt/core.hpp"
#include "cmvrmt/measure.hpp"
#include "cmvrmt/opuc.hpp"

namespace cmvrmt {

struct Stratum {
  int real_count = 0;  // L
  int pair_count = 0;  // M
};

struct Provenance {
  std::string ensemble;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  double beta = 0.0;
  double a = 0.0;
  double b = 0.0;
  std::size_t rep = 0;
};

struct EigenCloud {
  std::vector<cplx> values;
  std::optional<Stratum> stratum;
  Provenance provenance;

  std::size_t size() const { return values.size(); }
};

/// Eigenvalues via the in-house Schur iteration.
EigenCloud eig(const CMatrix& m);

/// Zeros of Phi_n by Aberth-Ehrlich; falls back to eig(build_cmv) when the
/// root finder does not converge.
EigenCloud roots_via_szego(const VerblunskyString& alphas);

/// Spectral measure of a unitary matrix at e1: nodes are eigenvalues projected
/// onto the circle, weights |<e1, v_j>|^2. Weights at or below weight_floor are
/// dropped (eigenvectors orthogonal to e1) and the rest renormalized. Nodes are
/// sorted by argument in [0, 2 pi). Throws DomainError for non-unitary input and
/// DegenerateSpectrum when two eigenvalues are closer than gap_tol.
PointMeasure spectral_measure(const CMatrix& u, double weight_floor = 1e-14, double gap_tol = 1e-9);

/// 2x2 matrix spectral measure at (e1, e2) for a 2n x 2n unitary matrix.
/// Eigenvalues within cluster_tol are merged and their weights summed.
MatrixMeasure2 matrix_spectral_measure(const CMatrix& u, double cluster_tol = 1e-8);

/// Default stratification tolerance 1e-8 max(1, max |z|).
double default_strat_tol(const std::vector<cplx>& values);

/// Canonical order for conjugation-closed clouds: L real values ascending
/// (imaginary parts set to zero), then M representatives with positive
/// imaginary part ordered by real part, then their exact conjugates in the same
/// order. Throws DomainError when a value is neither near-real nor paired.
EigenCloud stratify(const EigenCloud& cloud, std::optional<double> strat_tol = std::nullopt);

/// Bottleneck distance: min over bijections of max |z_i - w_pi(i)|.
double matching_distance(const std::vector<cplx>& z, const std::vector<cplx>& w);

/// Same, with eigenvalue vectors.
double matching_distance(const CVector& z, const CVector& w);

}  // namespace cmvrmt
