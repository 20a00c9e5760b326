#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cmvrmt/core.hpp"
#include "cmvrmt/opuc.hpp"
#include "cmvrmt/rng.hpp"
#include "cmvrmt/spectra.hpp"

namespace cmvrmt {

enum class Family { CUE, COE, CSE, CircularBeta, O, SO, OMinusSO, OrthogonalBeta, USp };

/// How the reflection coefficient R_a of a coupled model is chosen.
/// ScalarLaw: R^2 ~ Beta(1, beta n / 2) (circular families) or
/// R = |B(beta n / 4, beta n / 4)| (orthogonal families); both make the coupled
/// string equal in law to the truncated string of the same length.
enum class ReflectionLaw { Constant, ScalarLaw };

struct CouplingSpec {
  ReflectionLaw law = ReflectionLaw::Constant;
  double r = 1.0;
};

/// Sizes: n is the matrix dimension for CUE/COE/CircularBeta/O/SO/OMinusSO/
/// OrthogonalBeta and the quaternionic dimension for CSE/USp (matrix 2n x 2n).
/// Truncated and coupled specs produce strings of length n, i.e. the size
/// after removing one (quaternionic) row and column from a size n+1 matrix.
struct EnsembleSpec {
  Family family = Family::CUE;
  std::size_t n = 1;
  double beta = 2.0;
  double a = -0.5;
  double b = -0.5;
  bool truncated = false;
  std::optional<CouplingSpec> coupling;
  /// Determinant sign of the non-truncated OrthogonalBeta model.
  int det_sign = 1;

  /// Throws DomainError on inconsistent combinations.
  void validate() const;
  bool block() const { return family == Family::CSE || family == Family::USp; }
  bool real_coefficients() const;
  std::string tag() const;
};

EnsembleSpec make_spec(Family family, std::size_t n);

std::string family_name(Family f);
/// Accepts family names (case-insensitive) and the shortcuts trunc-cue,
/// trunc-coe, trunc-cse, trunc-o, trunc-usp. Throws DomainError otherwise.
EnsembleSpec parse_ensemble(const std::string& name);

/// Independent coefficients drawn from the law matching the spec.
VerblunskyString verblunsky_model(const EnsembleSpec& spec, Rng& rng);

/// CMV (scalar or block) operator of one model sample.
CMatrix model_matrix(const EnsembleSpec& spec, Rng& rng);

/// Eigenvalues of one model sample, with provenance filled in except the seed.
/// Real-coefficient families come back stratified.
EigenCloud sample_model_eigs(const EnsembleSpec& spec, Rng& rng);

/// reps clouds; rep r uses stream make_stream(seed, r), so the output is a pure
/// function of (spec, seed) and independent of the worker count.
std::vector<EigenCloud> sample_ensemble_eigs(const EnsembleSpec& spec, std::size_t reps,
                                             std::uint64_t seed, unsigned threads = 0);

/// Runs job(r) for r in [0, count) on a pool of worker threads (0 = hardware concurrency).
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& job);

enum class FigurePreset { TruncCue, TruncO, TruncUsp };

EnsembleSpec figure_spec(FigurePreset preset);

}  // namespace cmvrmt
