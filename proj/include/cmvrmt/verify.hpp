#pragma once

#include <cstdint>
#include <vector>

#include "cmvrmt/core.hpp"
#include "cmvrmt/ensembles.hpp"
#include "cmvrmt/io.hpp"
#include "cmvrmt/stats.hpp"

namespace cmvrmt {

/// Direct counterpart of a model: a Haar (or COE/CSE) matrix of the family, or
/// its first (quaternionic) minor for truncated and law-coupled specs.
/// Throws DomainError for specs without one (beta families, constant coupling).
CMatrix direct_matrix(const EnsembleSpec& spec, Rng& rng);

/// Two-sample tests between the coefficient model and direct sampling: pooled
/// eigenvalue moduli (truncated) or angles (unitary), per-sample |sum z|^2, and
/// for unitary scalar models the first recovered coefficient.
std::vector<TestReport> model_vs_haar(const EnsembleSpec& spec, std::size_t reps, std::uint64_t seed,
                                      unsigned threads = 0);

enum class Suite { Quick, Full };

struct VerifyOptions {
  Suite suite = Suite::Quick;
  std::uint64_t seed = 20240601;
  unsigned threads = 0;
  /// Perturbs a normalization constant by 5%; the suite must then fail.
  bool mutate_constant = false;
};

std::vector<TestReport> run_suite(const VerifyOptions& opt);

json reports_to_json(const std::vector<TestReport>& reports);
bool all_pass(const std::vector<TestReport>& reports);

}  // namespace cmvrmt
