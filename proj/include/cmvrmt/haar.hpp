#pragma once

#include "cmvrmt/core.hpp"
#include "cmvrmt/rng.hpp"

namespace cmvrmt {

enum class Group { U, O, USp };

/// Haar sample built column by column: Gaussian vector, projected off the
/// previous columns (twice) and normalized. USp(n) is returned in embedded
/// 2n x 2n form with every second column Z conj(previous column).
CMatrix sample_haar(Group group, std::size_t n, Rng& rng);

/// U^T U for Haar U in U(n).
CMatrix sample_coe(std::size_t n, Rng& rng);

/// dual(U) U for Haar U in U(2n); self-dual, 2n x 2n.
CMatrix sample_cse(std::size_t n, Rng& rng);

}  // namespace cmvrmt
