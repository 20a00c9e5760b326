#pragma once

#include <vector>

#include "cmvrmt/core.hpp"

namespace cmvrmt {

/// Finitely supported probability measure on the unit circle.
struct PointMeasure {
  std::vector<cplx> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }

  /// sum_j mu_j z_j^m (m may be negative)
  cplx moment(int m) const;

  /// Throws DomainError unless nodes are unimodular (1e-10), pairwise distinct
  /// (gap > min_gap), weights are positive and sum to 1 within sum_tol.
  void validate(double sum_tol = 1e-10, double min_gap = 1e-10) const;
};

/// Measure with 2x2 Hermitian PSD weights.
struct MatrixMeasure2 {
  std::vector<cplx> nodes;
  std::vector<Mat2> weights;

  std::size_t size() const { return nodes.size(); }
  Mat2 total() const;
  /// sum_j W_j z_j^m
  Mat2 moment(int m) const;
};

}  // namespace cmvrmt
