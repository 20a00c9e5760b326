#include "cmvrmt/measure.hpp"

#include <cmath>

namespace cmvrmt {

cplx PointMeasure::moment(int m) const {
  cplx acc = 0.0;
  for (std::size_t j = 0; j < nodes.size(); ++j) acc += weights[j] * std::pow(nodes[j], m);
  return acc;
}

void PointMeasure::validate(double sum_tol, double min_gap) const {
  if (nodes.empty()) throw DomainError("measure: empty support");
  if (nodes.size() != weights.size()) throw DomainError("measure: node/weight count mismatch");
  double total = 0.0;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    if (std::abs(std::abs(nodes[j]) - 1.0) > 1e-10) throw DomainError("measure: node off the unit circle");
    if (!(weights[j] > 0.0)) throw DomainError("measure: non-positive weight");
    total += weights[j];
    for (std::size_t i = 0; i < j; ++i)
      if (std::abs(nodes[i] - nodes[j]) <= min_gap) throw DomainError("measure: duplicate nodes");
  }
  if (std::abs(total - 1.0) > sum_tol) throw DomainError("measure: weights do not sum to 1");
}

Mat2 MatrixMeasure2::total() const {
  Mat2 acc = Mat2::Zero();
  for (const auto& w : weights) acc += w;
  return acc;
}

Mat2 MatrixMeasure2::moment(int m) const {
  Mat2 acc = Mat2::Zero();
  for (std::size_t j = 0; j < nodes.size(); ++j) acc += std::pow(nodes[j], m) * weights[j];
  return acc;
}

}  // namespace cmvrmt
