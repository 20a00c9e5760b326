#include "cmvrmt/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cmvrmt/cmv.hpp"
#include "cmvrmt/eigensolver.hpp"

namespace cmvrmt {

namespace {

double arg_0_2pi(cplx z) {
  const double t = std::arg(z);
  return t < 0.0 ? t + 2.0 * kPi : t;
}

void require_unitary(const CMatrix& u, const char* who) {
  if (u.rows() != u.cols() || u.rows() == 0) throw DomainError(std::string(who) + ": matrix not square");
  if (max_abs(u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols())) > 1e-8)
    throw DomainError(std::string(who) + ": matrix not unitary");
}

}  // namespace

EigenCloud eig(const CMatrix& m) {
  const CVector v = eigenvalues(m);
  EigenCloud c;
  c.values.assign(v.data(), v.data() + v.size());
  return c;
}

EigenCloud roots_via_szego(const VerblunskyString& alphas) {
  const auto phi = szego_forward(alphas);
  try {
    EigenCloud c;
    c.values = aberth_roots(phi.back());
    return c;
  } catch (const ConvergenceError&) {
    return eig(build_cmv(alphas).entries);
  }
}

PointMeasure spectral_measure(const CMatrix& u, double weight_floor, double gap_tol) {
  require_unitary(u, "spectral_measure");
  const SchurDecomposition s = complex_schur(u);
  const Eigen::Index n = u.rows();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < i; ++j)
      if (std::abs(s.t(i, i) - s.t(j, j)) < gap_tol)
        throw DegenerateSpectrum("spectral_measure: eigenvalue gap below tolerance");

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::sort(order.begin(), order.end(),
            [&](Eigen::Index x, Eigen::Index y) { return arg_0_2pi(s.t(x, x)) < arg_0_2pi(s.t(y, y)); });

  PointMeasure mu;
  double total = 0.0;
  for (Eigen::Index j : order) {
    const double w = std::norm(s.q(0, j));
    if (w <= weight_floor) continue;
    const cplx z = s.t(j, j);
    mu.nodes.push_back(z / std::abs(z));
    mu.weights.push_back(w);
    total += w;
  }
  for (double& w : mu.weights) w /= total;
  return mu;
}

MatrixMeasure2 matrix_spectral_measure(const CMatrix& u, double cluster_tol) {
  require_unitary(u, "matrix_spectral_measure");
  if (u.rows() < 2) throw DomainError("matrix_spectral_measure: dimension below 2");
  const SchurDecomposition s = complex_schur(u);
  const Eigen::Index n = u.rows();

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::sort(order.begin(), order.end(),
            [&](Eigen::Index x, Eigen::Index y) { return arg_0_2pi(s.t(x, x)) < arg_0_2pi(s.t(y, y)); });

  // Clusters of eigenvalues within cluster_tol of any member (single linkage).
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  int clusters = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (label[i] >= 0) continue;
    label[i] = clusters;
    std::vector<Eigen::Index> stack{i};
    while (!stack.empty()) {
      const Eigen::Index p = stack.back();
      stack.pop_back();
      for (Eigen::Index j = 0; j < n; ++j)
        if (label[j] < 0 && std::abs(s.t(p, p) - s.t(j, j)) < cluster_tol) {
          label[j] = clusters;
          stack.push_back(j);
        }
    }
    ++clusters;
  }

  std::vector<cplx> node_sum(clusters, 0.0);
  std::vector<int> count(clusters, 0);
  std::vector<Mat2> weight(clusters, Mat2::Zero());
  for (Eigen::Index j = 0; j < n; ++j) {
    const int c = label[j];
    node_sum[c] += s.t(j, j);
    ++count[c];
    Eigen::Vector2cd v(s.q(0, j), s.q(1, j));
    weight[c] += v * v.adjoint();
  }

  MatrixMeasure2 out;
  std::vector<int> seen(clusters, 0);
  for (Eigen::Index j : order) {
    const int c = label[j];
    if (seen[c]++) continue;
    if (weight[c].trace().real() <= 1e-14) continue;
    const cplx z = node_sum[c] / static_cast<double>(count[c]);
    out.nodes.push_back(z / std::abs(z));
    out.weights.push_back(0.5 * (weight[c] + weight[c].adjoint()));
  }
  return out;
}

double default_strat_tol(const std::vector<cplx>& values) {
  double m = 1.0;
  for (cplx z : values) m = std::max(m, std::abs(z));
  return 1e-8 * m;
}

EigenCloud stratify(const EigenCloud& cloud, std::optional<double> strat_tol) {
  const double tol = strat_tol.value_or(default_strat_tol(cloud.values));
  std::vector<double> reals;
  std::vector<cplx> upper, lower;
  for (cplx z : cloud.values) {
    if (std::abs(z.imag()) < tol) reals.push_back(z.real());
    else if (z.imag() > 0.0) upper.push_back(z);
    else lower.push_back(z);
  }
  if (upper.size() != lower.size()) throw DomainError("stratify: cloud not closed under conjugation");

  std::vector<cplx> reps;
  std::vector<bool> used(lower.size(), false);
  for (cplx p : upper) {
    std::size_t best = lower.size();
    double bd = INFINITY;
    for (std::size_t j = 0; j < lower.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(p - std::conj(lower[j]));
      if (d < bd) {
        bd = d;
        best = j;
      }
    }
    if (best == lower.size() || bd > tol) throw DomainError("stratify: unpaired non-real value");
    used[best] = true;
    reps.push_back(0.5 * (p + std::conj(lower[best])));
  }

  std::sort(reals.begin(), reals.end());
  std::sort(reps.begin(), reps.end(), [](cplx x, cplx y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });

  EigenCloud out;
  out.provenance = cloud.provenance;
  out.values.reserve(cloud.values.size());
  for (double x : reals) out.values.emplace_back(x, 0.0);
  for (cplx z : reps) out.values.push_back(z);
  for (cplx z : reps) out.values.push_back(std::conj(z));
  out.stratum = Stratum{static_cast<int>(reals.size()), static_cast<int>(reps.size())};
  return out;
}

double matching_distance(const std::vector<cplx>& z, const std::vector<cplx>& w) {
  if (z.size() != w.size()) throw DomainError("matching_distance: size mismatch");
  const std::size_t n = z.size();
  if (n == 0) return 0.0;
  std::vector<double> d(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i * n + j] = std::abs(z[i] - w[j]);
  std::vector<double> levels = d;
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  // Perfect matching using only edges with distance <= thr (Kuhn's algorithm).
  auto feasible = [&](double thr) {
    std::vector<int> match_w(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<char> visited(n, 0);
      auto augment = [&](auto&& self, std::size_t u) -> bool {
        for (std::size_t j = 0; j < n; ++j) {
          if (visited[j] || d[u * n + j] > thr) continue;
          visited[j] = 1;
          if (match_w[j] < 0 || self(self, static_cast<std::size_t>(match_w[j]))) {
            match_w[j] = static_cast<int>(u);
            return true;
          }
        }
        return false;
      };
      if (!augment(augment, i)) return false;
    }
    return true;
  };

  std::size_t lo = 0, hi = levels.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (feasible(levels[mid])) hi = mid;
    else lo = mid + 1;
  }
  return levels[lo];
}

double matching_distance(const CVector& z, const CVector& w) {
  return matching_distance(std::vector<cplx>(z.data(), z.data() + z.size()),
                           std::vector<cplx>(w.data(), w.data() + w.size()));
}

}  // namespace cmvrmt
