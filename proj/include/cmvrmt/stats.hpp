#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace cmvrmt {

struct TestReport {
  std::string name;
  double statistic = 0.0;
  double threshold = 0.0;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::uint64_t seed = 0;
  bool pass = false;
};

using Cdf = std::function<double(double)>;

/// Kolmogorov-Smirnov against a continuous cdf. Critical value at the 0.1%
/// level with Stephens' finite-n correction: 1.9495 / (sqrt n + 0.12 + 0.11 / sqrt n).
TestReport ks_one_sample(std::vector<double> samples, const Cdf& cdf, std::string name = "ks",
                         std::uint64_t seed = 0);

/// Two-sample KS; critical value 1.9495 sqrt((n + m) / (n m)).
TestReport ks_two_sample(std::vector<double> a, std::vector<double> b, std::string name = "ks2",
                         std::uint64_t seed = 0);

/// Pearson chi-square for observed counts against cell probabilities; critical
/// value is the 0.999 quantile with cells - 1 degrees of freedom.
TestReport chi2_counts(const std::vector<std::size_t>& counts, const std::vector<double>& probs,
                       std::string name = "chi2", std::uint64_t seed = 0);

/// Bins samples by increasing edges (cells [e_i, e_{i+1})) and tests against cdf.
TestReport chi2_bins(const std::vector<double>& samples, const std::vector<double>& edges, const Cdf& cdf,
                     std::string name = "chi2", std::uint64_t seed = 0);

/// Report for a deterministic comparison: pass iff statistic <= threshold.
TestReport threshold_report(std::string name, double statistic, double threshold, std::size_t n1 = 0,
                            std::uint64_t seed = 0);

Cdf uniform_cdf(double lo = 0.0, double hi = 1.0);
Cdf beta_cdf(double p, double q);
/// Law of B(s, t) on [-1, 1].
Cdf beta_sym_cdf(double s, double t);
Cdf arcsine_cdf();

double mean(const std::vector<double>& x);
double standard_error(const std::vector<double>& x);

}  // namespace cmvrmt
