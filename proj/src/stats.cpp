#include "cmvrmt/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/special_functions/beta.hpp>

#include "cmvrmt/core.hpp"

namespace cmvrmt {

namespace {

constexpr double kKsCoef = 1.9495;  // sqrt(-log(0.0005) / 2)
constexpr std::size_t kMinSample = 100;

void require_size(std::size_t n, const char* what) {
  if (n == 0) throw DomainError(std::string(what) + ": empty sample");
  if (n < kMinSample) throw DomainError(std::string(what) + ": sample smaller than 100");
}

}  // namespace

TestReport ks_one_sample(std::vector<double> samples, const Cdf& cdf, std::string name, std::uint64_t seed) {
  require_size(samples.size(), "ks_one_sample");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, f - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - f});
  }
  const double sn = std::sqrt(n);
  TestReport r{std::move(name), d, kKsCoef / (sn + 0.12 + 0.11 / sn), samples.size(), 0, seed, false};
  r.pass = r.statistic <= r.threshold;
  return r;
}

TestReport ks_two_sample(std::vector<double> a, std::vector<double> b, std::string name, std::uint64_t seed) {
  require_size(a.size(), "ks_two_sample");
  require_size(b.size(), "ks_two_sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  TestReport r{std::move(name), d, kKsCoef * std::sqrt((na + nb) / (na * nb)), a.size(), b.size(), seed, false};
  r.pass = r.statistic <= r.threshold;
  return r;
}

TestReport chi2_counts(const std::vector<std::size_t>& counts, const std::vector<double>& probs, std::string name,
                       std::uint64_t seed) {
  if (counts.size() != probs.size() || counts.size() < 2) throw DomainError("chi2_counts: need at least two matching cells");
  std::size_t total = 0;
  for (std::size_t c : counts) total += c;
  require_size(total, "chi2_counts");
  double stat = 0.0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (!(probs[k] > 0.0)) throw DomainError("chi2_counts: cell probabilities must be positive");
    const double e = probs[k] * static_cast<double>(total);
    const double d = static_cast<double>(counts[k]) - e;
    stat += d * d / e;
  }
  double mass = 0.0;
  for (double q : probs) mass += q;
  if (std::abs(mass - 1.0) > 1e-9) throw DomainError("chi2_counts: cell probabilities must sum to 1");
  const boost::math::chi_squared dist(static_cast<double>(counts.size() - 1));
  TestReport r{std::move(name), stat, boost::math::quantile(dist, 0.999), total, 0, seed, false};
  r.pass = r.statistic <= r.threshold;
  return r;
}

TestReport chi2_bins(const std::vector<double>& samples, const std::vector<double>& edges, const Cdf& cdf,
                     std::string name, std::uint64_t seed) {
  if (edges.size() < 3 || !std::is_sorted(edges.begin(), edges.end())) throw DomainError("chi2_bins: need increasing edges");
  std::vector<std::size_t> counts(edges.size() - 1, 0);
  std::vector<double> probs(edges.size() - 1);
  for (double x : samples) {
    const auto it = std::upper_bound(edges.begin(), edges.end(), x);
    if (it == edges.begin() || it == edges.end()) {
      if (x == edges.back()) ++counts.back();
      continue;
    }
    ++counts[static_cast<std::size_t>(it - edges.begin()) - 1];
  }
  const double mass = cdf(edges.back()) - cdf(edges.front());
  for (std::size_t k = 0; k + 1 < edges.size(); ++k) probs[k] = (cdf(edges[k + 1]) - cdf(edges[k])) / mass;
  return chi2_counts(counts, probs, std::move(name), seed);
}

TestReport threshold_report(std::string name, double statistic, double threshold, std::size_t n1, std::uint64_t seed) {
  TestReport r{std::move(name), statistic, threshold, n1, 0, seed, false};
  r.pass = statistic <= threshold;
  return r;
}

Cdf uniform_cdf(double lo, double hi) {
  return [lo, hi](double x) { return std::clamp((x - lo) / (hi - lo), 0.0, 1.0); };
}

Cdf beta_cdf(double p, double q) {
  return [p, q](double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return boost::math::ibeta(p, q, x);
  };
}

Cdf beta_sym_cdf(double s, double t) {
  const Cdf f = beta_cdf(t, s);
  return [f](double x) { return f(0.5 * (1.0 + x)); };
}

Cdf arcsine_cdf() {
  return [](double x) {
    if (x <= -1.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return 0.5 + std::asin(x) / std::numbers::pi;
  };
}

double mean(const std::vector<double>& x) {
  if (x.empty()) throw DomainError("mean: empty sample");
  double s = 0.0;
  for (double v : x) s += v;
  return s / static_cast<double>(x.size());
}

double standard_error(const std::vector<double>& x) {
  if (x.size() < 2) throw DomainError("standard_error: need two samples");
  const double m = mean(x);
  double s = 0.0;
  for (double v : x) s += (v - m) * (v - m);
  const double n = static_cast<double>(x.size());
  return std::sqrt(s / (n - 1.0) / n);
}

}  // namespace cmvrmt
