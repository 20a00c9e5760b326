#include "cmvrmt/verify.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "cmvrmt/cmv.hpp"
#include "cmvrmt/densities.hpp"
#include "cmvrmt/distributions.hpp"
#include "cmvrmt/haar.hpp"
#include "cmvrmt/jacobians.hpp"
#include "cmvrmt/polynomial.hpp"
#include "cmvrmt/spectra.hpp"

namespace cmvrmt {

namespace {

bool law_coupled(const EnsembleSpec& s) { return s.coupling && s.coupling->law == ReflectionLaw::ScalarLaw; }

CMatrix haar_orthogonal_with_det(std::size_t n, int det, Rng& rng) {
  CMatrix u = sample_haar(Group::O, n, rng);
  if ((u.determinant().real() > 0.0) != (det > 0)) u.col(0) *= -1.0;
  return u;
}

double arg01(cplx z) {
  const double t = std::arg(z);
  return t < 0.0 ? t + 2.0 * kPi : t;
}

std::vector<double> flatten(const std::vector<std::vector<double>>& parts) {
  std::vector<double> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<cplx> random_disk(std::size_t n, Rng& rng, double radius = 0.95) {
  std::vector<cplx> a(n);
  for (auto& x : a) x = radius * sample_theta(3.0, rng);
  return a;
}

std::vector<double> random_interval(std::size_t n, Rng& rng, double radius = 0.95) {
  std::vector<double> a(n);
  for (auto& x : a) x = radius * (2.0 * rng.uniform01() - 1.0);
  return a;
}

// Random string of length n with a unimodular last coefficient.
VerblunskyString full_string(std::size_t n, Rng& rng) {
  auto a = random_disk(n, rng);
  a.back() = std::polar(1.0, 2.0 * kPi * rng.uniform01());
  return VerblunskyString::complex(a);
}

struct Sizes {
  std::size_t identity_count;
  std::size_t jacobian_count;
  std::size_t law_samples;
  std::size_t model_reps;
};

Sizes sizes_for(Suite s) {
  if (s == Suite::Full) return {100, 50, 10000, 5000};
  return {20, 10, 4000, 1500};
}

template <class F>
std::vector<double> draw(std::size_t count, std::uint64_t seed, unsigned threads, F&& f) {
  std::vector<double> out(count);
  parallel_for(count, threads, [&](std::size_t r) {
    Rng rng = make_stream(seed, r);
    out[r] = f(rng);
  });
  return out;
}

void identity_checks(const Sizes& sz, std::uint64_t seed, std::vector<TestReport>& out) {
  Rng rng = make_stream(seed, 0);
  double charpoly = 0.0, trunc = 0.0, ident = 0.0, sym_band = 0.0, sym_unit = 0.0, sym_spec = 0.0, sym_asym = 0.0;
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::size_t c = 0; c < sz.identity_count; ++c) {
      const VerblunskyString a = full_string(n, rng);
      const CMatrix cm = build_cmv(a).entries;
      const EigenCloud ev = eig(cm);
      const Poly from_eig = poly_from_roots(ev.values);
      const Poly phi = szego_forward(a).back();
      for (std::size_t k = 0; k < phi.size(); ++k) charpoly = std::max(charpoly, std::abs(from_eig[k] - phi[k]));

      if (n >= 2) {
        const ReversedTruncation rt = reversed_truncation_coeffs(a);
        const CMatrix rc = build_cmv(rt.alphas).entries;
        trunc = std::max(trunc, matching_distance(eig(truncate_first(cm)).values,
                                                  eig(rt.transpose ? CMatrix(rc.transpose()) : rc).values));
      }

      try {
        const PointMeasure mu = spectral_measure(cm);
        ident = std::max(ident, identity_suite(a, mu).worst());
      } catch (const DegenerateSpectrum&) {
        ident = std::max(ident, identity_suite(a).worst());
      }

      if (n >= 2) {
        const CMatrix s = build_symmetric_cmv(a).entries;
        sym_asym = std::max(sym_asym, max_abs(s - s.transpose()));
        sym_band = std::max(sym_band, static_cast<double>(bandwidth(s, 1e-14)));
        sym_unit = std::max(sym_unit, max_abs(s.adjoint() * s - CMatrix::Identity(s.rows(), s.cols())));
        sym_spec = std::max(sym_spec, matching_distance(eig(s).values, ev.values));
      }
    }
  }
  out.push_back(threshold_report("charpoly_vs_szego", charpoly, 1e-10, 12 * sz.identity_count, seed));
  out.push_back(threshold_report("truncation_reversed_string", trunc, 1e-8, 11 * sz.identity_count, seed));
  out.push_back(threshold_report("opuc_identities", ident, 1e-9, 12 * sz.identity_count, seed));
  out.push_back(threshold_report("symmetric_cmv_asymmetry", sym_asym, 0.0, 11 * sz.identity_count, seed));
  out.push_back(threshold_report("symmetric_cmv_bandwidth", sym_band, 3.0, 11 * sz.identity_count, seed));
  out.push_back(threshold_report("symmetric_cmv_unitarity", sym_unit, 1e-12, 11 * sz.identity_count, seed));
  out.push_back(threshold_report("symmetric_cmv_spectrum", sym_spec, 1e-8, 11 * sz.identity_count, seed));
}

void jacobian_checks(const Sizes& sz, std::uint64_t seed, std::vector<TestReport>& out) {
  Rng rng = make_stream(seed, 1);
  double worst[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t n = 2; n <= 4; ++n) {
    for (std::size_t c = 0; c < sz.jacobian_count; ++c) {
      std::vector<cplx> real_roots;
      for (double x : random_interval(n, rng, 0.9)) real_roots.emplace_back(x, 0.0);
      try {
        worst[0] = std::max(worst[0], jacobian_fd_roots_to_coeffs(real_roots, true).statistic);
        worst[1] = std::max(worst[1], jacobian_fd_roots_to_coeffs(random_disk(n, rng, 0.9), false).statistic);
      } catch (const DomainError&) {
        continue;
      }
      worst[2] = std::max(worst[2], jacobian_fd_coeffs_to_alphas(VerblunskyString::real(random_interval(n, rng, 0.9))).statistic);
      worst[3] = std::max(worst[3], jacobian_fd_coeffs_to_alphas(VerblunskyString::complex(random_disk(n, rng, 0.9))).statistic);
    }
  }
  const char* names[4] = {"jacobian_roots_real", "jacobian_roots_complex", "jacobian_alphas_real",
                          "jacobian_alphas_complex"};
  for (int i = 0; i < 4; ++i) out.push_back(threshold_report(names[i], worst[i], kFdTol, 3 * sz.jacobian_count, seed));
}

void law_checks(const Sizes& sz, std::uint64_t seed, unsigned threads, std::vector<TestReport>& out) {
  const std::size_t m = sz.law_samples;
  out.push_back(ks_one_sample(draw(m, seed + 10, threads, [](Rng& r) { return sample_beta_sym(1.0, 1.0, r); }),
                              uniform_cdf(-1.0, 1.0), "sampler_b11_uniform", seed + 10));
  out.push_back(ks_one_sample(draw(m, seed + 11, threads, [](Rng& r) { return std::norm(sample_theta(3.0, r)); }),
                              uniform_cdf(), "sampler_theta3_disk", seed + 11));
  out.push_back(ks_one_sample(draw(m, seed + 12, threads,
                                   [](Rng& r) {
                                     const Mat2 q = sample_upsilon(7.0, r);
                                     return std::norm(q(0, 0)) + std::norm(q(0, 1));
                                   }),
                              beta_cdf(2.0, 2.0), "sampler_upsilon7_radius", seed + 12));
  out.push_back(ks_one_sample(
      draw(m, seed + 13, threads, [](Rng& r) { return sample_simplex_pushforward(SimplexKind::E, 2, r)[0]; }),
      beta_cdf(2.0, 2.0), "sampler_simplex_e2", seed + 13));
  out.push_back(ks_one_sample(draw(m, seed + 14, threads,
                                   [](Rng& r) { return std::norm(cmvfy(sample_haar(Group::U, 5, r)).scalars()[0]); }),
                              beta_cdf(1.0, 4.0), "cmvfy_u5_alpha0", seed + 14));
  out.push_back(ks_one_sample(
      draw(m, seed + 15, threads, [](Rng& r) { return cmvfy(sample_haar(Group::O, 6, r)).scalars()[0].real(); }),
      beta_sym_cdf(2.5, 2.5), "cmvfy_o6_alpha0", seed + 15));
  out.push_back(ks_one_sample(
      draw(m, seed + 16, threads, [](Rng& r) { return spectral_measure(sample_haar(Group::U, 4, r)).weights[0]; }),
      beta_cdf(1.0, 3.0), "weights_u4_mu1", seed + 16));
  out.push_back(ks_one_sample(draw(m, seed + 17, threads,
                                   [](Rng& r) {
                                     const CMatrix u = sample_haar(Group::U, 2, r);
                                     return std::norm(u(1, 1));
                                   }),
                              uniform_cdf(), "trunc_cue1_disk", seed + 17));
  out.push_back(ks_one_sample(
      draw(m, seed + 18, threads, [](Rng& r) { return sample_haar(Group::O, 2, r)(1, 1).real(); }), arcsine_cdf(),
      "trunc_o1_arcsine", seed + 18));
}

void model_checks(const Sizes& sz, std::uint64_t seed, unsigned threads, std::vector<TestReport>& out) {
  std::vector<EnsembleSpec> specs;
  auto add = [&](Family f, std::size_t n, bool truncated) {
    EnsembleSpec s = make_spec(f, n);
    s.truncated = truncated;
    specs.push_back(s);
  };
  add(Family::CUE, 4, true);
  add(Family::CUE, 4, false);
  add(Family::COE, 3, true);
  add(Family::O, 5, true);
  add(Family::SO, 5, false);
  add(Family::OMinusSO, 4, false);
  add(Family::CSE, 3, false);
  add(Family::USp, 3, true);
  EnsembleSpec coupled = make_spec(Family::CUE, 4);
  coupled.coupling = CouplingSpec{ReflectionLaw::ScalarLaw, 1.0};
  specs.push_back(coupled);
  std::uint64_t s = seed + 100;
  for (const auto& spec : specs) {
    const auto reports = model_vs_haar(spec, sz.model_reps, s++, threads);
    out.insert(out.end(), reports.begin(), reports.end());
  }
}

void density_checks(const VerifyOptions& opt, std::vector<TestReport>& out) {
  const double shift = opt.mutate_constant ? std::log(1.05) : 0.0;
  boost::math::quadrature::tanh_sinh<double> integrator;

  const double p1 = std::exp(normalization_table({1, 2.7, -0.5, -0.5}).log_P + shift);
  out.push_back(threshold_report("constant_p1_pi", std::abs(p1 - kPi) / kPi, 1e-14, 1, opt.seed));

  for (double beta : {1.0, 2.0, 3.0, 4.0}) {
    const double total = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        [&](double t) {
          const double r = std::sin(t);
          if (!(r < 1.0)) return 0.0;
          return 2.0 * kPi * r * std::cos(t) * std::exp(log_density_trunc_circular({cplx(r, 0.0)}, beta) - shift);
        },
        0.0, 0.5 * kPi, 0);
    out.push_back(threshold_report("norm_trunc_circular_n1_beta" + std::to_string(static_cast<int>(beta)),
                                   std::abs(total - 1.0), 1e-8, 1, opt.seed));
  }
  for (double beta : {1.0, 2.0, 4.0}) {
    const double a = 0.3, b = -0.2;
    const double total = integrator.integrate(
        [&](double x) {
          EigenCloud c;
          c.values = {cplx(x, 0.0)};
          c.stratum = Stratum{1, 0};
          return std::exp(log_density_trunc_orthogonal(c, beta, a, b) - shift);
        },
        -1.0, 1.0);
    out.push_back(threshold_report("norm_trunc_orthogonal_n1_beta" + std::to_string(static_cast<int>(beta)),
                                   std::abs(total - 1.0), 1e-8, 1, opt.seed));
  }

  Rng rng = make_stream(opt.seed, 2);
  for (double beta : {1.0, 2.0, 4.0}) {
    const LogGasParams p = loggas_params_for(2.0, beta / 2.0 - 1.0);
    std::vector<double> diffs;
    for (int c = 0; c < 100; ++c) {
      const auto zs = random_disk(5, rng, 0.9);
      diffs.push_back(-log_gas_energy(zs, p) / p.kT - log_density_trunc_circular(zs, beta));
    }
    const double m = mean(diffs);
    double var = 0.0;
    for (double d : diffs) var += (d - m) * (d - m);
    var /= static_cast<double>(diffs.size() - 1);
    out.push_back(threshold_report("loggas_beta" + std::to_string(static_cast<int>(beta)), var, 1e-16, 100, opt.seed));
  }
}

}  // namespace

CMatrix direct_matrix(const EnsembleSpec& spec, Rng& rng) {
  spec.validate();
  if (spec.coupling && !law_coupled(spec)) throw DomainError("direct_matrix: constant coupling has no direct counterpart");
  if (law_coupled(spec) && (spec.family == Family::SO || spec.family == Family::OMinusSO))
    throw DomainError("direct_matrix: coupled SO models have no direct counterpart");
  const bool minor = spec.truncated || law_coupled(spec);
  const std::size_t n = minor ? spec.n + 1 : spec.n;
  CMatrix u;
  switch (spec.family) {
    case Family::CUE: u = sample_haar(Group::U, n, rng); break;
    case Family::COE: u = sample_coe(n, rng); break;
    case Family::CSE: u = sample_cse(n, rng); break;
    case Family::O: u = sample_haar(Group::O, n, rng); break;
    case Family::SO: u = haar_orthogonal_with_det(n, 1, rng); break;
    case Family::OMinusSO: u = haar_orthogonal_with_det(n, -1, rng); break;
    case Family::USp: u = sample_haar(Group::USp, n, rng); break;
    default: throw DomainError("direct_matrix: no direct counterpart for " + spec.tag());
  }
  return minor ? truncate_first(u, spec.block() ? 2 : 1) : u;
}

std::vector<TestReport> model_vs_haar(const EnsembleSpec& spec, std::size_t reps, std::uint64_t seed,
                                      unsigned threads) {
  Rng probe(seed, 0);
  (void)direct_matrix(spec, probe);
  const bool minor = spec.truncated || law_coupled(spec);
  const bool coeffs = !minor && !spec.block();
  std::vector<std::vector<double>> pooled_m(reps), pooled_d(reps);
  std::vector<double> trace_m(reps), trace_d(reps), alpha_m(reps), alpha_d(reps);
  auto pooled_stat = [minor](cplx z) { return minor ? std::abs(z) : arg01(z); };
  auto alpha_stat = [&spec](const VerblunskyString& a) {
    const cplx x = a.is_scalar() ? a.scalars()[0] : cplx(0.0);
    return spec.real_coefficients() ? x.real() : std::abs(x);
  };
  parallel_for(reps, threads, [&](std::size_t r) {
    Rng rm = make_stream(seed, 2 * r);
    const VerblunskyString a = verblunsky_model(spec, rm);
    const CMatrix cm = a.is_scalar() ? build_cmv(a).entries : build_block_cmv(a).entries;
    const EigenCloud em = eig(cm);
    Rng rd = make_stream(seed, 2 * r + 1);
    const CMatrix dm = direct_matrix(spec, rd);
    const EigenCloud ed = eig(dm);
    cplx sm = 0.0, sd = 0.0;
    for (cplx z : em.values) {
      pooled_m[r].push_back(pooled_stat(z));
      sm += z;
    }
    for (cplx z : ed.values) {
      pooled_d[r].push_back(pooled_stat(z));
      sd += z;
    }
    trace_m[r] = std::norm(sm);
    trace_d[r] = std::norm(sd);
    if (coeffs) {
      alpha_m[r] = alpha_stat(a);
      alpha_d[r] = alpha_stat(cmvfy(dm));
    }
  });
  const std::string tag = spec.tag();
  std::vector<TestReport> out;
  out.push_back(ks_two_sample(flatten(pooled_m), flatten(pooled_d), tag + (minor ? " |z|" : " arg z"), seed));
  out.push_back(ks_two_sample(trace_m, trace_d, tag + " |tr|^2", seed));
  if (coeffs) out.push_back(ks_two_sample(alpha_m, alpha_d, tag + " alpha_0", seed));
  return out;
}

std::vector<TestReport> run_suite(const VerifyOptions& opt) {
  const Sizes sz = sizes_for(opt.suite);
  std::vector<TestReport> out;
  identity_checks(sz, opt.seed, out);
  jacobian_checks(sz, opt.seed, out);
  law_checks(sz, opt.seed, opt.threads, out);
  model_checks(sz, opt.seed, opt.threads, out);
  density_checks(opt, out);
  return out;
}

json reports_to_json(const std::vector<TestReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(report_to_json(r));
  return arr;
}

bool all_pass(const std::vector<TestReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const TestReport& r) { return r.pass; });
}

}  // namespace cmvrmt
