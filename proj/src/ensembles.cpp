#include "cmvrmt/ensembles.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "cmvrmt/cmv.hpp"
#include "cmvrmt/distributions.hpp"

namespace cmvrmt {

namespace {

bool circular(Family f) {
  return f == Family::CUE || f == Family::COE || f == Family::CSE || f == Family::CircularBeta;
}

bool orthogonal_group(Family f) { return f == Family::O || f == Family::SO || f == Family::OMinusSO; }

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

// Truncated orthogonal-beta law at index k.
double trunc_orthogonal(const EnsembleSpec& s, std::size_t k, Rng& rng) {
  const double kk = static_cast<double>(k);
  if (k % 2 == 0) return sample_beta_sym(s.beta * kk / 4.0 + s.a + 1.0, s.beta * kk / 4.0 + s.b + 1.0, rng);
  return sample_beta_sym(s.beta * (kk - 1.0) / 4.0 + s.a + s.b + 2.0, s.beta * (kk + 1.0) / 4.0, rng);
}

// Forced last coefficient of the orthogonal groups, 0 meaning B(0,0).
double group_terminal(Family f, std::size_t n) {
  const bool even = n % 2 == 0;
  switch (f) {
    case Family::SO: return even ? -1.0 : 1.0;
    case Family::OMinusSO: return even ? 1.0 : -1.0;
    default: return 0.0;
  }
}

double coupling_r(const EnsembleSpec& s, Rng& rng) {
  const CouplingSpec& c = *s.coupling;
  if (c.law == ReflectionLaw::Constant) return c.r;
  const double bn = s.beta * static_cast<double>(s.n);
  if (circular(s.family)) return std::sqrt(sample_beta(1.0, bn / 2.0, rng));
  return std::abs(sample_beta_sym(bn / 4.0, bn / 4.0, rng));
}

std::vector<cplx> circular_scalars(const EnsembleSpec& s, Rng& rng) {
  const std::size_t n = s.n;
  std::vector<cplx> a(n);
  if (s.coupling) {
    for (std::size_t k = 0; k + 1 < n; ++k) a[k] = sample_theta(s.beta * static_cast<double>(k + 1) + 1.0, rng);
    const double r = coupling_r(s, rng);
    a[n - 1] = r * sample_theta(1.0, rng);
  } else if (s.truncated) {
    for (std::size_t k = 0; k < n; ++k) a[k] = sample_theta(s.beta * static_cast<double>(k + 1) + 1.0, rng);
  } else {
    for (std::size_t k = 0; k < n; ++k) a[k] = sample_theta(s.beta * static_cast<double>(n - 1 - k) + 1.0, rng);
  }
  return a;
}

std::vector<double> orthogonal_scalars(const EnsembleSpec& s, Rng& rng) {
  const std::size_t n = s.n;
  std::vector<double> a(n);
  const bool group = orthogonal_group(s.family);
  auto trunc_law = [&](std::size_t k) {
    if (group) {
      const double p = 0.5 * static_cast<double>(k + 1);
      return sample_beta_sym(p, p, rng);
    }
    return trunc_orthogonal(s, k, rng);
  };
  if (s.coupling) {
    for (std::size_t k = 0; k + 1 < n; ++k) a[k] = trunc_law(k);
    const double r = coupling_r(s, rng);
    double sigma = group ? group_terminal(s.family, n) : 0.0;
    if (sigma == 0.0) sigma = sample_beta_sym(0.0, 0.0, rng);
    a[n - 1] = r * sigma;
    return a;
  }
  if (s.truncated) {
    for (std::size_t k = 0; k < n; ++k) a[k] = trunc_law(k);
    return a;
  }
  if (group) {
    for (std::size_t k = 0; k + 1 < n; ++k) {
      const double p = 0.5 * static_cast<double>(n - 1 - k);
      a[k] = sample_beta_sym(p, p, rng);
    }
    const double last = group_terminal(s.family, n);
    a[n - 1] = last != 0.0 ? last : sample_beta_sym(0.0, 0.0, rng);
    return a;
  }
  // Real orthogonal beta-ensemble, four cases by parity and determinant.
  const double bq = s.beta / 4.0;
  if (n % 2 == 0) {
    const double m2 = static_cast<double>(n);  // 2m
    for (std::size_t k = 0; k + 1 < n; ++k) {
      const double kk = static_cast<double>(k);
      if (s.det_sign > 0) {
        a[k] = (k % 2 == 0)
                   ? sample_beta_sym((m2 - 2.0 - kk) * bq + s.a + 1.0, (m2 - 2.0 - kk) * bq + s.b + 1.0, rng)
                   : sample_beta_sym((m2 - 3.0 - kk) * bq + s.a + s.b + 2.0, (m2 - 1.0 - kk) * bq, rng);
      } else {
        const double p = (m2 - 1.0 - kk) * bq;
        a[k] = sample_beta_sym(p, p, rng);
      }
    }
    a[n - 1] = s.det_sign > 0 ? -1.0 : 1.0;
  } else {
    const double m2 = static_cast<double>(n - 1);  // 2m
    for (std::size_t k = 0; k + 1 < n; ++k) {
      const double p = (m2 - static_cast<double>(k)) * bq;
      a[k] = sample_beta_sym(p, p, rng);
    }
    a[n - 1] = s.det_sign > 0 ? 1.0 : -1.0;
  }
  return a;
}

std::vector<Mat2> usp_blocks(const EnsembleSpec& s, Rng& rng) {
  const std::size_t n = s.n;
  std::vector<Mat2> a(n);
  if (s.coupling) {
    for (std::size_t k = 0; k + 1 < n; ++k) a[k] = sample_upsilon(4.0 * static_cast<double>(k) + 7.0, rng);
    const double r = coupling_r(s, rng);
    a[n - 1] = r * sample_upsilon(3.0, rng);
  } else if (s.truncated) {
    for (std::size_t k = 0; k < n; ++k) a[k] = sample_upsilon(4.0 * static_cast<double>(k) + 7.0, rng);
  } else {
    for (std::size_t k = 0; k < n; ++k)
      a[k] = sample_upsilon(4.0 * static_cast<double>(n) - 4.0 * static_cast<double>(k) - 1.0, rng);
  }
  return a;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::CUE: return "CUE";
    case Family::COE: return "COE";
    case Family::CSE: return "CSE";
    case Family::CircularBeta: return "CircularBeta";
    case Family::O: return "O";
    case Family::SO: return "SO";
    case Family::OMinusSO: return "O_minus_SO";
    case Family::OrthogonalBeta: return "OrthogonalBeta";
    case Family::USp: return "USp";
  }
  return "?";
}

EnsembleSpec make_spec(Family family, std::size_t n) {
  EnsembleSpec s;
  s.family = family;
  s.n = n;
  switch (family) {
    case Family::COE: s.beta = 1.0; break;
    case Family::CSE:
    case Family::USp: s.beta = 4.0; break;
    default: s.beta = 2.0; break;
  }
  return s;
}

EnsembleSpec parse_ensemble(const std::string& raw) {
  std::string name = lower(raw);
  bool truncated = false;
  for (const char* prefix : {"trunc-", "truncated-"}) {
    const std::string p(prefix);
    if (name.rfind(p, 0) == 0) {
      truncated = true;
      name = name.substr(p.size());
    }
  }
  static const std::pair<const char*, Family> table[] = {
      {"cue", Family::CUE},         {"coe", Family::COE},
      {"cse", Family::CSE},         {"circular-beta", Family::CircularBeta},
      {"cbeta", Family::CircularBeta}, {"o", Family::O},
      {"so", Family::SO},           {"o-minus-so", Family::OMinusSO},
      {"o_minus_so", Family::OMinusSO}, {"orthogonal-beta", Family::OrthogonalBeta},
      {"obeta", Family::OrthogonalBeta}, {"usp", Family::USp},
      {"circularbeta", Family::CircularBeta}, {"orthogonalbeta", Family::OrthogonalBeta}};
  for (const auto& [key, fam] : table)
    if (name == key) {
      EnsembleSpec s = make_spec(fam, 1);
      s.truncated = truncated;
      return s;
    }
  throw DomainError("unknown ensemble '" + raw + "'");
}

bool EnsembleSpec::real_coefficients() const {
  return orthogonal_group(family) || family == Family::OrthogonalBeta;
}

void EnsembleSpec::validate() const {
  if (n == 0) throw DomainError("ensemble: n must be positive");
  if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("ensemble: beta must be positive");
  const auto fixed = [&](double want) {
    if (beta != want) throw DomainError("ensemble: " + family_name(family) + " requires beta = " + std::to_string(want));
  };
  switch (family) {
    case Family::CUE: fixed(2.0); break;
    case Family::COE: fixed(1.0); break;
    case Family::CSE: fixed(4.0); break;
    case Family::USp: fixed(4.0); break;
    case Family::O:
    case Family::SO:
    case Family::OMinusSO: fixed(2.0); break;
    default: break;
  }
  if (family == Family::OrthogonalBeta && !(a > -1.0 && b > -1.0))
    throw DomainError("ensemble: a and b must exceed -1");
  if (truncated && coupling) throw DomainError("ensemble: truncated and coupled are mutually exclusive");
  if (det_sign != 1 && det_sign != -1) throw DomainError("ensemble: det sign must be +1 or -1");
  if (coupling) {
    if (!(coupling->r >= 0.0 && coupling->r <= 1.0)) throw DomainError("ensemble: R_a must lie in [0, 1]");
    if (family == Family::USp && coupling->law != ReflectionLaw::Constant)
      throw DomainError("ensemble: USp coupling supports constant R_a only");
  }
}

std::string EnsembleSpec::tag() const {
  std::ostringstream os;
  if (truncated) os << "trunc-";
  os << family_name(family) << "(n=" << n;
  if (family == Family::CircularBeta || family == Family::OrthogonalBeta) os << ",beta=" << beta;
  if (family == Family::OrthogonalBeta) os << ",a=" << a << ",b=" << b << ",det=" << det_sign;
  if (coupling) {
    if (coupling->law == ReflectionLaw::Constant) os << ",R=" << coupling->r;
    else os << ",R=law";
  }
  os << ")";
  return os.str();
}

VerblunskyString verblunsky_model(const EnsembleSpec& spec, Rng& rng) {
  spec.validate();
  if (spec.family == Family::USp) return VerblunskyString::matrix2(usp_blocks(spec, rng));
  if (spec.family == Family::CSE) {
    const auto a = circular_scalars(spec, rng);
    std::vector<Mat2> blocks;
    blocks.reserve(a.size());
    for (cplx x : a) blocks.push_back(x * Mat2::Identity());
    return VerblunskyString::matrix2(std::move(blocks));
  }
  if (circular(spec.family)) return VerblunskyString::complex(circular_scalars(spec, rng));
  return VerblunskyString::real(orthogonal_scalars(spec, rng));
}

CMatrix model_matrix(const EnsembleSpec& spec, Rng& rng) {
  const VerblunskyString a = verblunsky_model(spec, rng);
  return a.is_scalar() ? build_cmv(a).entries : build_block_cmv(a).entries;
}

EigenCloud sample_model_eigs(const EnsembleSpec& spec, Rng& rng) {
  EigenCloud c = eig(model_matrix(spec, rng));
  if (spec.real_coefficients()) c = stratify(c);
  c.provenance.ensemble = spec.tag();
  c.provenance.n = spec.n;
  c.provenance.beta = spec.beta;
  c.provenance.a = spec.a;
  c.provenance.b = spec.b;
  return c;
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& job) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        job(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
}

std::vector<EigenCloud> sample_ensemble_eigs(const EnsembleSpec& spec, std::size_t reps, std::uint64_t seed,
                                             unsigned threads) {
  spec.validate();
  std::vector<EigenCloud> out(reps);
  parallel_for(reps, threads, [&](std::size_t r) {
    Rng rng = make_stream(seed, r);
    EigenCloud c = sample_model_eigs(spec, rng);
    c.provenance.seed = seed;
    c.provenance.rep = r;
    out[r] = std::move(c);
  });
  return out;
}

EnsembleSpec figure_spec(FigurePreset preset) {
  EnsembleSpec s;
  switch (preset) {
    case FigurePreset::TruncCue: s = make_spec(Family::CUE, 301); break;
    case FigurePreset::TruncO: s = make_spec(Family::O, 301); break;
    case FigurePreset::TruncUsp: s = make_spec(Family::USp, 151); break;
  }
  s.truncated = true;
  return s;
}

}  // namespace cmvrmt
