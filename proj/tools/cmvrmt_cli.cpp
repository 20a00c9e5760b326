#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cmvrmt/cmv.hpp"
#include "cmvrmt/densities.hpp"
#include "cmvrmt/ensembles.hpp"
#include "cmvrmt/io.hpp"
#include "cmvrmt/spectra.hpp"
#include "cmvrmt/verify.hpp"

using namespace cmvrmt;

namespace {

constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::string ensemble;
  std::size_t n = 0;
  double beta = 0.0;
  double a = -0.5;
  double b = -0.5;
  bool truncated = false;
  std::string coupling_r;
  int det = 1;
  std::size_t reps = 1;
  std::uint64_t seed = 0;
  std::string format = "csv";
  std::string out;
  std::string config;
  unsigned threads = 0;
};

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

// Values from the config file fill options not given on the command line.
void apply_config(CLI::App& cmd, Flags& f) {
  if (f.config.empty()) return;
  const json cfg = load_json(f.config);
  if (!cfg.is_object()) throw UsageError("config must be a JSON object");
  auto unset = [&](const char* name) { return cmd.get_option(name)->count() == 0; };
  auto take = [&](const char* key, const char* opt, auto& field) {
    if (!cfg.contains(key) || !unset(opt)) return;
    try {
      field = cfg.at(key).get<std::decay_t<decltype(field)>>();
    } catch (const json::exception&) {
      throw UsageError(std::string("config key '") + key + "' has the wrong type");
    }
  };
  take("ensemble", "--ensemble", f.ensemble);
  take("n", "--n", f.n);
  take("beta", "--beta", f.beta);
  take("a", "--a", f.a);
  take("b", "--b", f.b);
  take("truncated", "--truncated", f.truncated);
  take("det", "--det", f.det);
  take("reps", "--reps", f.reps);
  take("seed", "--seed", f.seed);
  take("format", "--format", f.format);
  take("out", "--out", f.out);
  if (cfg.contains("coupling_r") && unset("--coupling-r")) {
    const json& c = cfg["coupling_r"];
    f.coupling_r = c.is_string() ? c.get<std::string>() : format_double(c.get<double>());
  }
}

EnsembleSpec spec_from(const CLI::App& cmd, const Flags& f) {
  if (f.ensemble.empty()) throw UsageError("--ensemble is required");
  EnsembleSpec s;
  try {
    s = parse_ensemble(f.ensemble);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if (f.n == 0) throw UsageError("--n must be positive");
  s.n = f.n;
  if (cmd.get_option("--beta")->count() > 0 || f.beta > 0.0) s.beta = f.beta;
  s.a = f.a;
  s.b = f.b;
  s.truncated = s.truncated || f.truncated;
  s.det_sign = f.det;
  if (!f.coupling_r.empty()) {
    if (f.coupling_r == "law") {
      s.coupling = CouplingSpec{ReflectionLaw::ScalarLaw, 1.0};
    } else {
      try {
        s.coupling = CouplingSpec{ReflectionLaw::Constant, parse_double(f.coupling_r)};
      } catch (const DomainError&) {
        throw UsageError("--coupling-r takes a number in [0, 1] or 'law'");
      }
    }
  }
  try {
    s.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  return s;
}

void emit(const Flags& f, const std::string& text) {
  if (f.out.empty() || f.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream os(f.out, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + f.out);
  os << text;
}

std::string render_clouds(const Flags& f, const std::vector<EigenCloud>& clouds) {
  if (f.format == "json") return clouds_to_json(clouds).dump(1) + "\n";
  std::ostringstream os;
  write_clouds_csv(os, clouds);
  return os.str();
}

void require_seed(const CLI::App& cmd, const Flags& f) {
  if (cmd.get_option("--seed")->count() == 0 && f.config.empty()) throw UsageError("--seed is required");
  if (cmd.get_option("--seed")->count() == 0 && !load_json(f.config).contains("seed"))
    throw UsageError("--seed is required");
}

void add_common(CLI::App& cmd, Flags& f) {
  cmd.add_option("--ensemble", f.ensemble, "cue, coe, cse, circular-beta, o, so, o-minus-so, orthogonal-beta, usp; trunc- prefix truncates");
  cmd.add_option("--n", f.n, "size (quaternionic size for cse/usp)");
  cmd.add_option("--beta", f.beta);
  cmd.add_option("--a", f.a);
  cmd.add_option("--b", f.b);
  cmd.add_flag("--truncated", f.truncated);
  cmd.add_option("--coupling-r", f.coupling_r, "reflection coefficient R in [0,1], or 'law'");
  cmd.add_option("--det", f.det, "determinant sign for orthogonal-beta")->check(CLI::IsMember({-1, 1}));
  cmd.add_option("--reps", f.reps)->check(CLI::PositiveNumber);
  cmd.add_option("--seed", f.seed);
  cmd.add_option("--format", f.format)->check(CLI::IsMember({"csv", "json"}));
  cmd.add_option("--out", f.out);
  cmd.add_option("--config", f.config, "JSON file with the same keys as the flags");
  cmd.add_option("--threads", f.threads, "0 = all cores");
}

int cmd_sample(CLI::App& cmd, Flags& f) {
  apply_config(cmd, f);
  require_seed(cmd, f);
  const EnsembleSpec spec = spec_from(cmd, f);
  auto clouds = sample_ensemble_eigs(spec, f.reps, f.seed, f.threads);
  emit(f, render_clouds(f, clouds));
  return 0;
}

int cmd_figure(CLI::App& cmd, Flags& f, const std::string& preset) {
  apply_config(cmd, f);
  require_seed(cmd, f);
  std::vector<FigurePreset> presets;
  if (preset == "trunc-cue" || preset == "all") presets.push_back(FigurePreset::TruncCue);
  if (preset == "trunc-o" || preset == "all") presets.push_back(FigurePreset::TruncO);
  if (preset == "trunc-usp" || preset == "all") presets.push_back(FigurePreset::TruncUsp);
  std::vector<EigenCloud> clouds;
  std::size_t rep = 0;
  for (FigurePreset p : presets) {
    for (auto& c : sample_ensemble_eigs(figure_spec(p), 1, f.seed, f.threads)) {
      c.provenance.rep = rep++;
      clouds.push_back(std::move(c));
    }
  }
  if (f.format == "json") {
    emit(f, clouds_to_json(clouds).dump(1) + "\n");
  } else {
    std::ostringstream os;
    for (const auto& c : clouds) {
      os << "# figure " << c.provenance.ensemble << " points=" << c.size() << '\n';
    }
    write_clouds_csv(os, clouds);
    emit(f, os.str());
  }
  return 0;
}

int cmd_eigen(Flags& f, const std::string& matrix_path) {
  EigenCloud c = eig(matrix_from_json(load_json(matrix_path)));
  c.provenance.ensemble = "matrix:" + matrix_path;
  c.provenance.n = c.size();
  emit(f, render_clouds(f, {c}));
  return 0;
}

int cmd_measure(Flags& f, const std::string& matrix_path, bool block) {
  const CMatrix u = matrix_from_json(load_json(matrix_path));
  const json j = block ? measure_to_json(matrix_spectral_measure(u)) : measure_to_json(spectral_measure(u));
  emit(f, j.dump(1) + "\n");
  return 0;
}

std::vector<cplx> read_points(const json& row) {
  std::vector<cplx> zs;
  for (const json& z : row) {
    if (z.is_array()) zs.emplace_back(z.at(0).get<double>(), z.at(1).get<double>());
    else zs.emplace_back(z.get<double>(), 0.0);
  }
  return zs;
}

OrthoCase parse_case(const std::string& s) {
  if (s == "a") return OrthoCase::A;
  if (s == "b") return OrthoCase::B;
  if (s == "c") return OrthoCase::C;
  if (s == "d") return OrthoCase::D;
  throw UsageError("case must be one of a, b, c, d");
}

int cmd_density(CLI::App& cmd, Flags& f, const std::string& input, std::string formula) {
  const json in = load_json(input);
  if (formula.empty()) formula = in.value("formula", "");
  double beta = in.value("beta", 2.0), a = in.value("a", -0.5), b = in.value("b", -0.5);
  if (cmd.get_option("--beta")->count() > 0) beta = f.beta;
  if (cmd.get_option("--a")->count() > 0) a = f.a;
  if (cmd.get_option("--b")->count() > 0) b = f.b;
  const json rows = in.value("configurations", json::array());
  std::vector<double> poly;
  if (in.contains("weight_poly")) poly = in["weight_poly"].get<std::vector<double>>();
  const WeightFn weight = [poly](double r) {
    double s = 0.0;
    for (std::size_t k = poly.size(); k-- > 0;) s = s * r + poly[k];
    return poly.empty() ? 1.0 : s;
  };

  std::string constant;
  if (formula == "trunc_circular") constant = "beta^n/(2 pi)^n";
  else if (formula == "trunc_orthogonal") constant = "P_n";
  else if (formula == "spectral_circular") constant = "Z_n, Z'_n";
  else if (formula == "spectral_orthogonal") constant = "C_n K_n | D_n L_n | E_n M_n";
  else if (formula == "nonideal_circular") constant = "beta^n/(2 pi)^n";
  else if (formula == "nonideal_orthogonal") constant = "P_n(a = b = beta/4 - 1)";
  else throw UsageError("unknown formula '" + formula + "'");

  json values = json::array();
  for (const json& row : rows) {
    json r;
    try {
      double v = 0.0;
      if (formula == "spectral_circular" || formula == "spectral_orthogonal") {
        const auto th = row.at("theta").get<std::vector<double>>();
        const auto mu = row.at("mu").get<std::vector<double>>();
        v = formula == "spectral_circular"
                ? log_density_spectral_circular(th, mu, beta)
                : log_density_spectral_orthogonal(th, mu, parse_case(in.value("case", "a")), beta, a, b);
      } else {
        const auto zs = read_points(row);
        if (formula == "trunc_circular") {
          v = log_density_trunc_circular(zs, beta);
        } else if (formula == "nonideal_circular") {
          v = log_density_nonideal(zs, beta, weight);
        } else {
          EigenCloud c;
          c.values = zs;
          c = stratify(c);
          v = formula == "trunc_orthogonal" ? log_density_trunc_orthogonal(c, beta, a, b)
                                            : log_density_nonideal(c, beta, weight);
        }
      }
      r["log_density"] = number_json(v);
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception& e) {
      r["error"] = e.what();
    }
    values.push_back(r);
  }
  const json out = {{"formula", formula}, {"constant", constant}, {"beta", beta}, {"a", a}, {"b", b}, {"values", values}};
  emit(f, out.dump(1) + "\n");
  return 0;
}

int cmd_verify(Flags& f, const std::string& suite, bool mutate) {
  VerifyOptions opt;
  opt.suite = suite == "full" ? Suite::Full : Suite::Quick;
  opt.mutate_constant = mutate;
  opt.threads = f.threads;
  if (f.seed != 0) opt.seed = f.seed;
  const auto reports = run_suite(opt);
  emit(f, reports_to_json(reports).dump(1) + "\n");
  for (const auto& r : reports)
    if (!r.pass) std::cerr << "FAIL " << r.name << " statistic=" << format_double(r.statistic)
                           << " threshold=" << format_double(r.threshold) << '\n';
  return all_pass(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CMV matrix models for circular, orthogonal and symplectic ensembles"};
  app.require_subcommand(1);
  Flags f;

  auto* sample = app.add_subcommand("sample", "sample eigenvalue clouds of an ensemble model");
  add_common(*sample, f);

  auto* figure = app.add_subcommand("figure", "clouds for the truncation figure presets");
  add_common(*figure, f);
  std::string preset = "all";
  figure->add_option("--preset", preset)->check(CLI::IsMember({"trunc-cue", "trunc-o", "trunc-usp", "all"}));

  std::string matrix_path;
  auto* eigen = app.add_subcommand("eigen", "eigenvalues of a matrix file");
  add_common(*eigen, f);
  eigen->add_option("--matrix", matrix_path)->required();

  bool block = false;
  auto* measure = app.add_subcommand("measure", "spectral measure of a unitary matrix file");
  add_common(*measure, f);
  measure->add_option("--matrix", matrix_path)->required();
  measure->add_flag("--block", block, "2x2 matrix measure at (e1, e2)");

  std::string input, formula;
  auto* density = app.add_subcommand("density", "log-densities of configurations in a JSON file");
  add_common(*density, f);
  density->add_option("--input", input)->required();
  density->add_option("--formula", formula,
                      "trunc_circular, trunc_orthogonal, spectral_circular, spectral_orthogonal, nonideal_circular, nonideal_orthogonal");

  std::string suite = "quick";
  bool mutate = false;
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  add_common(*verify, f);
  verify->add_option("--suite", suite)->check(CLI::IsMember({"quick", "full"}));
  verify->add_flag("--mutate-constant", mutate, "perturb a normalization constant (the suite must fail)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*sample) return cmd_sample(*sample, f);
    if (*figure) return cmd_figure(*figure, f, preset);
    if (*eigen) return cmd_eigen(f, matrix_path);
    if (*measure) return cmd_measure(f, matrix_path, block);
    if (*density) return cmd_density(*density, f, input, formula);
    if (*verify) return cmd_verify(f, suite, mutate);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kUsage;
}
