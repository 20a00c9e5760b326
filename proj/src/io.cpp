#include "cmvrmt/io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace cmvrmt {

namespace {

json provenance_json(const Provenance& p) {
  return {{"ensemble", p.ensemble}, {"seed", p.seed}, {"n", p.n},      {"beta", number_json(p.beta)},
          {"a", number_json(p.a)},  {"b", number_json(p.b)}, {"rep", p.rep}};
}

double json_double(const json& j) {
  if (j.is_string()) return parse_double(j.get<std::string>());
  return j.get<double>();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_double(const std::string& s) {
  std::size_t pos = 0;
  double x = 0.0;
  try {
    x = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw DomainError("not a number: '" + s + "'");
  }
  if (pos != s.size()) throw DomainError("not a number: '" + s + "'");
  return x;
}

json number_json(double x) {
  if (std::isfinite(x)) return x;
  return format_double(x);
}

void write_clouds_csv(std::ostream& os, const std::vector<EigenCloud>& clouds) {
  if (!clouds.empty()) {
    const Provenance& p = clouds.front().provenance;
    os << "# ensemble=" << p.ensemble << '\n'
       << "# seed=" << p.seed << '\n'
       << "# n=" << p.n << '\n'
       << "# beta=" << format_double(p.beta) << '\n'
       << "# a=" << format_double(p.a) << '\n'
       << "# b=" << format_double(p.b) << '\n'
       << "# reps=" << clouds.size() << '\n';
  }
  os << "rep,re,im\n";
  for (const auto& c : clouds)
    for (const cplx& z : c.values)
      os << c.provenance.rep << ',' << format_double(z.real()) << ',' << format_double(z.imag()) << '\n';
}

std::vector<EigenCloud> read_clouds_csv(std::istream& is) {
  Provenance prov;
  std::map<std::size_t, EigenCloud> by_rep;
  std::string line;
  bool header = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      std::string key = line.substr(1, eq - 1);
      key.erase(0, key.find_first_not_of(' '));
      const std::string val = line.substr(eq + 1);
      if (key == "ensemble") prov.ensemble = val;
      else if (key == "seed") prov.seed = std::stoull(val);
      else if (key == "n") prov.n = std::stoull(val);
      else if (key == "beta") prov.beta = parse_double(val);
      else if (key == "a") prov.a = parse_double(val);
      else if (key == "b") prov.b = parse_double(val);
      continue;
    }
    if (!header) {
      if (line != "rep,re,im") throw DomainError("read_clouds_csv: missing 'rep,re,im' header");
      header = true;
      continue;
    }
    const auto f = split(line, ',');
    if (f.size() != 3) throw DomainError("read_clouds_csv: malformed row '" + line + "'");
    const std::size_t rep = std::stoull(f[0]);
    auto& c = by_rep[rep];
    c.provenance = prov;
    c.provenance.rep = rep;
    c.values.emplace_back(parse_double(f[1]), parse_double(f[2]));
  }
  std::vector<EigenCloud> out;
  for (auto& [rep, c] : by_rep) out.push_back(std::move(c));
  return out;
}

json cloud_to_json(const EigenCloud& cloud) {
  json values = json::array();
  for (const cplx& z : cloud.values) values.push_back({z.real(), z.imag()});
  json j = {{"provenance", provenance_json(cloud.provenance)}, {"values", values}};
  if (cloud.stratum) j["stratum"] = {{"real", cloud.stratum->real_count}, {"pairs", cloud.stratum->pair_count}};
  return j;
}

EigenCloud cloud_from_json(const json& j) {
  EigenCloud c;
  if (j.contains("provenance")) {
    const json& p = j.at("provenance");
    c.provenance.ensemble = p.value("ensemble", "");
    c.provenance.seed = p.value("seed", std::uint64_t{0});
    c.provenance.n = p.value("n", std::size_t{0});
    c.provenance.rep = p.value("rep", std::size_t{0});
    if (p.contains("beta")) c.provenance.beta = json_double(p.at("beta"));
    if (p.contains("a")) c.provenance.a = json_double(p.at("a"));
    if (p.contains("b")) c.provenance.b = json_double(p.at("b"));
  }
  for (const json& v : j.at("values")) c.values.emplace_back(json_double(v.at(0)), json_double(v.at(1)));
  if (j.contains("stratum")) c.stratum = Stratum{j["stratum"].at("real").get<int>(), j["stratum"].at("pairs").get<int>()};
  return c;
}

json clouds_to_json(const std::vector<EigenCloud>& clouds) {
  json arr = json::array();
  for (const auto& c : clouds) arr.push_back(cloud_to_json(c));
  return arr;
}

std::vector<EigenCloud> clouds_from_json(const json& j) {
  std::vector<EigenCloud> out;
  for (const json& c : j) out.push_back(cloud_from_json(c));
  return out;
}

json matrix_to_json(const CMatrix& m) {
  json data = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back({m(i, k).real(), m(i, k).imag()});
    data.push_back(row);
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

CMatrix matrix_from_json(const json& j) {
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const json& data = j.at("data");
  if (rows <= 0 || cols <= 0 || static_cast<Eigen::Index>(data.size()) != rows)
    throw DomainError("matrix_from_json: shape does not match data");
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = data.at(static_cast<std::size_t>(i));
    if (static_cast<Eigen::Index>(row.size()) != cols) throw DomainError("matrix_from_json: ragged row");
    for (Eigen::Index k = 0; k < cols; ++k) {
      const json& e = row.at(static_cast<std::size_t>(k));
      m(i, k) = e.is_array() ? cplx(json_double(e.at(0)), json_double(e.at(1))) : cplx(json_double(e), 0.0);
    }
  }
  return m;
}

json measure_to_json(const PointMeasure& mu) {
  json nodes = json::array(), weights = json::array();
  for (std::size_t k = 0; k < mu.size(); ++k) {
    nodes.push_back({mu.nodes[k].real(), mu.nodes[k].imag()});
    weights.push_back(mu.weights[k]);
  }
  return {{"nodes", nodes}, {"weights", weights}};
}

json measure_to_json(const MatrixMeasure2& mu) {
  json nodes = json::array(), weights = json::array();
  for (std::size_t k = 0; k < mu.size(); ++k) {
    nodes.push_back({mu.nodes[k].real(), mu.nodes[k].imag()});
    weights.push_back(matrix_to_json(mu.weights[k]));
  }
  return {{"nodes", nodes}, {"weights", weights}};
}

json report_to_json(const TestReport& r) {
  return {{"name", r.name}, {"statistic", number_json(r.statistic)}, {"threshold", number_json(r.threshold)},
          {"n1", r.n1},     {"n2", r.n2},                            {"seed", r.seed},
          {"pass", r.pass}};
}

}  // namespace cmvrmt
