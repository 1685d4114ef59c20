#include "cli.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubelab/bilinear.hpp"
#include "cubelab/cube.hpp"
#include "cubelab/error.hpp"
#include "cubelab/gaussian.hpp"
#include "cubelab/khintchine.hpp"
#include "cubelab/lacunary.hpp"
#include "cubelab/martingale.hpp"
#include "cubelab/verify.hpp"
#include "cubelab/walsh.hpp"

namespace cubelab::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kExactNote = "exact up to floating-point rounding";

struct Common {
  std::uint64_t seed = 0;
  std::string format;  // empty: the command's default
  std::string input;
};

// Shortest round-trip decimal form, so CSV and JSON agree digit for digit.
std::string num(double x) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

std::string read_input(const Common& c, std::istream& in) {
  std::ostringstream ss;
  if (c.input.empty() || c.input == "-") {
    ss << in.rdbuf();
  } else {
    std::ifstream file(c.input, std::ios::binary);
    if (!file) throw InvalidArgument("input", "cannot open '" + c.input + "'");
    ss << file.rdbuf();
  }
  return ss.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument("input", std::string("malformed JSON (") + e.what() + ")");
  }
}

void check_schema(const Json& j) {
  if (!j.is_object()) throw InvalidArgument("input", "expected a JSON object");
  if (j.contains("schema")) {
    const Json& s = j["schema"];
    if (!s.is_number_integer() || s.get<long long>() != 1) {
      throw InvalidArgument("schema", "unsupported version (expected 1)");
    }
  }
}

const Json& require(const Json& j, const std::string& field) {
  if (!j.contains(field)) throw InvalidArgument(field, "missing");
  return j[field];
}

std::vector<double> numbers(const Json& j, const std::string& field) {
  if (!j.is_array()) throw InvalidArgument(field, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) {
      throw InvalidArgument(field, "entry " + std::to_string(i) + " is not a number");
    }
    out.push_back(j[i].get<double>());
  }
  return out;
}

int integer(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) throw InvalidArgument(field, "expected an integer");
  const auto v = j.get<long long>();
  if (v < -1000000 || v > 1000000) throw InvalidArgument(field, "out of range");
  return static_cast<int>(v);
}

CubeFunction read_function(const std::string& text) {
  const Json j = parse_json(text);
  check_schema(j);
  const int ell = integer(require(j, "ell"), "ell");
  return CubeFunction(ell, numbers(require(j, "values"), "values"));
}

WalshSpectrum read_spectrum(const std::string& text) {
  const Json j = parse_json(text);
  check_schema(j);
  const int ell = integer(require(j, "ell"), "ell");
  return WalshSpectrum(ell, numbers(require(j, "coefficients"), "coefficients"));
}

std::vector<std::vector<double>> read_csv_rows(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream lines(text);
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      const auto b = cell.find_first_not_of(" \t");
      const auto e = cell.find_last_not_of(" \t");
      const std::string t = b == std::string::npos ? "" : cell.substr(b, e - b + 1);
      double v = 0.0;
      const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
      if (t.empty() || res.ec != std::errc{} || res.ptr != t.data() + t.size()) {
        throw InvalidArgument("rows", "line " + std::to_string(line_no) + ": '" + t +
                                          "' is not a number");
      }
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

RealMatrix read_matrix(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw InvalidArgument("input", "empty input");
  std::vector<std::vector<double>> rows;
  if (text[first] == '{') {
    const Json j = parse_json(text);
    check_schema(j);
    const Json& r = require(j, "rows");
    if (!r.is_array()) throw InvalidArgument("rows", "expected an array of rows");
    for (const auto& row : r) rows.push_back(numbers(row, "rows"));
  } else {
    rows = read_csv_rows(text);
  }
  return RealMatrix::from_rows(rows);
}

LacunaryPolynomial read_lacunary(const std::string& text) {
  const Json j = parse_json(text);
  check_schema(j);
  const Json& c = require(j, "coeffs");
  if (!c.is_array()) throw InvalidArgument("coeffs", "expected an array of [re, im] pairs");
  std::vector<std::complex<double>> coeffs;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Json& e = c[i];
    if (e.is_number()) {
      coeffs.emplace_back(e.get<double>(), 0.0);
    } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
      coeffs.emplace_back(e[0].get<double>(), e[1].get<double>());
    } else {
      throw InvalidArgument("coeffs", "entry " + std::to_string(i) + " is not [re, im]");
    }
  }
  return LacunaryPolynomial(std::move(coeffs));
}

Json header(const std::string& command, std::uint64_t seed) {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  j["seed"] = seed;
  return j;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

bool wants_csv(const Common& c) { return c.format == "csv"; }

Json to_json(std::span<const double> v) { return Json(std::vector<double>(v.begin(), v.end())); }

void point_csv(std::ostream& out, std::span<const double> values, const char* column) {
  out << "point," << column << '\n';
  for (std::size_t b = 0; b < values.size(); ++b) out << b << ',' << num(values[b]) << '\n';
}

// ---- subcommands ----------------------------------------------------------

int cmd_walsh(const Common& c, const std::string& action, std::istream& in, std::ostream& out) {
  const std::string text = read_input(c, in);
  if (action == "analyze") {
    const WalshSpectrum s = analyze(read_function(text));
    if (wants_csv(c)) {
      out << "subset,coefficient\n";
      for (std::size_t i = 0; i < s.coeffs().size(); ++i) out << i << ',' << num(s.coeffs()[i]) << '\n';
      return kExitOk;
    }
    Json j = header("walsh analyze", c.seed);
    j["ell"] = s.ell();
    j["index"] = "subset bitmask, bit j-1 set iff coordinate j is in I";
    j["method"] = "fast Walsh-Hadamard transform, coefficient I = 2^-ell sum_x f(x) w_I(x)";
    j["tolerance"] = kExactNote;
    j["coefficients"] = to_json(s.coeffs());
    emit(out, j);
    return kExitOk;
  }
  const CubeFunction f = synthesize(read_spectrum(text));
  if (wants_csv(c)) {
    point_csv(out, f.values(), "value");
    return kExitOk;
  }
  Json j = header("walsh synthesize", c.seed);
  j["ell"] = f.ell();
  j["method"] = "fast Walsh-Hadamard transform, f = sum_I c_I w_I";
  j["tolerance"] = kExactNote;
  j["values"] = to_json(f.values());
  emit(out, j);
  return kExitOk;
}

int cmd_maximal(const Common& c, std::istream& in, std::ostream& out) {
  const CubeFunction f = read_function(read_input(c, in));
  const CubeFunction m = maximal_function(f);
  if (wants_csv(c)) {
    point_csv(out, m.values(), "maximal");
    return kExitOk;
  }
  Json j = header("maximal", c.seed);
  j["ell"] = f.ell();
  j["method"] = "dyadic expectation pyramid, M f(x) = max_k |E_k f(x)|";
  j["tolerance"] = kExactNote;
  j["values"] = to_json(m.values());
  j["sup"] = sup_norm(m);
  emit(out, j);
  return kExitOk;
}

int cmd_square(const Common& c, std::istream& in, std::ostream& out) {
  const CubeFunction f = read_function(read_input(c, in));
  const CubeFunction s = square_function(f);
  if (wants_csv(c)) {
    point_csv(out, s.values(), "square");
    return kExitOk;
  }
  Json j = header("square", c.seed);
  j["ell"] = f.ell();
  j["method"] = "dyadic expectation pyramid, S f = (E_0^2 + sum_k (E_k - E_{k-1})^2)^(1/2)";
  j["tolerance"] = kExactNote;
  j["values"] = to_json(s.values());
  j["l2_norm_f"] = lp_norm(f, 2.0);
  j["l2_norm_square"] = lp_norm(s, 2.0);
  emit(out, j);
  return kExitOk;
}

int cmd_czdecomp(const Common& c, double lambda, std::istream& in, std::ostream& out) {
  const CubeFunction f = read_function(read_input(c, in));
  const auto blocks = cz_blocks(f, lambda);
  const ExpectationPyramid pyramid(f);
  if (wants_csv(c)) {
    out << "level,prefix,average,measure\n";
    for (const auto& b : blocks) {
      out << b.level << ',' << b.prefix << ',' << num(pyramid.level(b.level)[b.prefix]) << ','
          << num(b.measure()) << '\n';
    }
    return kExitOk;
  }
  const LevelSet level_set = superlevel_set(f, lambda);
  Json j = header("czdecomp", c.seed);
  j["ell"] = f.ell();
  j["lambda"] = lambda;
  j["method"] = "maximal dyadic blocks with |average| > lambda, coarse to fine";
  j["tolerance"] = kExactNote;
  Json arr = Json::array();
  for (const auto& b : blocks) {
    Json e;
    e["level"] = b.level;
    e["prefix"] = b.prefix;
    e["average"] = pyramid.level(b.level)[b.prefix];
    e["measure"] = b.measure();
    arr.push_back(e);
  }
  j["blocks"] = arr;
  j["superlevel_measure"] = level_set.measure;
  j["superlevel_members"] = level_set.members;
  j["weak_type_lhs"] = lambda * level_set.measure;
  j["l1_norm"] = lp_norm(f, 1.0);
  emit(out, j);
  return kExitOk;
}

struct KhintchineArgs {
  int ell = 0;
  std::optional<double> p;
  std::optional<double> q;
  int restarts = 32;
  bool sweep = false;
};

Json khintchine_row(const KhintchineArgs& a, int ell, std::uint64_t seed) {
  KhintchineOptions opts;
  opts.restarts = a.restarts;
  opts.seed = seed;
  Json row;
  row["ell"] = ell;
  KhintchineResult r;
  if (a.p) {
    const double p = *a.p;
    const bool even = p == std::floor(p) && static_cast<int>(p) % 2 == 0 &&
                      p >= 4.0 && p <= 2.0 * kMaxMomentOrder && ell <= kMaxMomentEll;
    r = even ? best_ratio_even(ell, static_cast<int>(p) / 2, opts) : best_ratio_high(ell, p, opts);
    row["exponent"] = p;
    row["constant"] = r.ratio;
    row["ratio"] = r.ratio;
    row["gaussian_limit"] = gaussian_khintchine_limit(p);
  } else {
    r = best_ratio_low(ell, *a.q, opts);
    row["exponent"] = *a.q;
    row["constant"] = 1.0 / r.ratio;
    row["ratio"] = r.ratio;
    row["holder_bound"] = holder_reverse_constant(*a.q);
  }
  row["argvector"] = r.argvector;
  row["method"] = r.method;
  row["tolerance"] = opts.search.rel_tol;
  row["starts"] = r.starts;
  row["best_start"] = r.best_start;
  return row;
}

int cmd_khintchine(const Common& c, const KhintchineArgs& a, std::ostream& out) {
  if (a.p.has_value() == a.q.has_value()) throw InvalidArgument("p", "give exactly one of --p and --q");
  if (a.restarts < 0) throw InvalidArgument("restarts", "must be nonnegative");
  std::vector<int> ells;
  for (int ell = a.sweep ? 1 : a.ell; ell <= a.ell; ++ell) ells.push_back(ell);
  std::vector<Json> rows;
  for (int ell : ells) rows.push_back(khintchine_row(a, ell, c.seed));

  if (wants_csv(c)) {
    out << "ell,exponent,constant,ratio,tolerance,method\n";
    for (const auto& r : rows) {
      out << r["ell"].get<int>() << ',' << num(r["exponent"].get<double>()) << ','
          << num(r["constant"].get<double>()) << ',' << num(r["ratio"].get<double>()) << ','
          << num(r["tolerance"].get<double>()) << ",\"" << r["method"].get<std::string>() << "\"\n";
    }
    return kExitOk;
  }
  Json j = header("khintchine", c.seed);
  j["kind"] = a.p ? "upper: sup ||f||_p / ||f||_2" : "lower: sup ||f||_2 / ||f||_q (constant), inf ratio";
  j["restarts"] = a.restarts;
  if (a.sweep) {
    j["rows"] = rows;
  } else {
    for (auto& [k, v] : rows.front().items()) j[k] = v;
  }
  emit(out, j);
  return kExitOk;
}

struct GaussianArgs {
  double p = 0.0;
  bool check = false;
  std::vector<double> v;
};

int cmd_gaussian(const Common& c, const GaussianArgs& a, std::ostream& out) {
  const GaussianMoment m = gaussian_moment(a.p);
  std::optional<double> quad;
  if (a.check) quad = gaussian_moment_quadrature(a.p);
  if (wants_csv(c)) {
    out << "p,value,root" << (quad ? ",quadrature,rel_error" : "") << '\n';
    out << num(a.p) << ',' << num(m.value) << ',' << num(m.root);
    if (quad) out << ',' << num(*quad) << ',' << num(std::abs(*quad - m.value) / m.value);
    out << '\n';
    return kExitOk;
  }
  Json j = header("gaussian-moment", c.seed);
  j["p"] = a.p;
  j["value"] = m.value;
  j["root"] = m.root;
  j["method"] = "closed form pi^(-(p+1)/2) Gamma((p+1)/2), Lanczos gamma";
  j["tolerance"] = 1e-14;
  if (quad) {
    Json q;
    q["value"] = *quad;
    q["rel_error"] = std::abs(*quad - m.value) / m.value;
    q["method"] = "adaptive 20-point Gauss-Legendre on [0, 6], doubled";
    q["tolerance"] = 1e-14;
    j["quadrature"] = q;
  }
  if (!a.v.empty()) {
    Json lf;
    double len = 0.0;
    for (double x : a.v) len += x * x;
    lf["v"] = a.v;
    lf["norm"] = std::sqrt(len);
    lf["value"] = linear_functional_moment(a.v, a.p);
    lf["method"] = "|v| times the one-dimensional p-th root";
    if (a.check && a.v.size() <= 3) {
      const double qv = linear_functional_moment_quadrature(a.v, a.p);
      lf["quadrature"] = qv;
      lf["quadrature_method"] = "tensor Gauss-Legendre on [-6, 6]^n";
      lf["rel_error"] = std::abs(qv - lf["value"].get<double>()) / lf["value"].get<double>();
    }
    j["linear_functional"] = lf;
  }
  emit(out, j);
  return kExitOk;
}

struct LacunaryArgs {
  std::optional<int> collision_max;
  std::size_t points = 0;
};

int cmd_lacunary(const Common& c, const LacunaryArgs& a, std::istream& in, std::ostream& out) {
  std::optional<CollisionReport> collisions;
  if (a.collision_max) collisions = collision_check(*a.collision_max);
  std::optional<LacunaryPolynomial> f;
  if (!a.collision_max || !c.input.empty()) f = read_lacunary(read_input(c, in));

  Json j = header("lacunary", c.seed);
  double l2 = 0, l4 = 0, q2 = 0, q4 = 0;
  std::size_t points = 0;
  if (f) {
    points = a.points != 0 ? a.points : default_circle_points(*f, 4);
    l2 = l2_norm(*f);
    l4 = l4_norm_closed(*f);
    q2 = circle_quadrature_norm(*f, 2, points);
    q4 = circle_quadrature_norm(*f, 4, points);
  }
  if (wants_csv(c)) {
    if (f) {
      out << "m,l2,l4_closed,l2_quadrature,l4_quadrature,points\n";
      out << f->m() << ',' << num(l2) << ',' << num(l4) << ',' << num(q2) << ',' << num(q4) << ','
          << points << '\n';
    } else {
      out << "max_j,holds,tuples_checked\n"
          << *a.collision_max << ',' << (collisions->holds ? "true" : "false") << ','
          << collisions->tuples_checked << '\n';
    }
    return kExitOk;
  }
  if (f) {
    j["m"] = f->m();
    j["l2_norm"] = l2;
    j["l4_norm"] = l4;
    j["ratio"] = l2 > 0.0 ? l4 / l2 : 0.0;
    j["ratio_bound"] = std::pow(2.0, 0.25);
    j["method"] = "closed form (2 (sum |c_j|^2)^2 - sum |c_j|^4)^(1/4)";
    j["tolerance"] = kExactNote;
    Json q;
    q["points"] = points;
    q["l2_norm"] = q2;
    q["l4_norm"] = q4;
    q["l4_rel_error"] = l4 > 0.0 ? std::abs(q4 - l4) / l4 : 0.0;
    q["method"] = "trapezoid rule on M-th roots of unity, exact for M above the top frequency";
    q["tolerance"] = 1e-12;
    j["quadrature"] = q;
  }
  if (collisions) {
    Json cj;
    cj["max_j"] = *a.collision_max;
    cj["holds"] = collisions->holds;
    cj["tuples_checked"] = collisions->tuples_checked;
    if (collisions->counterexample) {
      const auto& t = *collisions->counterexample;
      cj["counterexample"] = {t[0], t[1], t[2], t[3]};
    }
    cj["method"] = "exhaustive over (j1, j2, l1, l2) in [0, max_j]^4";
    j["collision_check"] = cj;
  }
  emit(out, j);
  return kExitOk;
}

Json matrix_json(const RealMatrix& m) {
  Json rows = Json::array();
  for (int j = 0; j < m.rows(); ++j) {
    std::vector<double> row;
    for (int l = 0; l < m.cols(); ++l) row.push_back(m(j, l));
    rows.push_back(row);
  }
  return rows;
}

int cmd_opnorm(const Common& c, std::istream& in, std::ostream& out) {
  const RealMatrix a = read_matrix(read_input(c, in));
  const SignNorm s = infty_to_one_norm(a);
  const TraceDuality td = trace_duality(a);
  if (wants_csv(c)) {
    out << "rows,cols,norm,sum_abs,witness_pairing\n"
        << a.rows() << ',' << a.cols() << ',' << num(s.norm) << ',' << num(td.sum_abs) << ','
        << num(td.witness_pairing) << '\n';
    return kExitOk;
  }
  Json j = header("opnorm", c.seed);
  j["rows"] = a.rows();
  j["cols"] = a.cols();
  j["norm"] = s.norm;
  j["method"] = "exhaustive over 2^(n-1) sign vectors w with w_n = +1, v = sign(A w)";
  j["tolerance"] = kExactNote;
  j["w_star"] = s.w_star;
  j["v_star"] = s.v_star;
  Json td_json;
  td_json["sum_abs"] = td.sum_abs;
  td_json["witness"] = matrix_json(td.witness);
  td_json["witness_pairing"] = td.witness_pairing;
  td_json["method"] = "witness T = sign(A)^T, |trace(T A)| <= sum |a_jl| when |t_lj| <= 1";
  j["trace_duality"] = td_json;
  emit(out, j);
  return kExitOk;
}

struct GrothendieckArgs {
  int restarts = 16;
  double tol = 1e-12;
  int dim = 0;
  int max_iterations = 100000;
};

int cmd_grothendieck(const Common& c, const GrothendieckArgs& a, std::istream& in, std::ostream& out) {
  const RealMatrix m = read_matrix(read_input(c, in));
  GrothendieckOptions opts;
  opts.dim = a.dim;
  opts.restarts = a.restarts;
  opts.tol = a.tol;
  opts.seed = c.seed;
  opts.max_iterations = a.max_iterations;
  const GrothendieckResult r = grothendieck_ratio(m, opts);

  std::size_t best = 0, converged = 0;
  long long iterations = 0;
  for (std::size_t i = 0; i < r.runs.size(); ++i) {
    if (r.runs[i].objective > r.runs[best].objective) best = i;
    if (r.runs[i].converged) ++converged;
    iterations += r.runs[i].iterations;
  }
  if (wants_csv(c)) {
    out << "restart,kind,seed,objective,iterations,converged\n";
    for (std::size_t i = 0; i < r.runs.size(); ++i) {
      const auto& run = r.runs[i];
      out << i << ',' << run.kind << ',' << run.seed << ',' << num(run.objective) << ','
          << run.iterations << ',' << (run.converged ? "true" : "false") << '\n';
    }
    return kExitOk;
  }
  Json j = header("grothendieck", c.seed);
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["dim"] = r.best.dim;
  j["ratio"] = r.ratio;
  j["vector_objective"] = r.best.objective;
  j["scalar_norm"] = r.scalar_norm;
  j["scalar_exact"] = r.scalar_exact;
  j["bound"] = kGrothendieckBound;
  j["method"] = "alternating maximization from the embedded sign optimum plus random restarts; "
                "the ratio is a lower bound";
  j["tolerance"] = a.tol;
  Json cfg;
  cfg["v"] = r.best.v;
  cfg["w"] = r.best.w;
  j["best"] = cfg;
  Json runs = Json::array();
  for (const auto& run : r.runs) {
    Json e;
    e["kind"] = run.kind;
    e["seed"] = run.seed;
    e["objective"] = run.objective;
    e["iterations"] = run.iterations;
    e["converged"] = run.converged;
    runs.push_back(e);
  }
  j["restarts"] = runs;
  Json stats;
  stats["runs"] = r.runs.size();
  stats["converged"] = converged;
  stats["best_restart"] = best;
  stats["mean_iterations"] = r.runs.empty() ? 0.0 : static_cast<double>(iterations) / r.runs.size();
  j["statistics"] = stats;
  emit(out, j);
  return kExitOk;
}

Json check_json(const verify::CheckResult& r) {
  Json j;
  j["id"] = r.id;
  j["name"] = r.name;
  j["passed"] = r.passed;
  j["detail"] = r.detail;
  Json metrics;
  for (const auto& m : r.metrics) metrics[m.name] = m.value;
  j["metrics"] = metrics;
  return j;
}

int cmd_verify_all(const Common& c, std::ostream& out) {
  const verify::Report report = verify::verify_all(c.seed);
  std::vector<const verify::CheckResult*> all;
  for (const auto& r : report.criteria) all.push_back(&r);
  for (const auto& r : report.invariants) all.push_back(&r);

  if (c.format == "json") {
    Json j = header("verify-all", c.seed);
    j["passed"] = report.all_passed();
    Json criteria = Json::array(), invariants = Json::array(), empirical = Json::array();
    for (const auto& r : report.criteria) criteria.push_back(check_json(r));
    for (const auto& r : report.invariants) invariants.push_back(check_json(r));
    for (const auto& e : report.empirical) {
      Json row;
      row["ell"] = e.ell;
      row["samples"] = e.samples;
      row["maximal_p1.5"] = e.maximal_p1_5;
      row["maximal_p2"] = e.maximal_p2;
      row["maximal_p3"] = e.maximal_p3;
      row["maximal_p4"] = e.maximal_p4;
      row["square_l4"] = e.square_l4;
      empirical.push_back(row);
    }
    j["criteria"] = criteria;
    j["invariants"] = invariants;
    j["empirical"] = empirical;
    emit(out, j);
  } else if (c.format == "csv") {
    out << "id,name,status,detail\n";
    for (const auto* r : all) {
      out << r->id << ",\"" << r->name << "\"," << (r->passed ? "PASS" : "FAIL") << ",\""
          << r->detail << "\"\n";
    }
  } else {
    out << "seed " << c.seed << '\n';
    std::size_t width = 4;
    for (const auto* r : all) width = std::max(width, r->name.size());
    out << std::left << std::setw(5) << "id" << std::setw(6) << "status" << ' '
        << std::setw(static_cast<int>(width)) << "name" << "  detail\n";
    for (const auto* r : all) {
      out << std::setw(5) << r->id << std::setw(6) << (r->passed ? "PASS" : "FAIL") << ' '
          << std::setw(static_cast<int>(width)) << r->name << "  " << r->detail << '\n';
    }
    out << "\nempirical sup ratios (" << (report.empirical.empty() ? 0 : report.empirical[0].samples)
        << " samples per ell)\n";
    out << "ell  M p=1.5    M p=2      M p=3      M p=4      S p=4\n";
    out << std::right << std::fixed << std::setprecision(6);
    for (const auto& e : report.empirical) {
      out << std::setw(3) << e.ell;
      for (double v : {e.maximal_p1_5, e.maximal_p2, e.maximal_p3, e.maximal_p4, e.square_l4}) {
        out << std::setw(11) << v;
      }
      out << '\n';
    }
    out << std::defaultfloat << std::left;
    out << (report.all_passed() ? "all checks passed" : "some checks FAILED") << '\n';
  }
  return report.all_passed() ? kExitOk : kExitFailure;
}

void add_common(CLI::App* sub, Common& c, const std::string& default_format) {
  sub->add_option("--seed", c.seed, "random seed (recorded in the output)");
  sub->add_option("--format", c.format, "output format (default " + default_format + ")")
      ->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--input", c.input, "input file (default: stdin)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical laboratory for analysis on the Boolean cube", "cubelab"};
  app.require_subcommand(1);

  Common common;
  std::string walsh_action;
  double lambda = 0.0;
  KhintchineArgs kh;
  GaussianArgs ga;
  LacunaryArgs la;
  int collision_max = 0;
  GrothendieckArgs gr;
  double p_value = 0.0, q_value = 0.0;

  auto* walsh = app.add_subcommand("walsh", "Walsh spectrum of a function, or the inverse");
  walsh->add_option("action", walsh_action, "analyze | synthesize")
      ->required()
      ->check(CLI::IsMember({"analyze", "synthesize"}));
  add_common(walsh, common, "json");

  auto* maximal = app.add_subcommand("maximal", "dyadic maximal function");
  add_common(maximal, common, "json");
  auto* square = app.add_subcommand("square", "martingale square function");
  add_common(square, common, "json");
  auto* cz = app.add_subcommand("czdecomp", "Calderon-Zygmund blocks at level lambda");
  cz->add_option("--lambda", lambda, "threshold > 0")->required();
  add_common(cz, common, "json");

  auto* khin = app.add_subcommand("khintchine", "extremal Khintchine ratios on B_ell");
  khin->add_option("--ell", kh.ell, "number of coordinates")->required();
  auto* p_opt = khin->add_option("--p", p_value, "upper exponent p > 2");
  auto* q_opt = khin->add_option("--q", q_value, "lower exponent 0 < q < 2");
  p_opt->excludes(q_opt);
  khin->add_option("--restarts", kh.restarts, "random restarts (default 32)");
  khin->add_flag("--sweep", kh.sweep, "evaluate every ell from 1 to --ell");
  add_common(khin, common, "json");

  auto* gauss = app.add_subcommand("gaussian-moment", "absolute moments of exp(-pi x^2)");
  gauss->add_option("--p", ga.p, "moment order p >= 0")->required();
  gauss->add_flag("--check-quadrature", ga.check, "compare with numerical integration");
  gauss->add_option("--v", ga.v, "linear functional <x, v> (comma separated)")->delimiter(',');
  add_common(gauss, common, "json");

  auto* lac = app.add_subcommand("lacunary", "L2 and L4 norms of lacunary polynomials");
  auto* cm_opt = lac->add_option("--collision-max", collision_max, "check 2^j1 + 2^j2 collisions up to j");
  lac->add_option("--points", la.points, "quadrature points M (default: smallest safe power of 2)");
  add_common(lac, common, "json");

  auto* opnorm = app.add_subcommand("opnorm", "l_inf -> l_1 norm and trace duality");
  add_common(opnorm, common, "json");

  auto* groth = app.add_subcommand("grothendieck", "vector-to-scalar bilinear ratio");
  groth->add_option("--restarts", gr.restarts, "random restarts (default 16)");
  groth->add_option("--tol", gr.tol, "relative stopping tolerance (default 1e-12)");
  groth->add_option("--dim", gr.dim, "vector dimension (default rows + cols)");
  groth->add_option("--max-iterations", gr.max_iterations, "sweeps per restart");
  add_common(groth, common, "json");

  auto* verify_all = app.add_subcommand("verify-all", "run every acceptance and invariant check");
  add_common(verify_all, common, "table");

  if (!args.empty() && !args.front().empty() && args.front().front() != '-') {
    const auto subs = app.get_subcommands([](CLI::App*) { return true; });
    const bool known = std::any_of(subs.begin(), subs.end(),
                                   [&](CLI::App* s) { return s->get_name() == args.front(); });
    if (!known) {
      err << "error: invalid subcommand: unknown '" << args.front() << "'\n";
      return kExitUsage;
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (p_opt->count() > 0) kh.p = p_value;
  if (q_opt->count() > 0) kh.q = q_value;
  if (cm_opt->count() > 0) la.collision_max = collision_max;

  try {
    if (walsh->parsed()) return cmd_walsh(common, walsh_action, in, out);
    if (maximal->parsed()) return cmd_maximal(common, in, out);
    if (square->parsed()) return cmd_square(common, in, out);
    if (cz->parsed()) return cmd_czdecomp(common, lambda, in, out);
    if (khin->parsed()) return cmd_khintchine(common, kh, out);
    if (gauss->parsed()) return cmd_gaussian(common, ga, out);
    if (lac->parsed()) return cmd_lacunary(common, la, in, out);
    if (opnorm->parsed()) return cmd_opnorm(common, in, out);
    if (groth->parsed()) return cmd_grothendieck(common, gr, in, out);
    if (verify_all->parsed()) return cmd_verify_all(common, out);
  } catch (const InvalidArgument& e) {
    err << "error: invalid " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace cubelab::cli
