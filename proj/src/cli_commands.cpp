#include "dihedral/cli_commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dihedral/dihedral_series.hpp"
#include "dihedral/identities.hpp"
#include "dihedral/laplace.hpp"
#include "dihedral/random.hpp"
#include "dihedral/simplex_integral.hpp"

namespace dihedral {

namespace {

using nlohmann::json;

constexpr double kPi = std::numbers::pi;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw UsageError("cannot parse '" + text + "' as a number for " + what);
  }
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

PolarPoint parse_point(const std::string& text, bool cartesian, const std::string& what) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) {
    throw UsageError(what + " expects two comma-separated numbers, got '" + text + "'");
  }
  const double a = parse_double(parts[0], what);
  const double b = parse_double(parts[1], what);
  if (cartesian) return PolarPoint::from_cartesian(a, b);
  if (a < 0.0) throw UsageError(what + ": radius must be nonnegative");
  return {a, b};
}

template <class T>
std::vector<T> parse_list(const std::string& text, const std::string& what) {
  std::vector<T> out;
  for (const auto& part : split(text, ',')) {
    const double v = parse_double(part, what);
    if constexpr (std::is_integral_v<T>) {
      if (v != std::floor(v)) throw UsageError(what + " expects integers");
    }
    out.push_back(static_cast<T>(v));
  }
  if (out.empty()) throw UsageError(what + " must not be empty");
  return out;
}

enum class Method { gegenbauer, horn, simplex, boundary, laplace };

const std::vector<std::pair<std::string, Method>>& method_table() {
  static const std::vector<std::pair<std::string, Method>> table{
      {"gegenbauer", Method::gegenbauer},
      {"horn", Method::horn},
      {"simplex", Method::simplex},
      {"boundary", Method::boundary},
      {"laplace", Method::laplace}};
  return table;
}

Method parse_method(const std::string& name) {
  for (const auto& [key, m] : method_table()) {
    if (key == name) return m;
  }
  throw UsageError("unknown method '" + name +
                   "' (expected gegenbauer, horn, simplex, boundary or laplace)");
}

std::string method_name(Method m) {
  for (const auto& [key, v] : method_table()) {
    if (v == m) return key;
  }
  return "?";
}

bool is_quadrature(Method m) { return m == Method::simplex || m == Method::boundary || m == Method::laplace; }
bool needs_even_group(Method m) { return m == Method::boundary || m == Method::laplace; }

struct SchemeFlags {
  std::string scheme;  // empty: method default
  std::size_t samples = 100000;
  std::size_t order = 24;
  std::uint64_t seed = kDefaultSeed;
  double tol = 1e-9;
};

QuadratureScheme make_scheme(const SchemeFlags& f, Method m) {
  std::string kind = f.scheme;
  if (kind.empty()) kind = m == Method::simplex ? "mc" : "product";
  QuadratureScheme s;
  s.kind = quadrature_kind_from_string(kind);
  s.order_or_samples = s.kind == QuadratureKind::dirichlet_monte_carlo ? f.samples : f.order;
  s.seed = f.seed;
  s.tolerance = f.tol;
  s.validate();
  return s;
}

void add_scheme_flags(CLI::App* cmd, SchemeFlags& f) {
  cmd->add_option("--scheme", f.scheme, "quadrature scheme: product, mc or tanh-sinh");
  cmd->add_option("--samples", f.samples, "Monte Carlo sample count")->check(CLI::PositiveNumber);
  cmd->add_option("--order", f.order, "product rule points per simplex coordinate")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", f.seed, "RNG seed for Monte Carlo")->capture_default_str();
  cmd->add_option("--tol", f.tol, "tanh-sinh relative tolerance");
}

// Resolves the group from --n / --p.
int group_n(std::optional<int> n, std::optional<int> p) {
  if (n && p) {
    if (*n != 2 * *p) throw UsageError("--n and --p disagree (n must equal 2p)");
    return *n;
  }
  if (p) return 2 * *p;
  if (n) return *n;
  throw UsageError("one of --n or --p is required");
}

EvalResult evaluate(Method m, int n, double k, PolarPoint x, PolarPoint y,
                    const QuadratureScheme& scheme) {
  switch (m) {
    case Method::gegenbauer:
      return eval_gegenbauer_series(DihedralParams(n, k), x, y);
    case Method::horn:
      return eval_horn_series(DihedralParams(n, k), x, y);
    case Method::simplex:
      if (n < 3) throw UsageError("method=simplex requires n >= 3");
      return eval_simplex_integral(DihedralParams(n, k), x, y, scheme);
    case Method::boundary:
    case Method::laplace: {
      const std::string name = method_name(m);
      if (n % 2 != 0) throw UsageError("method=" + name + " requires an even group (n = 2p)");
      if (wedge_reduce(x, n).angle != 0.0) {
        throw UsageError("method=" + name + " requires phi=0");
      }
      const EvenDihedralParams even(n / 2, k);
      if (m == Method::boundary) return eval_boundary_bessel(even, x.radius, y, scheme);
      if (even.p() < 2) throw UsageError("method=laplace requires p >= 2");
      if (!(even.nu() > 0.0)) throw UsageError("method=laplace requires pk > 1/2");
      return eval_laplace(even, x.radius, y, scheme);
    }
  }
  throw UsageError("unhandled method");
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << content;
  f.flush();
  if (!f) throw IoError("write to '" + path + "' failed");
}

// ---- eval --------------------------------------------------------------

struct EvalFlags {
  std::optional<int> n;
  std::optional<int> p;
  double k = 1.0;
  std::string x = "0,0";
  std::string y = "0,0";
  std::string method = "gegenbauer";
  bool cartesian = false;
  bool json = false;
  SchemeFlags scheme;
};

int cmd_eval(const EvalFlags& f, const std::vector<std::string>& echo, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const int n = group_n(f.n, f.p);
  const Method m = parse_method(f.method);
  const PolarPoint x = parse_point(f.x, f.cartesian, "--x");
  const PolarPoint y = parse_point(f.y, f.cartesian, "--y");
  const QuadratureScheme scheme = make_scheme(f.scheme, m);
  const EvalResult r = evaluate(m, n, f.k, x, y, scheme);
  const double wall = seconds_since(start);

  if (f.json) {
    json j;
    j["schema"] = 1;
    j["command"] = echo;
    j["params"] = {{"n", n}, {"k", f.k}, {"x", {x.radius, x.angle}}, {"y", {y.radius, y.angle}}};
    j["method"] = method_name(m);
    if (is_quadrature(m)) j["scheme"] = std::string(to_string(scheme.kind));
    j["value"] = r.value;
    j["error"] = r.error;
    j["terms_used"] = r.terms_used;
    j["samples_used"] = r.samples_used;
    j["passed"] = true;
    j["wall_time_s"] = wall;
    out << j.dump(2) << '\n';
  } else {
    out << "method  " << method_name(m);
    if (is_quadrature(m)) out << " (" << to_string(scheme.kind) << ")";
    out << "\nvalue   " << format_double(r.value) << "\nerror   " << format_double(r.error)
        << "\n";
  }
  return kExitOk;
}

// ---- crosscheck ----------------------------------------------------------

struct CrosscheckFlags {
  std::string methods = "gegenbauer,horn,simplex";
  std::string n_list = "3,4,5";
  std::string k_list = "0.5,1,2";
  int points = 5;
  double max_product = 4.0;
  std::string out_path;
  bool json = false;
  SchemeFlags scheme;
};

struct PairTolerance {
  double value;
  std::string rule;
};

// Series vs series 1e-9 relative; deterministic quadrature 1e-7; any Monte
// Carlo member max(1e-2 relative, 3 combined standard errors).
PairTolerance pair_tolerance(Method a, const QuadratureScheme& sa, const EvalResult& ra,
                             Method b, const QuadratureScheme& sb, const EvalResult& rb) {
  const bool mc_a = is_quadrature(a) && sa.kind == QuadratureKind::dirichlet_monte_carlo;
  const bool mc_b = is_quadrature(b) && sb.kind == QuadratureKind::dirichlet_monte_carlo;
  if (mc_a || mc_b) {
    const double sigma = std::hypot(mc_a ? ra.error : 0.0, mc_b ? rb.error : 0.0);
    return {std::max(1e-2, 3.0 * sigma / std::abs(rb.value)), "max(1e-2, 3 sigma)"};
  }
  if (is_quadrature(a) || is_quadrature(b)) return {1e-7, "1e-7"};
  return {1e-9, "1e-9"};
}

int cmd_crosscheck(const CrosscheckFlags& f, const std::vector<std::string>& echo,
                   std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Method> methods;
  for (const auto& name : split(f.methods, ',')) methods.push_back(parse_method(name));
  std::sort(methods.begin(), methods.end());
  methods.erase(std::unique(methods.begin(), methods.end()), methods.end());
  if (methods.size() < 2) throw UsageError("crosscheck needs at least two distinct methods");
  if (f.points < 1) throw UsageError("--points must be >= 1");
  if (!(f.max_product > 0.0)) throw UsageError("--max-product must be positive");
  const auto ns = parse_list<int>(f.n_list, "--n-list");
  const auto ks = parse_list<double>(f.k_list, "--k-list");
  const bool boundary_only =
      std::any_of(methods.begin(), methods.end(), needs_even_group);

  std::vector<QuadratureScheme> schemes;
  for (Method m : methods) schemes.push_back(make_scheme(f.scheme, m));

  std::ostringstream csv;
  csv << "n,k,point,rho,phi,r,theta,method_a,method_b,value_a,value_b,error_a,error_b,"
         "deviation,tolerance,passed\n";
  std::size_t pairs = 0, failures = 0, skipped = 0;
  double worst = 0.0;
  json rows = json::array();

  for (std::size_t ni = 0; ni < ns.size(); ++ni) {
    const int n = ns[ni];
    if (n < 2) throw UsageError("--n-list entries must be >= 2");
    for (std::size_t ki = 0; ki < ks.size(); ++ki) {
      const double k = ks[ki];
      if (!(k > 0.0)) throw UsageError("--k-list entries must be positive");
      for (int pt = 0; pt < f.points; ++pt) {
        // One RNG stream per (n, k, point) so the grid is independent of
        // list order and of the other methods requested.
        const std::uint64_t stream = (std::uint64_t{1} << 41) + (static_cast<std::uint64_t>(n) << 24) +
                                     (static_cast<std::uint64_t>(ki) << 12) + pt;
        CounterRng rng(f.scheme.seed, stream);
        const double side = std::sqrt(f.max_product);
        const PolarPoint x{side * rng.uniform(), boundary_only ? 0.0 : rng.uniform() * kPi / n};
        const PolarPoint y{side * rng.uniform(), rng.uniform() * kPi / n};

        std::vector<std::optional<EvalResult>> results(methods.size());
        std::vector<std::string> problems(methods.size());
        for (std::size_t mi = 0; mi < methods.size(); ++mi) {
          const Method m = methods[mi];
          if ((needs_even_group(m) && n % 2 != 0) || (m == Method::simplex && n < 3) ||
              (m == Method::laplace && (n < 4 || !(0.5 * n * k > 0.5)))) {
            continue;  // outside the method's domain
          }
          try {
            results[mi] = evaluate(m, n, k, x, y, schemes[mi]);
          } catch (const std::exception& e) {
            problems[mi] = e.what();
          }
        }
        for (std::size_t a = 0; a < methods.size(); ++a) {
          for (std::size_t b = a + 1; b < methods.size(); ++b) {
            const bool attempted_a = results[a] || !problems[a].empty();
            const bool attempted_b = results[b] || !problems[b].empty();
            if (!attempted_a || !attempted_b) {
              ++skipped;
              continue;
            }
            ++pairs;
            double dev = INFINITY;
            PairTolerance tol{0.0, "error"};
            if (results[a] && results[b]) {
              dev = std::abs(results[a]->value - results[b]->value) /
                    std::max(std::abs(results[b]->value), 1e-300);
              tol = pair_tolerance(methods[a], schemes[a], *results[a], methods[b], schemes[b],
                                   *results[b]);
            }
            const bool ok = dev <= tol.value;
            if (!ok) ++failures;
            if (std::isfinite(dev)) worst = std::max(worst, dev);
            auto val = [](const std::optional<EvalResult>& r, bool err) {
              return r ? format_double(err ? r->error : r->value) : std::string("nan");
            };
            csv << n << ',' << format_double(k) << ',' << pt << ',' << format_double(x.radius)
                << ',' << format_double(x.angle) << ',' << format_double(y.radius) << ','
                << format_double(y.angle) << ',' << method_name(methods[a]) << ','
                << method_name(methods[b]) << ',' << val(results[a], false) << ','
                << val(results[b], false) << ',' << val(results[a], true) << ','
                << val(results[b], true) << ',' << format_double(dev) << ','
                << format_double(tol.value) << ',' << (ok ? 1 : 0) << '\n';
            json row{{"n", n}, {"k", k}, {"point", pt},
                     {"methods", {method_name(methods[a]), method_name(methods[b])}},
                     {"deviation", std::isfinite(dev) ? json(dev) : json(nullptr)},
                     {"tolerance", tol.value}, {"tolerance_rule", tol.rule}, {"passed", ok}};
            if (!problems[a].empty()) row["error_a"] = problems[a];
            if (!problems[b].empty()) row["error_b"] = problems[b];
            rows.push_back(row);
          }
        }
      }
    }
  }

  if (!f.out_path.empty()) write_file(f.out_path, csv.str());
  const bool passed = failures == 0 && pairs > 0;
  if (f.json) {
    json j;
    j["schema"] = 1;
    j["command"] = echo;
    j["params"] = {{"n_list", ns}, {"k_list", ks}, {"points", f.points},
                   {"max_product", f.max_product}, {"seed", f.scheme.seed}};
    std::vector<std::string> names;
    for (Method m : methods) names.push_back(method_name(m));
    j["methods"] = names;
    j["pairs"] = pairs;
    j["failures"] = failures;
    j["skipped"] = skipped;
    j["max_deviation"] = worst;
    j["rows"] = rows;
    j["passed"] = passed;
    j["wall_time_s"] = seconds_since(start);
    out << j.dump(2) << '\n';
  } else {
    out << "pairs " << pairs << ", failures " << failures << ", skipped " << skipped
        << ", max deviation " << format_double(worst) << '\n';
    out << (passed ? "PASS" : "FAIL") << '\n';
  }
  if (pairs == 0) throw UsageError("no method pair applies to the requested grid");
  return passed ? kExitOk : kExitTolerance;
}

// ---- identity --------------------------------------------------------------

struct IdentityFlags {
  std::string which = "all";
  std::uint64_t seed = kDefaultSeed;
  bool json = false;
};

int cmd_identity(const IdentityFlags& f, const std::vector<std::string>& echo,
                 std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::string> names;
  if (f.which == "all") {
    names = identity_names();
  } else {
    const auto& known = identity_names();
    if (std::find(known.begin(), known.end(), f.which) == known.end()) {
      throw UsageError("unknown identity suite '" + f.which + "'");
    }
    names = {f.which};
  }
  bool all_passed = true;
  json suites = json::array();
  for (const auto& name : names) {
    const IdentitySuite suite = run_identity(name, f.seed);
    all_passed = all_passed && suite.passed();
    json checks = json::array();
    for (const auto& c : suite.checks) {
      checks.push_back({{"label", c.label}, {"max_deviation", c.max_deviation},
                        {"tolerance", c.tolerance}, {"cases", c.cases}, {"passed", c.passed}});
      if (!f.json) {
        out << (c.passed ? "PASS  " : "FAIL  ") << name << "  " << c.label << "  max dev "
            << format_double(c.max_deviation) << " (tol " << c.tolerance << ", " << c.cases
            << " cases)\n";
      }
    }
    suites.push_back({{"name", name}, {"passed", suite.passed()}, {"checks", checks}});
  }
  if (f.json) {
    json j;
    j["schema"] = 1;
    j["command"] = echo;
    j["params"] = {{"which", f.which}, {"seed", f.seed}};
    j["suites"] = suites;
    j["passed"] = all_passed;
    j["wall_time_s"] = seconds_since(start);
    out << j.dump(2) << '\n';
  }
  return all_passed ? kExitOk : kExitTolerance;
}

// ---- density ---------------------------------------------------------------

struct DensityFlags {
  int p = 2;
  double k = 1.0;
  double rho = 1.0;
  long grid = 41;
  std::optional<double> extent;
  double floor = 1e-12;
  std::string out_path;
  std::string format;
  bool json = false;
  SchemeFlags scheme;
};

int cmd_density(const DensityFlags& f, const std::vector<std::string>& echo,
                std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  if (f.grid < 2) throw UsageError("--grid must be at least 2");
  if (!(f.rho > 0.0)) throw UsageError("--rho must be positive");
  const EvenDihedralParams params(f.p, f.k);
  if (params.p() < 2) throw UsageError("density requires p >= 2");
  if (!(params.nu() > 0.0)) throw UsageError("density requires pk > 1/2");
  SchemeFlags sf = f.scheme;
  if (sf.scheme.empty()) sf.scheme = "tanh-sinh";
  if (sf.tol == 1e-9) sf.tol = 1e-8;
  const QuadratureScheme scheme = make_scheme(sf, Method::boundary);
  DensityGridSpec spec;
  spec.resolution = static_cast<std::size_t>(f.grid);
  spec.extent = f.extent.value_or(1.2 * f.rho);
  spec.floor = f.floor;
  const DensityGrid grid = support_probe(params, f.rho, spec, scheme);

  if (!f.out_path.empty()) {
    std::string format = f.format;
    if (format.empty()) {
      format = f.out_path.size() >= 5 && f.out_path.ends_with(".json") ? "json" : "csv";
    }
    std::ostringstream body;
    if (format == "json") {
      write_density_json(body, grid);
    } else if (format == "csv") {
      write_density_csv(body, grid);
    } else {
      throw UsageError("--format must be csv or json");
    }
    write_file(f.out_path, body.str());
  }

  const SupportReport& r = grid.report;
  if (f.json) {
    json j;
    j["schema"] = 1;
    j["command"] = echo;
    j["params"] = {{"p", f.p}, {"k", f.k}, {"rho", f.rho}, {"grid", f.grid},
                   {"extent", spec.extent}, {"floor", spec.floor},
                   {"scheme", std::string(to_string(scheme.kind))}};
    j["support_nodes"] = r.support_nodes;
    j["max_support_radius"] = r.max_support_radius;
    j["outside_rho"] = r.outside_rho;
    j["outside_hull"] = r.outside_hull;
    j["within_rho"] = r.within_rho;
    j["within_hull"] = r.within_hull;
    j["passed"] = r.within_rho;
    j["wall_time_s"] = seconds_since(start);
    out << j.dump(2) << '\n';
  } else {
    out << "grid " << f.grid << "x" << f.grid << " on [-" << format_double(spec.extent) << ", "
        << format_double(spec.extent) << "]^2\n";
    out << "support nodes (H > " << spec.floor << "): " << r.support_nodes << '\n';
    out << "max |z| with H > floor: " << format_double(r.max_support_radius) << '\n';
    out << "support within |z| <= rho: " << (r.within_rho ? "yes" : "NO") << " ("
        << r.outside_rho << " nodes outside)\n";
    out << "support within orbit hull (conjecture, reported only): "
        << (r.within_hull ? "yes" : "no") << " (" << r.outside_hull << " nodes outside)\n";
  }
  return r.within_rho ? kExitOk : kExitTolerance;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Bessel functions of dihedral groups: evaluation and checks"};
  app.require_subcommand(1);
  std::vector<std::string> echo(argv, argv + argc);

  EvalFlags ef;
  auto* eval = app.add_subcommand("eval", "evaluate D_k(x, y) by one representation");
  eval->add_option("--n", ef.n, "dihedral order parameter n (group of order 2n)");
  eval->add_option("--p", ef.p, "half-order p for even groups (n = 2p)");
  eval->add_option("--k", ef.k, "multiplicity k > 0")->required();
  eval->add_option("--x", ef.x, "point x as radius,angle")->required();
  eval->add_option("--y", ef.y, "point y as radius,angle")->required();
  eval->add_option("--method", ef.method, "gegenbauer, horn, simplex, boundary or laplace")
      ->capture_default_str();
  eval->add_flag("--cartesian", ef.cartesian, "read --x/--y as x1,x2");
  eval->add_flag("--json", ef.json, "print a JSON report");
  add_scheme_flags(eval, ef.scheme);

  CrosscheckFlags cf;
  auto* cross = app.add_subcommand("crosscheck", "compare representations on a random grid");
  cross->add_option("--methods", cf.methods, "comma-separated methods")->capture_default_str();
  cross->add_option("--n-list", cf.n_list, "comma-separated n values")->capture_default_str();
  cross->add_option("--k-list", cf.k_list, "comma-separated k values")->capture_default_str();
  cross->add_option("--points", cf.points, "random points per (n, k)")->capture_default_str();
  cross->add_option("--max-product", cf.max_product, "bound on rho * r")->capture_default_str();
  cross->add_option("--out", cf.out_path, "CSV file of pairwise deviations");
  cross->add_flag("--json", cf.json, "print a JSON report");
  add_scheme_flags(cross, cf.scheme);

  IdentityFlags idf;
  auto* ident = app.add_subcommand("identity", "run an identity suite");
  ident->add_option("--which", idf.which,
                    "sN, idgeg, poisson, factorization, dirichlet, altsum, duplication, "
                    "2f1closed, diskbessel or all")
      ->capture_default_str();
  ident->add_option("--seed", idf.seed, "RNG seed")->capture_default_str();
  ident->add_flag("--json", idf.json, "print a JSON report");

  DensityFlags df;
  auto* dens = app.add_subcommand("density", "tabulate the Laplace density H_p on a grid");
  dens->add_option("--p", df.p, "half-order p >= 2")->required();
  dens->add_option("--k", df.k, "multiplicity k")->required();
  dens->add_option("--rho", df.rho, "boundary radius rho > 0")->capture_default_str();
  dens->add_option("--grid", df.grid, "nodes per axis")->capture_default_str();
  dens->add_option("--extent", df.extent, "half-width of the grid (default 1.2 rho)");
  dens->add_option("--floor", df.floor, "support threshold")->capture_default_str();
  dens->add_option("--out", df.out_path, "output file (.csv or .json)");
  dens->add_option("--format", df.format, "csv or json (default from the file extension)");
  dens->add_flag("--json", df.json, "print a JSON summary");
  add_scheme_flags(dens, df.scheme);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*eval) return cmd_eval(ef, echo, out);
    if (*cross) return cmd_crosscheck(cf, echo, out);
    if (*ident) return cmd_identity(idf, echo, out);
    if (*dens) return cmd_density(df, echo, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitTolerance;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitTolerance;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitTolerance;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace dihedral
