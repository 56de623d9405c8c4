#include "bdc/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include "bdc/bernstein.hpp"
#include "bdc/choquet.hpp"
#include "bdc/common.hpp"
#include "bdc/error_analysis.hpp"
#include "bdc/operators.hpp"
#include "bdc/random_sets.hpp"
#include "bdc/version.hpp"

namespace bdc {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

void parallel_for(int jobs, int count, const std::function<void(int)>& body) {
  jobs = std::max(1, std::min(jobs, count));
  if (jobs == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (int j = 0; j < jobs; ++j) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1))
        body(i);
    });
  }
  for (std::thread& th : pool) th.join();
}

}  // namespace

std::string csv_double(double v) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

// ---------------------------------------------------------------------------
// Config

ExperimentConfig ExperimentConfig::parse(const std::string& text) {
  ExperimentConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw config_error("config line " + std::to_string(lineno) +
                         " is not key=value: " + t);
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (key.empty())
      throw config_error("config line " + std::to_string(lineno) +
                         " has an empty key");
    if (cfg.kvs_.count(key))
      throw config_error("duplicate config key: " + key);
    cfg.kvs_[key] = value;
  }
  return cfg;
}

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

void ExperimentConfig::set(const std::string& key, const std::string& value) {
  kvs_[key] = value;
}

bool ExperimentConfig::has(const std::string& key) const {
  touched_.insert(key);
  return kvs_.count(key) > 0;
}

std::string ExperimentConfig::get(const std::string& key) const {
  touched_.insert(key);
  const auto it = kvs_.find(key);
  if (it == kvs_.end()) throw config_error("missing config key: " + key);
  return it->second;
}

std::string ExperimentConfig::get_or(const std::string& key,
                                     const std::string& fallback) const {
  touched_.insert(key);
  const auto it = kvs_.find(key);
  return it == kvs_.end() ? fallback : it->second;
}

int ExperimentConfig::get_int(const std::string& key, int fallback) const {
  if (!has(key)) return fallback;
  const std::string v = get(key);
  try {
    return std::stoi(v);
  } catch (const std::exception&) {
    throw config_error("key " + key + " is not an integer: " + v);
  }
}

double ExperimentConfig::get_double(const std::string& key) const {
  const std::string v = get(key);
  try {
    return std::stod(v);
  } catch (const std::exception&) {
    throw config_error("key " + key + " is not a number: " + v);
  }
}

double ExperimentConfig::get_double_or(const std::string& key,
                                       double fallback) const {
  if (!has(key)) return fallback;
  return get_double(key);
}

std::vector<int> ExperimentConfig::get_int_list(const std::string& key) const {
  std::string v = get(key);
  v.erase(std::remove_if(v.begin(), v.end(),
                         [](char c) { return c == '[' || c == ']' || c == ' '; }),
          v.end());
  const auto range = v.find("..");
  std::vector<int> out;
  try {
    if (range != std::string::npos) {
      const int lo = std::stoi(v.substr(0, range));
      const int hi = std::stoi(v.substr(range + 2));
      for (int i = lo; i <= hi; ++i) out.push_back(i);
    } else {
      for (const std::string& tok : split(v, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    }
  } catch (const std::exception&) {
    throw config_error("key " + key + " is not an integer list: " + v);
  }
  if (out.empty()) throw config_error("key " + key + " lists no values");
  return out;
}

std::vector<double> ExperimentConfig::get_double_list(
    const std::string& key) const {
  std::string v = get(key);
  v.erase(std::remove_if(v.begin(), v.end(),
                         [](char c) { return c == '[' || c == ']' || c == ' '; }),
          v.end());
  std::vector<double> out;
  try {
    for (const std::string& tok : split(v, ','))
      if (!tok.empty()) out.push_back(std::stod(tok));
  } catch (const std::exception&) {
    throw config_error("key " + key + " is not a number list: " + v);
  }
  if (out.empty()) throw config_error("key " + key + " lists no values");
  return out;
}

std::vector<std::string> ExperimentConfig::unused_keys() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : kvs_)
    if (!touched_.count(k)) out.push_back(k);
  return out;
}

std::string ExperimentConfig::canonical_text() const {
  std::string out;
  for (const auto& [k, v] : kvs_) out += k + "=" + v + "\n";
  return out;
}

std::string ExperimentConfig::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (const char c : canonical_text()) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

std::string CsvReport::to_string() const {
  std::string out;
  for (const std::string& m : metadata) out += m + "\n";
  out += header + "\n";
  for (const std::string& r : rows) out += r + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Catalog

NamedFunction resolve_function(const std::string& token) {
  if (token == "e0") return {"e0", [](double) { return 1.0; }};
  if (token == "e1") return {"e1", [](double t) { return t; }};
  if (token == "t^2") return {"t^2", [](double t) { return t * t; }};
  if (token == "exp")
    return {"exp",
            [](double t) { return (std::exp(t) - 1.0) / (std::exp(1.0) - 1.0); }};
  if (token == "abs-shift")
    return {"abs-shift", [](double t) { return std::abs(t - 0.5); }};
  if (token.rfind("poly:", 0) == 0) {
    std::vector<double> coeffs;
    for (const std::string& c : split(token.substr(5), ','))
      coeffs.push_back(std::stod(c));
    return {token, [coeffs](double t) {
              double acc = 0.0;
              for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
                acc = acc * t + *it;
              return acc;
            }};
  }
  throw config_error("unknown function descriptor: " + token);
}

NamedSimplexFunction resolve_simplex_function(const std::string& token) {
  if (token == "x1+x2")
    return {"x1+x2", [](SimplexPoint p) { return p.x1 + p.x2; }};
  if (token == "x1^2")
    return {"x1^2", [](SimplexPoint p) { return p.x1 * p.x1; }};
  if (token == "x1")
    return {"x1", [](SimplexPoint p) { return p.x1; }};
  if (token == "e0")
    return {"e0", [](SimplexPoint) { return 1.0; }};
  throw config_error("unknown simplex function descriptor: " + token);
}

namespace {

Capacity capacity_from_shorthand(const std::string& token) {
  if (token == "lebesgue") return Capacity::lebesgue();
  if (token == "sqrt-lebesgue")
    return Capacity::distorted_lebesgue(Distortion::sqrt());
  if (token == "sin-lebesgue")
    return Capacity::distorted_lebesgue(Distortion::sine());
  if (token == "identity-lebesgue")
    return Capacity::distorted_lebesgue(Distortion::identity());
  if (token.rfind("power-lebesgue:", 0) == 0)
    return Capacity::distorted_lebesgue(
        Distortion::power(std::stod(token.substr(15))));
  if (token.rfind("possibility:", 0) == 0) {
    const auto parts = split(token.substr(12), ',');
    if (parts.size() != 2)
      throw config_error("possibility shorthand needs n,k: " + token);
    return Capacity::possibility(UnimodalDistribution::bernstein_bump(
        std::stoi(parts[0]), std::stoi(parts[1])));
  }
  if (token.rfind("dirac:", 0) == 0)
    return Capacity::dirac(std::stod(token.substr(6)));
  if (token.rfind("scaled:", 0) == 0) {
    const std::string rest = token.substr(7);
    const auto colon = rest.find(':');
    if (colon == std::string::npos)
      throw config_error("scaled shorthand needs factor:base: " + token);
    return Capacity::scaled(capacity_from_shorthand(rest.substr(colon + 1)),
                            std::stod(rest.substr(0, colon)));
  }
  throw config_error("unknown capacity descriptor: " + token);
}

Distortion distortion_from_token(const ExperimentConfig& cfg,
                                 const std::string& prefix,
                                 const std::string& token) {
  if (token == "sqrt") return Distortion::sqrt();
  if (token == "sin") return Distortion::sine();
  if (token == "identity") return Distortion::identity();
  if (token == "power") return Distortion::power(cfg.get_double(prefix + ".p"));
  throw config_error("unknown distortion for " + prefix + ": " + token);
}

}  // namespace

Capacity resolve_capacity(const ExperimentConfig& cfg,
                          const std::string& prefix) {
  if (cfg.has(prefix)) {
    try {
      return capacity_from_shorthand(cfg.get(prefix));
    } catch (const std::exception& e) {
      throw config_error("key " + prefix + ": " + e.what());
    }
  }
  if (!cfg.has(prefix + ".kind"))
    throw config_error("missing capacity descriptor: " + prefix);
  const std::string kind = cfg.get(prefix + ".kind");
  if (kind == "distorted-lebesgue")
    return Capacity::distorted_lebesgue(
        distortion_from_token(cfg, prefix, cfg.get(prefix + ".gamma")));
  if (kind == "possibility")
    return Capacity::possibility(UnimodalDistribution::bernstein_bump(
        cfg.get_int(prefix + ".bump.n", -1), cfg.get_int(prefix + ".bump.k", -1)));
  if (kind == "dirac") return Capacity::dirac(cfg.get_double(prefix + ".point"));
  if (kind == "lebesgue") return Capacity::lebesgue();
  if (kind == "scaled")
    return Capacity::scaled(resolve_capacity(cfg, prefix + ".base"),
                            cfg.get_double(prefix + ".factor"));
  throw config_error("unknown capacity kind for " + prefix + ": " + kind);
}

std::string list_catalog() {
  std::string out;
  out += "functions: abs-shift, e0, e1, exp, poly:<c0,c1,...>, t^2\n";
  out += "simplex-functions: e0, x1, x1+x2, x1^2\n";
  out +=
      "capacities: dirac:<x>, identity-lebesgue, lebesgue, "
      "possibility:<n>,<k>, power-lebesgue:<p>, scaled:<factor>:<base>, "
      "sin-lebesgue, sqrt-lebesgue\n";
  out +=
      "operators: bernstein, dbar, dn-possibility, dstar, dtilde, durrmeyer, "
      "genuine, genuine-u, mn-gamma\n";
  out +=
      "theorems: remark-4.4, thm-3.1i, thm-3.1ii, thm-3.3, thm-3.4, thm-4.1\n";
  out +=
      "kinds: bound-check, compare, integrate, operator-eval, property-suite, "
      "sweep\n";
  return out;
}

// ---------------------------------------------------------------------------
// Experiment kinds

namespace {

std::vector<double> x_grid_points(int count) {
  std::vector<double> xs(count);
  for (int i = 0; i < count; ++i)
    xs[i] = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
  return xs;
}

IntervalSet parse_set(const std::string& token) {
  std::vector<Interval> raw;
  for (const std::string& part : split(token, ';')) {
    const auto parts = split(part, ':');
    if (parts.size() != 2)
      throw config_error("set descriptor needs lo:hi pairs: " + token);
    raw.push_back({std::stod(parts[0]), std::stod(parts[1])});
  }
  return IntervalSet::canonicalize(std::move(raw));
}

std::string bound_report_row(const BoundReport& r) {
  return r.theorem + "," + r.f_name + "," + r.capacity_desc + "," +
         std::to_string(r.n) + "," + csv_double(r.x) + "," +
         csv_double(r.lhs) + "," + csv_double(r.rhs) + "," +
         csv_double(r.margin) + "," + csv_double(r.tolerance) + "," +
         (r.passed ? "1" : "0");
}

struct OperatorSpec {
  std::string token;
  std::function<double(const NamedFunction&, int, double, int)> value;
};

/// Resolves an operator token plus its capacity sub-records into a
/// value(f, n, x, grid) closure.  Plans are rebuilt per (f, n) by callers
/// that sweep; for CLI-scale grids the rebuild cost is irrelevant.
OperatorSpec resolve_operator(const ExperimentConfig& cfg,
                              const std::string& prefix) {
  const std::string token = cfg.get(prefix);
  OperatorSpec spec;
  spec.token = token;
  if (token == "bernstein") {
    spec.value = [](const NamedFunction& f, int n, double x, int) {
      return classical_bernstein(f.fn, n, x);
    };
    return spec;
  }
  if (token == "genuine") {
    spec.value = [](const NamedFunction& f, int n, double x, int m) {
      return classical_genuine(f.fn, n, x, m);
    };
    return spec;
  }
  if (token == "durrmeyer") {
    Capacity delta = cfg.has(prefix + ".delta") || cfg.has(prefix + ".delta.kind")
                         ? resolve_capacity(cfg, prefix + ".delta")
                         : Capacity::lebesgue();
    spec.value = [delta](const NamedFunction& f, int n, double x, int m) {
      return durrmeyer_borel(f.fn, n, x, delta, m);
    };
    return spec;
  }
  if (token == "dn-possibility") {
    spec.value = [](const NamedFunction& f, int n, double x, int m) {
      return durrmeyer_possibility(
                 SampledFunction1D::from_function(f.fn, m), n, x)
          .value;
    };
    return spec;
  }
  if (token == "dbar" || token == "dtilde" || token == "dstar") {
    Capacity delta = resolve_capacity(cfg, prefix + ".delta");
    Capacity mu = resolve_capacity(cfg, prefix + ".mu");
    spec.value = [token, delta, mu](const NamedFunction& f, int n, double x,
                                    int m) {
      const SampledFunction1D fs = SampledFunction1D::from_function(f.fn, m);
      if (token == "dbar")
        return durrmeyer_tail_choquet(fs, n, x, delta, mu).value;
      if (token == "dtilde")
        return durrmeyer_head_choquet(fs, n, x, delta, mu).value;
      return durrmeyer_ends_choquet(fs, n, x, delta, mu).value;
    };
    return spec;
  }
  if (token == "mn-gamma") {
    const std::string family = cfg.get_or(prefix + ".family", "constant");
    if (family == "constant") {
      Capacity mu = resolve_capacity(cfg, prefix + ".family.capacity");
      spec.value = [mu](const NamedFunction& f, int n, double x, int m) {
        return durrmeyer_single_capacity(
                   SampledFunction1D::from_function(f.fn, m), n, x, mu)
            .value;
      };
      return spec;
    }
    if (family == "possibility") {
      spec.value = [](const NamedFunction& f, int n, double x, int m) {
        return durrmeyer_choquet(SampledFunction1D::from_function(f.fn, m), n,
                                 x, CapacityFamily::possibility(n))
            .value;
      };
      return spec;
    }
    if (family == "dirac-tail") {
      Capacity mu = resolve_capacity(cfg, prefix + ".family.mu");
      spec.value = [mu](const NamedFunction& f, int n, double x, int m) {
        return durrmeyer_choquet(SampledFunction1D::from_function(f.fn, m), n,
                                 x, CapacityFamily::dirac_tail(n, mu))
            .value;
      };
      return spec;
    }
    throw config_error("unknown family for " + prefix + ".family: " + family);
  }
  if (token == "genuine-u") {
    Capacity nu0 = resolve_capacity(cfg, prefix + ".nu0");
    Capacity nun = resolve_capacity(cfg, prefix + ".nun");
    Capacity middle = resolve_capacity(cfg, prefix + ".middle");
    spec.value = [nu0, nun, middle](const NamedFunction& f, int n, double x,
                                    int m) {
      return genuine_durrmeyer_choquet(
                 SampledFunction1D::from_function(f.fn, m), n, x,
                 CapacityFamily::genuine_constant_middle(n, nu0, nun, middle))
          .value;
    };
    return spec;
  }
  throw config_error("unknown operator: " + token);
}

CsvReport make_csv(const ExperimentConfig& cfg, const std::string& kind,
                   std::string header) {
  CsvReport csv;
  csv.metadata.push_back(std::string("# tool=bdc ") + kVersion);
  csv.metadata.push_back("# config_hash=" + cfg.hash());
  csv.metadata.push_back("# kind=" + kind);
  csv.header = std::move(header);
  return csv;
}

RunResult run_integrate(const ExperimentConfig& cfg) {
  const NamedFunction f = resolve_function(cfg.get("f"));
  const Capacity cap = resolve_capacity(cfg, "capacity");
  const std::string method = cfg.get_or("method", "sorted-levels");
  const int m = cfg.get_int("grid.m", 2048);
  const IntervalSet a = parse_set(cfg.get_or("set", "0:1"));
  const SampledFunction1D fs = SampledFunction1D::from_function(f.fn, m);
  double value;
  bool converged = true;
  if (method == "sorted-levels") {
    value = choquet_sorted_levels(fs, a, cap);
  } else if (method == "beta-quadrature") {
    const IntegralResult r = choquet_beta_quadrature(fs, a, cap);
    value = r.value;
    converged = r.converged;
  } else {
    throw config_error("unknown method: " + method);
  }
  RunResult out{make_csv(cfg, "integrate",
                         "f,capacity,method,set,m,value,converged"),
                0};
  out.csv.rows.push_back(f.name + "," + cap.describe() + "," + method + "," +
                         cfg.get_or("set", "0:1") + "," + std::to_string(m) +
                         "," + csv_double(value) + "," +
                         (converged ? "1" : "0"));
  return out;
}

RunResult run_operator_eval(const ExperimentConfig& cfg, int jobs) {
  const NamedFunction f = resolve_function(cfg.get("f"));
  const OperatorSpec op = resolve_operator(cfg, "operator");
  std::vector<int> ns = cfg.get_int_list("n");
  std::sort(ns.begin(), ns.end());
  const int xgrid = cfg.get_int("xgrid", 101);
  const int m = cfg.get_int("grid.m", 2048);
  const std::vector<double> xs = x_grid_points(xgrid);
  RunResult out{make_csv(cfg, "operator-eval", "operator,f,n,x,value"), 0};
  std::vector<std::vector<std::string>> chunks(ns.size());
  parallel_for(jobs, static_cast<int>(ns.size()), [&](int i) {
    for (const double x : xs)
      chunks[i].push_back(op.token + "," + f.name + "," +
                          std::to_string(ns[i]) + "," + csv_double(x) + "," +
                          csv_double(op.value(f, ns[i], x, m)));
  });
  for (auto& chunk : chunks)
    out.csv.rows.insert(out.csv.rows.end(), chunk.begin(), chunk.end());
  return out;
}

RunResult run_sweep(const ExperimentConfig& cfg, int jobs) {
  const NamedFunction f = resolve_function(cfg.get("f"));
  const OperatorSpec op = resolve_operator(cfg, "operator");
  std::vector<int> ns = cfg.get_int_list("n");
  std::sort(ns.begin(), ns.end());
  const int xgrid = cfg.get_int("xgrid", 101);
  const int m = cfg.get_int("grid.m", 2048);
  const std::vector<double> xs = x_grid_points(xgrid);
  RunResult out{make_csv(cfg, "sweep", "operator,f,n,sup_error"), 0};
  std::vector<std::string> rows(ns.size());
  parallel_for(jobs, static_cast<int>(ns.size()), [&](int i) {
    double sup = 0.0;
    for (const double x : xs)
      sup = std::max(sup, std::abs(op.value(f, ns[i], x, m) - f.fn(x)));
    rows[i] = op.token + "," + f.name + "," + std::to_string(ns[i]) + "," +
              csv_double(sup);
  });
  out.csv.rows = std::move(rows);
  return out;
}

RunResult run_compare(const ExperimentConfig& cfg, int jobs) {
  const NamedFunction f = resolve_function(cfg.get("f"));
  const OperatorSpec op = resolve_operator(cfg, "operator");
  const OperatorSpec ref = resolve_operator(cfg, "reference");
  std::vector<int> ns = cfg.get_int_list("n");
  std::sort(ns.begin(), ns.end());
  const int xgrid = cfg.get_int("xgrid", 101);
  const int m = cfg.get_int("grid.m", 2048);
  const std::vector<double> xs = x_grid_points(xgrid);
  RunResult out{
      make_csv(cfg, "compare", "operator,reference,f,n,x,value,ref_value,diff"),
      0};
  std::vector<std::vector<std::string>> chunks(ns.size());
  parallel_for(jobs, static_cast<int>(ns.size()), [&](int i) {
    for (const double x : xs) {
      const double a = op.value(f, ns[i], x, m);
      const double b = ref.value(f, ns[i], x, m);
      chunks[i].push_back(op.token + "," + ref.token + "," + f.name + "," +
                          std::to_string(ns[i]) + "," + csv_double(x) + "," +
                          csv_double(a) + "," + csv_double(b) + "," +
                          csv_double(std::abs(a - b)));
    }
  });
  for (auto& chunk : chunks)
    out.csv.rows.insert(out.csv.rows.end(), chunk.begin(), chunk.end());
  return out;
}

RunResult run_property_suite(const ExperimentConfig& cfg) {
  if (!cfg.has("seed"))
    throw config_error("missing config key: seed (mandatory for randomized "
                       "suites)");
  const std::uint64_t seed =
      static_cast<std::uint64_t>(std::stoll(cfg.get("seed")));
  const Capacity cap = resolve_capacity(cfg, "capacity");
  const int trials = cfg.get_int("trials", 500);
  RunResult out{make_csv(cfg, "property-suite",
                         "capacity,check,trials,passed,detail"),
                0};
  const PropertyReport pr = choquet_property_suite(cap, seed, trials);
  out.csv.rows.push_back(cap.describe() + ",choquet-properties," +
                         std::to_string(pr.checks_run) + "," +
                         (pr.all_ok ? "1" : "0") + "," +
                         (pr.failures.empty() ? "" : pr.failures.front()));
  const StructureReport sr = check_structure(cap, trials, seed);
  const std::string counter =
      sr.counterexample ? sr.counterexample->property : "";
  out.csv.rows.push_back(cap.describe() + ",structure-monotone," +
                         std::to_string(sr.trials) + "," +
                         (sr.monotone_ok ? "1" : "0") + "," + counter);
  out.csv.rows.push_back(cap.describe() + ",structure-submodular," +
                         std::to_string(sr.trials) + "," +
                         (sr.submodular_ok ? "1" : "0") + "," + counter);
  if (!pr.all_ok || !sr.monotone_ok ||
      (!sr.submodular_ok && cap.flags().submodular))
    out.exit_code = 1;
  return out;
}

RunResult run_bound_check(const ExperimentConfig& cfg, int jobs) {
  std::string theorem = cfg.get("theorem");
  if (theorem.rfind("thm-", 0) != 0 && theorem.rfind("remark-", 0) != 0)
    theorem = theorem == "4.4" ? "remark-" + theorem : "thm-" + theorem;
  const int m = cfg.get_int("grid.m", 2048);
  std::vector<int> ns = cfg.get_int_list("n");
  std::sort(ns.begin(), ns.end());
  const int xgrid = cfg.get_int("xgrid", 101);
  RunResult out{
      make_csv(cfg, "bound-check",
               "theorem,f,capacity,n,x,lhs,rhs,margin,tolerance,passed"),
      0};
  std::vector<std::vector<BoundReport>> reports(ns.size());
  // all config keys are resolved before the parallel region

  if (theorem == "thm-4.1") {
    const NamedFunction f = resolve_function(cfg.get("f"));
    const ModulusTable1D omega(f.fn, 4096);
    const std::vector<double> xs = x_grid_points(xgrid);
    const int plan_m = std::max(m, 4096);
    parallel_for(jobs, static_cast<int>(ns.size()), [&](int i) {
      const SampledFunction1D fs =
          SampledFunction1D::from_function(f.fn, plan_m);
      const CoefficientPlan1D plan = durrmeyer_possibility_plan(fs, ns[i]);
      for (const double x : xs)
        reports[i].push_back(possibility_pointwise_bound_check(
            f.fn, f.name, ns[i], x, plan_m, &plan, &omega));
    });
  } else if (theorem == "thm-3.1i" &&
             cfg.get_or("domain", "interval") == "simplex") {
    const NamedSimplexFunction f = resolve_simplex_function(cfg.get("f"));
    const CapacityFamily family =
        CapacityFamily::constant(resolve_capacity(cfg, "family.capacity"));
    const int resolution = cfg.get_int("grid.simplex-n", 32);
    const ModulusTableSimplex omega(f.fn, 4 * resolution);
    parallel_for(jobs, static_cast<int>(ns.size()), [&](int i) {
      const SampledFunctionSimplex fs =
          SampledFunctionSimplex::from_function(f.fn, resolution);
      const CoefficientPlanSimplex plan =
          durrmeyer_choquet_plan(fs, ns[i], family);
      for (int a = 0; a < xgrid; ++a) {
        for (int b = 0; b + a < xgrid; ++b) {
          const SimplexPoint x{static_cast<double>(a) / (xgrid - 1),
                               static_cast<double>(b) / (xgrid - 1)};
          reports[i].push_back(pointwise_modulus_bound_check_simplex(
              f.fn, f.name, ns[i], x, family, resolution, &omega, &plan));
        }
      }
    });
  } else if (theorem == "thm-3.1i" || theorem == "thm-3.1ii") {
    const NamedFunction f = resolve_function(cfg.get("f"));
    const bool possibility_family =
        cfg.get_or("family", "constant") == "possibility";
    std::vector<CapacityFamily> families;
    families.reserve(ns.size());
    for (const int n : ns)
      families.push_back(possibility_family
                             ? CapacityFamily::possibility(n)
                             : CapacityFamily::constant(
                                   resolve_capacity(cfg, "family.capacity")));
    const bool uniform = theorem == "thm-3.1ii";
    const ModulusTable1D omega(f.fn, 4096);
    const std::vector<double> xs = x_grid_points(xgrid);
    parallel_for(jobs, static_cast<int>(ns.size()), [&](int i) {
      if (uniform) {
        reports[i].push_back(uniform_kfunctional_bound_check(
            f.fn, f.name, ns[i], families[i], m, xgrid));
      } else {
        for (const double x : xs)
          reports[i].push_back(pointwise_modulus_bound_check(
              f.fn, f.name, ns[i], x, families[i], m, &omega));
      }
    });
  } else if (theorem == "thm-3.3" || theorem == "thm-3.4") {
    const NamedFunction f = resolve_function(cfg.get("f"));
    const Capacity delta = resolve_capacity(cfg, "delta");
    const Capacity mu = resolve_capacity(cfg, "mu");
    std::vector<double> ps;
    if (cfg.has("p")) {
      ps = cfg.get_double_list("p");
      std::sort(ps.begin(), ps.end());
    } else {
      ps = {theorem == "thm-3.3" ? 1.0 : 2.0};
    }
    parallel_for(jobs, static_cast<int>(ns.size()), [&](int i) {
      for (const double p : ps)
        reports[i].push_back(
            lp_bound_check(f.fn, f.name, ns[i], delta, mu, p, m));
    });
  } else if (theorem == "remark-4.4") {
    const NamedFunction f = resolve_function(cfg.get("f"));
    const Capacity mu = resolve_capacity(cfg, "mu");
    const bool genuine = cfg.get_or("variant", "bernstein") == "genuine";
    parallel_for(jobs, static_cast<int>(ns.size()), [&](int i) {
      const ImprovementReport rep =
          genuine ? improvement_over_genuine_check(f.fn, ns[i], mu, m)
                  : improvement_over_bernstein_check(f.fn, ns[i], mu, m);
      BoundReport r = make_report("remark-4.4", f.name, mu.describe(), ns[i],
                                  "interior", 0.0, 0.0, rep.min_slack, 0.0);
      r.passed = rep.passed;
      reports[i].push_back(r);
    });
  } else {
    throw config_error("unknown theorem: " + cfg.get("theorem"));
  }

  for (const auto& chunk : reports) {
    for (const BoundReport& r : chunk) {
      out.csv.rows.push_back(bound_report_row(r));
      if (!r.passed) out.exit_code = 1;
    }
  }
  return out;
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& cfg, int jobs) {
  const std::string kind = cfg.get("kind");
  cfg.get_or("seed", "");  // recorded in metadata; not all kinds draw from it
  cfg.get_or("out", "");
  RunResult result;
  if (kind == "integrate") {
    result = run_integrate(cfg);
  } else if (kind == "operator-eval") {
    result = run_operator_eval(cfg, jobs);
  } else if (kind == "bound-check") {
    result = run_bound_check(cfg, jobs);
  } else if (kind == "compare") {
    result = run_compare(cfg, jobs);
  } else if (kind == "sweep") {
    result = run_sweep(cfg, jobs);
  } else if (kind == "property-suite") {
    result = run_property_suite(cfg);
  } else {
    throw config_error("unknown experiment kind: " + kind);
  }
  const std::vector<std::string> unused = cfg.unused_keys();
  if (!unused.empty())
    throw config_error("unknown config key: " + unused.front());
  // rows are already emitted in (theorem, n, x) order; chunks are merged by
  // index, so the job count never changes the bytes
  return result;
}

}  // namespace bdc
