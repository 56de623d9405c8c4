#ifndef BDC_EXPERIMENTS_HPP
#define BDC_EXPERIMENTS_HPP

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "bdc/capacity.hpp"
#include "bdc/simplex_grid.hpp"

namespace bdc {

struct NamedFunction {
  std::string name;
  std::function<double(double)> fn;
};

struct NamedSimplexFunction {
  std::string name;
  std::function<double(SimplexPoint)> fn;
};

/// Built-in integrand catalog: e0, e1, t^2, exp, abs-shift, poly:<coeffs>.
NamedFunction resolve_function(const std::string& token);
NamedSimplexFunction resolve_simplex_function(const std::string& token);

/// Capacity descriptors: either a shorthand token (sqrt-lebesgue,
/// sin-lebesgue, lebesgue, identity-lebesgue, power-lebesgue:<p>,
/// possibility:<n>,<k>, dirac:<x>, scaled:<factor>:<base>) or a dotted
/// record (<prefix>.kind=..., <prefix>.gamma=..., ...).
class ExperimentConfig;
Capacity resolve_capacity(const ExperimentConfig& cfg,
                          const std::string& prefix);

/// Flat key=value configuration with dotted keys.  Keys are tracked on
/// access so unresolvable or unused keys are reported by name.
class ExperimentConfig {
 public:
  static ExperimentConfig parse(const std::string& text);
  static ExperimentConfig from_file(const std::string& path);

  void set(const std::string& key, const std::string& value);
  bool has(const std::string& key) const;
  std::string get(const std::string& key) const;
  std::string get_or(const std::string& key, const std::string& fallback) const;
  int get_int(const std::string& key, int fallback) const;
  double get_double(const std::string& key) const;
  double get_double_or(const std::string& key, double fallback) const;
  std::vector<int> get_int_list(const std::string& key) const;
  std::vector<double> get_double_list(const std::string& key) const;

  const std::map<std::string, std::string>& entries() const { return kvs_; }
  std::vector<std::string> unused_keys() const;
  std::string canonical_text() const;
  std::string hash() const;  // FNV-1a over the canonical text

 private:
  std::map<std::string, std::string> kvs_;
  mutable std::set<std::string> touched_;
};

struct CsvReport {
  std::vector<std::string> metadata;  // "# key=value" lines
  std::string header;
  std::vector<std::string> rows;
  std::string to_string() const;
};

struct RunResult {
  CsvReport csv;
  int exit_code = 0;  // 0 all pass, 1 a check failed (config errors throw)
};

/// Executes one experiment.  Deterministic: identical (config, seed) produce
/// byte-identical CSV, regardless of the job count.
RunResult run_experiment(const ExperimentConfig& cfg, int jobs = 1);

std::string list_catalog();

/// 17-significant-digit, locale-independent float rendering for CSV cells.
std::string csv_double(double v);

}  // namespace bdc

#endif
