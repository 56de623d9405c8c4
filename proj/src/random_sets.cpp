#include "bdc/random_sets.hpp"

#include <algorithm>
#include <cmath>

#include "bdc/common.hpp"

namespace bdc {

IntervalSet random_interval_set(std::mt19937_64& rng, int max_intervals) {
  const int count = 1 + static_cast<int>(rng() % max_intervals);
  std::vector<Interval> raw;
  raw.reserve(count);
  for (int i = 0; i < count; ++i) {
    double a = uniform01(rng());
    double b = uniform01(rng());
    if (a > b) std::swap(a, b);
    raw.push_back({a, b});
  }
  return IntervalSet::canonicalize(std::move(raw));
}

SampledFunction1D random_grid_function(std::mt19937_64& rng, int cells,
                                       double lo, double hi) {
  std::vector<double> nodes(cells + 1);
  for (double& v : nodes) v = lo + (hi - lo) * uniform01(rng());
  return SampledFunction1D::from_nodes(std::move(nodes));
}

StructureReport check_structure(const Capacity& c, int trials,
                                std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("check_structure: trials >= 1");
  constexpr double kTol = 1e-12;
  std::mt19937_64 rng(seed);
  StructureReport report;
  report.trials = trials;
  for (int t = 0; t < trials; ++t) {
    const IntervalSet a = random_interval_set(rng);
    const IntervalSet b = random_interval_set(rng);
    if (report.monotone_ok) {
      const IntervalSet inner = set_intersection(a, b);  // inner ⊆ a
      const double lhs = c.measure(inner);
      const double rhs = c.measure(a);
      if (lhs > rhs + kTol) {
        report.monotone_ok = false;
        if (!report.counterexample)
          report.counterexample = {"monotone", inner, a, lhs, rhs};
      }
    }
    if (report.submodular_ok) {
      const double lhs =
          c.measure(set_union(a, b)) + c.measure(set_intersection(a, b));
      const double rhs = c.measure(a) + c.measure(b);
      if (lhs > rhs + kTol) {
        report.submodular_ok = false;
        if (!report.counterexample)
          report.counterexample = {"submodular", a, b, lhs, rhs};
      }
    }
    if (!report.monotone_ok && !report.submodular_ok) break;
  }
  return report;
}

std::optional<std::string> dominance_violation(const Capacity& mu,
                                               const Capacity& delta,
                                               std::uint64_t seed) {
  constexpr double kTol = 1e-12;
  std::vector<IntervalSet> probes;
  probes.push_back(IntervalSet::full());
  for (int j = 1; j <= 12; ++j) {
    const double len = std::pow(10.0, -j);
    probes.push_back(IntervalSet::canonicalize({{0.0, len}}));
    probes.push_back(IntervalSet::canonicalize({{0.5, 0.5 + len / 2.0}}));
  }
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 48; ++t) probes.push_back(random_interval_set(rng));
  for (const IntervalSet& a : probes) {
    const double m = mu.measure(a);
    const double d = delta.measure(a);
    if (m > d + kTol) {
      return "mu(A)=" + std::to_string(m) + " > delta(A)=" +
             std::to_string(d) + " on a set of length " +
             std::to_string(a.total_length());
    }
  }
  return std::nullopt;
}

}  // namespace bdc
