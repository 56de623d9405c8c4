#ifndef BDC_RANDOM_SETS_HPP
#define BDC_RANDOM_SETS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "bdc/capacity.hpp"
#include "bdc/interval_set.hpp"
#include "bdc/sampled_function.hpp"

namespace bdc {

/// Random canonical interval union with up to max_intervals pieces.
IntervalSet random_interval_set(std::mt19937_64& rng, int max_intervals = 3);

/// Grid function with independent node values uniform in [lo, hi].
SampledFunction1D random_grid_function(std::mt19937_64& rng, int cells,
                                       double lo, double hi);

struct StructureCounterexample {
  std::string property;  // "monotone" | "submodular"
  IntervalSet a, b;
  double lhs = 0.0, rhs = 0.0;
};

struct StructureReport {
  bool monotone_ok = true;
  bool submodular_ok = true;
  int trials = 0;
  std::optional<StructureCounterexample> counterexample;
};

/// Randomized evidence for the declared structural flags: monotonicity on
/// nested pairs and submodularity on arbitrary pairs, tolerance 1e-12.
/// Statistical only; a pass proves nothing, a failure is a counterexample.
StructureReport check_structure(const Capacity& c, int trials,
                                std::uint64_t seed);

/// Deterministic dominance probe mu(A) <= delta(A) over a fixed set list
/// (including very short intervals) plus seeded random unions.  Returns a
/// description of the first violating set, if any.
std::optional<std::string> dominance_violation(const Capacity& mu,
                                               const Capacity& delta,
                                               std::uint64_t seed = 2024);

}  // namespace bdc

#endif
