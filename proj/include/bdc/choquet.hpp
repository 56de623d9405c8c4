#ifndef BDC_CHOQUET_HPP
#define BDC_CHOQUET_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bdc/capacity.hpp"
#include "bdc/interval_set.hpp"
#include "bdc/sampled_function.hpp"
#include "bdc/simplex_grid.hpp"

namespace bdc {

enum class IntegralMethod { SortedLevels, BetaQuadrature };

struct BetaQuadratureOptions {
  int initial_steps = 16;   // power of two
  double tolerance = 1e-8;  // successive-doubling stop criterion
  int max_steps = 1 << 20;
};

struct IntegralResult {
  double value = 0.0;
  bool converged = true;
  int steps = 0;
};

/// Exact Choquet integral of the piecewise-constant cell interpretation:
/// distinct cell values define the level sets, each measured directly.
double choquet_sorted_levels(const SampledFunction1D& f, const IntervalSet& a,
                             const Capacity& c);
double choquet_sorted_levels(const SampledFunctionSimplex& f,
                             const SimplexCellSet& a, const Capacity& c);

/// Independent oracle: midpoint quadrature of beta -> mu(F_beta(f) ∩ A),
/// doubling the step count until the stated tolerance or the step cap.
/// A result at the cap is returned with converged = false, never silently
/// treated as converged.
IntegralResult choquet_beta_quadrature(const SampledFunction1D& f,
                                       const IntervalSet& a, const Capacity& c,
                                       BetaQuadratureOptions opts = {});
IntegralResult choquet_beta_quadrature(const SampledFunctionSimplex& f,
                                       const SimplexCellSet& a,
                                       const Capacity& c,
                                       BetaQuadratureOptions opts = {});

/// Plain quadrature fast path, valid only for capacities flagged additive.
double ordinary_integral(const SampledFunction1D& f, const IntervalSet& a,
                         const Capacity& c);
double ordinary_integral(const SampledFunctionSimplex& f,
                         const SimplexCellSet& a, const Capacity& c);

double choquet_integral(const SampledFunction1D& f, const IntervalSet& a,
                        const Capacity& c,
                        IntegralMethod method = IntegralMethod::SortedLevels);
double choquet_integral(const SampledFunctionSimplex& f,
                        const SimplexCellSet& a, const Capacity& c,
                        IntegralMethod method = IntegralMethod::SortedLevels);

/// ((C) int |f|^p dmu)^(1/p) over the full domain.  Not a norm: the Choquet
/// integral is only subadditive, so no triangle inequality is claimed.
double lp_choquet_functional(const SampledFunction1D& f, const Capacity& c,
                             double p);
double lp_choquet_functional(const SampledFunctionSimplex& f,
                             const Capacity& c, double p);

struct PropertyReport {
  bool all_ok = true;
  int checks_run = 0;
  std::vector<std::string> failures;
};

/// Randomized verification of the Choquet integral identities on the
/// SortedLevels path: positive homogeneity, translation, monotonicity in the
/// integrand and in the set, subadditivity over sets, subadditivity in the
/// integrand for submodular capacities, and the reduction to plain
/// quadrature for additive capacities.  Tolerance 1e-9.
PropertyReport choquet_property_suite(const Capacity& c, std::uint64_t seed,
                                      int trials = 500);

}  // namespace bdc

#endif
