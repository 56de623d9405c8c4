#ifndef BDC_OPERATORS_HPP
#define BDC_OPERATORS_HPP

#include <vector>

#include "bdc/capacity_family.hpp"
#include "bdc/sampled_function.hpp"

namespace bdc {

struct OperatorOutput {
  double value = 0.0;
  std::vector<double> coefficients;  // ratio per basis index
  std::vector<double> denominators;  // all strictly positive (guarded)
};

/// Ratio coefficients of a degree-n operator with an x-independent family;
/// reusable across evaluation points.
class CoefficientPlan1D {
 public:
  CoefficientPlan1D(int n, std::vector<double> numerators,
                    std::vector<double> denominators);
  int degree() const { return n_; }
  const std::vector<double>& numerators() const { return numerators_; }
  const std::vector<double>& denominators() const { return denominators_; }
  const std::vector<double>& ratios() const { return ratios_; }
  double evaluate(double x) const;
  OperatorOutput output_at(double x) const;

 private:
  int n_;
  std::vector<double> numerators_, denominators_, ratios_;
};

class CoefficientPlanSimplex {
 public:
  CoefficientPlanSimplex(int n, std::vector<std::vector<int>> alphas,
                         std::vector<double> numerators,
                         std::vector<double> denominators);
  int degree() const { return n_; }
  const std::vector<std::vector<int>>& alphas() const { return alphas_; }
  const std::vector<double>& denominators() const { return denominators_; }
  const std::vector<double>& ratios() const { return ratios_; }
  double evaluate(SimplexPoint x) const;
  OperatorOutput output_at(SimplexPoint x) const;

 private:
  int n_;
  std::vector<std::vector<int>> alphas_;
  std::vector<double> numerators_, denominators_, ratios_;
};

/// General Bernstein-Durrmeyer-Choquet operator: basis-weighted ratios of
/// Choquet integrals of f * weight over weight, one capacity per index.
/// f must be nonnegative; Dirac members evaluate by point mass, additive
/// members of a two-measure family by plain quadrature, everything else by
/// the exact sorted-levels path.
CoefficientPlan1D durrmeyer_choquet_plan(const SampledFunction1D& f, int n,
                                         const CapacityFamily& family);
OperatorOutput durrmeyer_choquet(const SampledFunction1D& f, int n, double x,
                                 const CapacityFamily& family);

CoefficientPlanSimplex durrmeyer_choquet_plan(const SampledFunctionSimplex& f,
                                              int n,
                                              const CapacityFamily& family);
OperatorOutput durrmeyer_choquet(const SampledFunctionSimplex& f, int n,
                                 SimplexPoint x, const CapacityFamily& family);

/// Operator against the possibility measures of the degree-n bumps; the
/// denominators are checked against their closed-form peak values.
CoefficientPlan1D durrmeyer_possibility_plan(const SampledFunction1D& f,
                                             int n);
OperatorOutput durrmeyer_possibility(const SampledFunction1D& f, int n,
                                     double x);

/// Single submodular capacity in every term.
OperatorOutput durrmeyer_single_capacity(const SampledFunction1D& f, int n,
                                         double x, const Capacity& mu);

/// Two-measure operators: the Choquet-handled term sits at the top index,
/// the bottom index, or both; all other terms integrate against the
/// dominating Borel measure delta.  Requires mu <= delta (probed).
CoefficientPlan1D tail_choquet_plan(const SampledFunction1D& f, int n,
                                    const Capacity& delta, const Capacity& mu);
/// Same arrangement without the dominance probe; for inner loops where the
/// caller has already verified the pair.
CoefficientPlan1D tail_choquet_plan_unchecked(const SampledFunction1D& f,
                                              int n, const Capacity& delta,
                                              const Capacity& mu);
CoefficientPlan1D head_choquet_plan(const SampledFunction1D& f, int n,
                                    const Capacity& delta, const Capacity& mu);
CoefficientPlan1D ends_choquet_plan(const SampledFunction1D& f, int n,
                                    const Capacity& delta, const Capacity& mu);
OperatorOutput durrmeyer_tail_choquet(const SampledFunction1D& f, int n,
                                      double x, const Capacity& delta,
                                      const Capacity& mu);
OperatorOutput durrmeyer_head_choquet(const SampledFunction1D& f, int n,
                                      double x, const Capacity& delta,
                                      const Capacity& mu);
OperatorOutput durrmeyer_ends_choquet(const SampledFunction1D& f, int n,
                                      double x, const Capacity& delta,
                                      const Capacity& mu);

/// Lower-bounded integrands: applies the operator to f - lower and adds the
/// bound back.  Rejects f with values below the stated bound.
double shifted_durrmeyer_choquet(const SampledFunction1D& f, double lower,
                                 int n, double x, const CapacityFamily& family);

/// Genuine variant: endpoint terms weight (1-t)^n and t^n against nu0 and
/// nun, middle terms use the degree-(n-2) weights.
CoefficientPlan1D genuine_plan(const SampledFunction1D& f, int n,
                               const CapacityFamily& family);
OperatorOutput genuine_durrmeyer_choquet(const SampledFunction1D& f, int n,
                                         double x,
                                         const CapacityFamily& family);

/// Weight polynomial t^k (1-t)^(n-k) sampled on the same grid as f.
SampledFunction1D sampled_weight_1d(int n, int k, int cells, CellMode mode);

}  // namespace bdc

#endif
