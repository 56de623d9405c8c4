#include "bdc/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bdc/bernstein.hpp"
#include "bdc/choquet.hpp"
#include "bdc/common.hpp"
#include "bdc/random_sets.hpp"

namespace bdc {

namespace {

constexpr double kDenominatorGuard = 1e-14;  // relative to the weight peak

enum class IntegralPath { Choquet, Ordinary, DiracPoint };

struct IntegralPair {
  double num = 0.0;
  double den = 0.0;
};

IntegralPath path_for(const Capacity& mu, bool prefer_ordinary) {
  if (mu.kind() == CapacityKind::Dirac) return IntegralPath::DiracPoint;
  if (prefer_ordinary && mu.flags().additive) return IntegralPath::Ordinary;
  return IntegralPath::Choquet;
}

IntegralPair coefficient_integrals_1d(const SampledFunction1D& f,
                                      const SampledFunction1D& w,
                                      const Capacity& mu, IntegralPath path) {
  IntegralPair out;
  switch (path) {
    case IntegralPath::DiracPoint: {
      const double x0 = mu.dirac_point();
      out.den = w.point_value(x0);
      out.num = f.point_value(x0) * out.den;
      return out;
    }
    case IntegralPath::Ordinary: {
      const SampledFunction1D fw = SampledFunction1D::combine(
          f, w, [](double u, double v) { return u * v; });
      out.num = ordinary_integral(fw, IntervalSet::full(), mu);
      out.den = ordinary_integral(w, IntervalSet::full(), mu);
      return out;
    }
    case IntegralPath::Choquet: {
      const SampledFunction1D fw = SampledFunction1D::combine(
          f, w, [](double u, double v) { return u * v; });
      out.num = choquet_sorted_levels(fw, IntervalSet::full(), mu);
      out.den = choquet_sorted_levels(w, IntervalSet::full(), mu);
      return out;
    }
  }
  return out;
}

void guard_denominator(double den, double weight_peak, int index,
                       const Capacity& mu) {
  if (!(den > kDenominatorGuard * weight_peak))
    throw strict_positivity_error(
        "operator denominator vanished at basis index " +
        std::to_string(index) + " for capacity " + mu.describe());
}

void require_nonneg(const SampledFunction1D& f) {
  if (f.min_cell() < 0.0)
    throw std::invalid_argument(
        "operator requires f >= 0; use the shifted variant for lower-bounded "
        "integrands");
}

void require_dominated(const Capacity& mu, const Capacity& delta) {
  if (!delta.flags().additive)
    throw config_error("delta must be an additive Borel measure");
  if (auto violation = dominance_violation(mu, delta))
    throw config_error("dominance mu <= delta fails: " + *violation);
}

}  // namespace

SampledFunction1D sampled_weight_1d(int n, int k, int cells, CellMode mode) {
  return SampledFunction1D::from_function(
      [n, k](double t) { return pow_int(t, k) * pow_int(1.0 - t, n - k); },
      cells, mode);
}

CoefficientPlan1D::CoefficientPlan1D(int n, std::vector<double> numerators,
                                     std::vector<double> denominators)
    : n_(n),
      numerators_(std::move(numerators)),
      denominators_(std::move(denominators)) {
  ratios_.resize(numerators_.size());
  for (std::size_t i = 0; i < ratios_.size(); ++i)
    ratios_[i] = numerators_[i] / denominators_[i];
}

double CoefficientPlan1D::evaluate(double x) const {
  const std::vector<double> row = bernstein_row(n_, x);
  double sum = 0.0;
  for (int k = 0; k <= n_; ++k) sum += row[k] * ratios_[k];
  return sum;
}

OperatorOutput CoefficientPlan1D::output_at(double x) const {
  return {evaluate(x), ratios_, denominators_};
}

CoefficientPlanSimplex::CoefficientPlanSimplex(
    int n, std::vector<std::vector<int>> alphas,
    std::vector<double> numerators, std::vector<double> denominators)
    : n_(n),
      alphas_(std::move(alphas)),
      numerators_(std::move(numerators)),
      denominators_(std::move(denominators)) {
  ratios_.resize(numerators_.size());
  for (std::size_t i = 0; i < ratios_.size(); ++i)
    ratios_[i] = numerators_[i] / denominators_[i];
}

double CoefficientPlanSimplex::evaluate(SimplexPoint x) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < alphas_.size(); ++i)
    sum += simplex_basis(alphas_[i], x).weighted * ratios_[i];
  return sum;
}

OperatorOutput CoefficientPlanSimplex::output_at(SimplexPoint x) const {
  return {evaluate(x), ratios_, denominators_};
}

namespace {

CoefficientPlan1D build_plan_1d(const SampledFunction1D& f, int n,
                                const CapacityFamily& family,
                                const std::vector<IntegralPath>& paths) {
  std::vector<double> nums(n + 1), dens(n + 1);
  for (int k = 0; k <= n; ++k) {
    const Capacity& mu = family.at(k);
    const SampledFunction1D w = sampled_weight_1d(n, k, f.cells(), f.mode());
    const IntegralPair pair = coefficient_integrals_1d(f, w, mu, paths[k]);
    guard_denominator(pair.den, w.max_cell(), k, mu);
    nums[k] = pair.num;
    dens[k] = pair.den;
  }
  return CoefficientPlan1D(n, std::move(nums), std::move(dens));
}

std::vector<IntegralPath> default_paths(int n, const CapacityFamily& family) {
  std::vector<IntegralPath> paths(n + 1);
  for (int k = 0; k <= n; ++k) {
    const bool two_measure_body =
        family.kind() == CapacityFamily::Kind::TwoMeasure && k < n;
    paths[k] = path_for(family.at(k), two_measure_body);
  }
  return paths;
}

}  // namespace

CoefficientPlan1D durrmeyer_choquet_plan(const SampledFunction1D& f, int n,
                                         const CapacityFamily& family) {
  if (n < 1) throw std::invalid_argument("operator degree must be >= 1");
  require_nonneg(f);
  if (family.kind() == CapacityFamily::Kind::Genuine)
    throw std::invalid_argument(
        "genuine families need the genuine operator entry point");
  if (family.kind() != CapacityFamily::Kind::Constant &&
      family.member_count() != n + 1)
    throw std::invalid_argument("family size does not match the degree");
  return build_plan_1d(f, n, family, default_paths(n, family));
}

OperatorOutput durrmeyer_choquet(const SampledFunction1D& f, int n, double x,
                                 const CapacityFamily& family) {
  return durrmeyer_choquet_plan(f, n, family).output_at(x);
}

CoefficientPlan1D durrmeyer_possibility_plan(const SampledFunction1D& f,
                                             int n) {
  CoefficientPlan1D plan =
      durrmeyer_choquet_plan(f, n, CapacityFamily::possibility(n));
  // the grid denominators must sit just below the closed-form peak
  const double h = f.step();
  for (int k = 0; k <= n; ++k) {
    const double peak = bump_peak_value(n, k);
    const double den = plan.denominators()[k];
    if (den > peak * (1.0 + 1e-12) ||
        den < peak * (1.0 - 2.0 * n * h - 1e-12))
      throw std::runtime_error(
          "possibility denominator outside the analytic envelope at k=" +
          std::to_string(k));
  }
  return plan;
}

OperatorOutput durrmeyer_possibility(const SampledFunction1D& f, int n,
                                     double x) {
  return durrmeyer_possibility_plan(f, n).output_at(x);
}

OperatorOutput durrmeyer_single_capacity(const SampledFunction1D& f, int n,
                                         double x, const Capacity& mu) {
  return durrmeyer_choquet(f, n, x, CapacityFamily::constant(mu));
}

CoefficientPlan1D tail_choquet_plan(const SampledFunction1D& f, int n,
                                    const Capacity& delta, const Capacity& mu) {
  require_nonneg(f);
  // dominance is probed by the family factory
  return build_plan_1d(
      f, n, CapacityFamily::two_measure(n, delta, mu),
      [&] {
        std::vector<IntegralPath> paths(n + 1, IntegralPath::Ordinary);
        paths[n] = path_for(mu, false);
        return paths;
      }());
}

CoefficientPlan1D tail_choquet_plan_unchecked(const SampledFunction1D& f,
                                              int n, const Capacity& delta,
                                              const Capacity& mu) {
  require_nonneg(f);
  std::vector<Capacity> members(n, delta);
  members.push_back(mu);
  std::vector<IntegralPath> paths(n + 1, IntegralPath::Ordinary);
  paths[n] = path_for(mu, false);
  return build_plan_1d(f, n, CapacityFamily::per_index(std::move(members)),
                       paths);
}

CoefficientPlan1D head_choquet_plan(const SampledFunction1D& f, int n,
                                    const Capacity& delta, const Capacity& mu) {
  require_nonneg(f);
  require_dominated(mu, delta);
  std::vector<Capacity> members(n + 1, delta);
  members[0] = mu;
  std::vector<IntegralPath> paths(n + 1, IntegralPath::Ordinary);
  paths[0] = path_for(mu, false);
  return build_plan_1d(f, n, CapacityFamily::per_index(std::move(members)),
                       paths);
}

CoefficientPlan1D ends_choquet_plan(const SampledFunction1D& f, int n,
                                    const Capacity& delta, const Capacity& mu) {
  require_nonneg(f);
  require_dominated(mu, delta);
  std::vector<Capacity> members(n + 1, delta);
  members[0] = mu;
  members[n] = mu;
  std::vector<IntegralPath> paths(n + 1, IntegralPath::Ordinary);
  paths[0] = path_for(mu, false);
  paths[n] = path_for(mu, false);
  return build_plan_1d(f, n, CapacityFamily::per_index(std::move(members)),
                       paths);
}

OperatorOutput durrmeyer_tail_choquet(const SampledFunction1D& f, int n,
                                      double x, const Capacity& delta,
                                      const Capacity& mu) {
  return tail_choquet_plan(f, n, delta, mu).output_at(x);
}

OperatorOutput durrmeyer_head_choquet(const SampledFunction1D& f, int n,
                                      double x, const Capacity& delta,
                                      const Capacity& mu) {
  return head_choquet_plan(f, n, delta, mu).output_at(x);
}

OperatorOutput durrmeyer_ends_choquet(const SampledFunction1D& f, int n,
                                      double x, const Capacity& delta,
                                      const Capacity& mu) {
  return ends_choquet_plan(f, n, delta, mu).output_at(x);
}

double shifted_durrmeyer_choquet(const SampledFunction1D& f, double lower,
                                 int n, double x,
                                 const CapacityFamily& family) {
  const double node_min =
      *std::min_element(f.node_values().begin(), f.node_values().end());
  if (f.min_cell() < lower || node_min < lower)
    throw std::invalid_argument("f takes values below the stated lower bound");
  const SampledFunction1D g = f.map([lower](double v) { return v - lower; });
  return durrmeyer_choquet_plan(g, n, family).evaluate(x) + lower;
}

CoefficientPlan1D genuine_plan(const SampledFunction1D& f, int n,
                               const CapacityFamily& family) {
  if (n < 2) throw std::invalid_argument("genuine operator needs n >= 2");
  require_nonneg(f);
  if (family.kind() != CapacityFamily::Kind::Genuine)
    throw std::invalid_argument("genuine operator needs a genuine family");
  if (family.member_count() != n + 1)
    throw std::invalid_argument("family size does not match the degree");
  std::vector<double> nums(n + 1), dens(n + 1);
  for (int k = 0; k <= n; ++k) {
    const Capacity& mu = family.at(k);
    // endpoint weights are the full-degree end bumps; middle weights are the
    // degree-(n-2) bumps shifted by one
    const SampledFunction1D w =
        (k == 0)   ? sampled_weight_1d(n, 0, f.cells(), f.mode())
        : (k == n) ? sampled_weight_1d(n, n, f.cells(), f.mode())
                   : sampled_weight_1d(n - 2, k - 1, f.cells(), f.mode());
    const IntegralPair pair =
        coefficient_integrals_1d(f, w, mu, path_for(mu, true));
    guard_denominator(pair.den, w.max_cell(), k, mu);
    nums[k] = pair.num;
    dens[k] = pair.den;
  }
  return CoefficientPlan1D(n, std::move(nums), std::move(dens));
}

OperatorOutput genuine_durrmeyer_choquet(const SampledFunction1D& f, int n,
                                         double x,
                                         const CapacityFamily& family) {
  return genuine_plan(f, n, family).output_at(x);
}

// ---------------------------------------------------------------------------
// Simplex

namespace {

IntegralPair coefficient_integrals_simplex(const SampledFunctionSimplex& f,
                                           const SampledFunctionSimplex& w,
                                           const Capacity& mu,
                                           IntegralPath path) {
  IntegralPair out;
  const SimplexCellSet full = SimplexCellSet::full(f.resolution());
  switch (path) {
    case IntegralPath::DiracPoint: {
      const SimplexPoint p = mu.dirac_simplex_point();
      out.den = w.point_value(p);
      out.num = f.point_value(p) * out.den;
      return out;
    }
    case IntegralPath::Ordinary: {
      const SampledFunctionSimplex fw = SampledFunctionSimplex::combine(
          f, w, [](double u, double v) { return u * v; });
      out.num = ordinary_integral(fw, full, mu);
      out.den = ordinary_integral(w, full, mu);
      return out;
    }
    case IntegralPath::Choquet: {
      const SampledFunctionSimplex fw = SampledFunctionSimplex::combine(
          f, w, [](double u, double v) { return u * v; });
      out.num = choquet_sorted_levels(fw, full, mu);
      out.den = choquet_sorted_levels(w, full, mu);
      return out;
    }
  }
  return out;
}

}  // namespace

CoefficientPlanSimplex durrmeyer_choquet_plan(const SampledFunctionSimplex& f,
                                              int n,
                                              const CapacityFamily& family) {
  if (n < 1) throw std::invalid_argument("operator degree must be >= 1");
  if (f.min_cell() < 0.0)
    throw std::invalid_argument("operator requires f >= 0");
  std::vector<std::vector<int>> alphas = enumerate_multi_indices(n, 2);
  if (family.kind() != CapacityFamily::Kind::Constant &&
      family.member_count() != static_cast<int>(alphas.size()))
    throw std::invalid_argument("family size does not match the index count");
  std::vector<double> nums(alphas.size()), dens(alphas.size());
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    const Capacity& mu = family.at(static_cast<int>(i));
    const auto& alpha = alphas[i];
    const SampledFunctionSimplex w = SampledFunctionSimplex::from_function(
        [&alpha](SimplexPoint p) { return simplex_basis(alpha, p).plain; },
        f.resolution());
    const IntegralPair pair =
        coefficient_integrals_simplex(f, w, mu, path_for(mu, false));
    if (!(pair.den > kDenominatorGuard * w.max_cell()))
      throw strict_positivity_error(
          "operator denominator vanished at alpha index " + std::to_string(i) +
          " for capacity " + mu.describe());
    nums[i] = pair.num;
    dens[i] = pair.den;
  }
  return CoefficientPlanSimplex(n, std::move(alphas), std::move(nums),
                                std::move(dens));
}

OperatorOutput durrmeyer_choquet(const SampledFunctionSimplex& f, int n,
                                 SimplexPoint x, const CapacityFamily& family) {
  if (!(x.x1 >= 0.0 && x.x2 >= 0.0 && x.x1 + x.x2 <= 1.0 + 1e-12))
    throw std::invalid_argument("evaluation point outside the simplex");
  return durrmeyer_choquet_plan(f, n, family).output_at(x);
}

}  // namespace bdc
