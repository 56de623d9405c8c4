#include <cmath>
#include <random>

#include "bdc/bernstein.hpp"
#include "bdc/choquet.hpp"
#include "bdc/common.hpp"
#include "bdc/operators.hpp"
#include "bdc/random_sets.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bdc;

namespace {
Capacity sqrt_leb() { return Capacity::distorted_lebesgue(Distortion::sqrt()); }
Capacity sin_leb() { return Capacity::distorted_lebesgue(Distortion::sine()); }

SampledFunction1D sample(const std::function<double(double)>& f,
                         int cells = 2048) {
  return SampledFunction1D::from_function(f, cells);
}
}  // namespace

TEST_CASE("every operator fixes the constant one exactly") {
  // the numerator/denominator cancellation is exact (every ratio is 1.0);
  // the evaluated value differs from 1 only by the basis-row rounding
  const SampledFunction1D one = sample([](double) { return 1.0; });
  const std::vector<double> xs = {0.0, 0.3, 1.0};
  for (const double x : xs) {
    const std::vector<OperatorOutput> outs = {
        durrmeyer_possibility(one, 5, x),
        durrmeyer_single_capacity(one, 4, x, sqrt_leb()),
        durrmeyer_choquet(one, 4, x, CapacityFamily::dirac_tail(4, sqrt_leb())),
        durrmeyer_tail_choquet(one, 3, x, Capacity::lebesgue(), sin_leb()),
        durrmeyer_head_choquet(one, 3, x, Capacity::lebesgue(), sin_leb()),
        durrmeyer_ends_choquet(one, 3, x, Capacity::lebesgue(), sin_leb()),
        genuine_durrmeyer_choquet(
            one, 4, x,
            CapacityFamily::genuine_constant_middle(
                4, Capacity::dirac(0.0), sqrt_leb(), Capacity::lebesgue()))};
    for (const OperatorOutput& out : outs) {
      for (const double ratio : out.coefficients) CHECK(ratio == 1.0);
      CHECK(std::abs(out.value - 1.0) <= 1e-12);
    }
  }
  const SampledFunctionSimplex one2 = SampledFunctionSimplex::from_function(
      [](SimplexPoint) { return 1.0; }, 16);
  const OperatorOutput s2 = durrmeyer_choquet(
      one2, 3, {0.2, 0.3}, CapacityFamily::constant(sqrt_leb()));
  for (const double ratio : s2.coefficients) CHECK(ratio == 1.0);
  CHECK(std::abs(s2.value - 1.0) <= 1e-12);
}

TEST_CASE("all-Dirac family reproduces the classical Bernstein operator") {
  const auto sq = [](double t) { return t * t; };
  const SampledFunction1D f = sample(sq);
  for (const int n : {2, 5, 9}) {
    std::vector<Capacity> diracs;
    for (int k = 0; k <= n; ++k)
      diracs.push_back(Capacity::dirac(static_cast<double>(k) / n));
    const CoefficientPlan1D plan =
        durrmeyer_choquet_plan(f, n, CapacityFamily::per_index(diracs));
    for (int i = 0; i <= 20; ++i) {
      const double x = i / 20.0;
      CHECK(plan.evaluate(x) ==
            doctest::Approx(classical_bernstein(sq, n, x)).epsilon(1e-13));
    }
  }
}

TEST_CASE("constant Lebesgue family equals the Borel Durrmeyer operator") {
  const auto e1 = [](double t) { return t; };
  const SampledFunction1D f = sample(e1);
  // symmetry pins the midpoint value of the classical Durrmeyer operator
  const OperatorOutput mid =
      durrmeyer_single_capacity(f, 2, 0.5, Capacity::lebesgue());
  CHECK(mid.value == doctest::Approx(0.5).epsilon(1e-12));
  for (const int n : {2, 6}) {
    for (int i = 0; i <= 10; ++i) {
      const double x = i / 10.0;
      CHECK(durrmeyer_single_capacity(f, n, x, Capacity::lebesgue()).value ==
            doctest::Approx(durrmeyer_borel(e1, n, x, Capacity::lebesgue()))
                .epsilon(2e-6));
    }
  }
}

TEST_CASE("possibility operator: denominators equal the closed-form peaks") {
  const SampledFunction1D f = sample([](double t) { return t * t; }, 16384);
  for (const int n : {2, 6, 12}) {
    const CoefficientPlan1D plan = durrmeyer_possibility_plan(f, n);
    for (int k = 1; k < n; ++k) {
      const double peak = bump_peak_value(n, k);
      CHECK(std::abs(plan.denominators()[k] - peak) < 1e-6);
      CHECK(std::abs(plan.denominators()[k] - peak) / peak < 1e-6);
    }
  }
  // the (4,2) denominator is 1/16
  const CoefficientPlan1D p4 = durrmeyer_possibility_plan(f, 4);
  CHECK(p4.denominators()[2] == doctest::Approx(1.0 / 16.0).epsilon(1e-6));
  // default grids stay within the analytic envelope (no throw)
  const SampledFunction1D coarse = sample([](double t) { return t; }, 2048);
  CHECK_NOTHROW(durrmeyer_possibility_plan(coarse, 8));
}

TEST_CASE("possibility operator endpoint value against a continuous oracle") {
  // x = 0 collapses to the k = 0 coefficient:
  // (C)int t (1-t)^2 dP_{2,0} / E_{2,0}.  Substituting beta = t(1-t)^2 on the
  // rising branch gives int_{2/3}^1 u^3 (3u-2) du = 97/810.
  const double frozen = 97.0 / 810.0;
  const auto g = [](double t) { return t * (1.0 - t) * (1.0 - t); };
  const double gmax = g(1.0 / 3.0);
  const double quad = oracle::simpson(
      [&](double beta) {
        const double l = oracle::bisect(g, beta, 0.0, 1.0 / 3.0);
        return (1.0 - l) * (1.0 - l);
      },
      0.0, gmax);
  CHECK(quad == doctest::Approx(frozen).epsilon(1e-6));

  const SampledFunction1D e1 = sample([](double t) { return t; }, 1 << 16);
  const OperatorOutput at0 = durrmeyer_possibility(e1, 2, 0.0);
  CHECK(at0.value == doctest::Approx(frozen).epsilon(1e-4));
  CHECK(at0.value == doctest::Approx(at0.coefficients[0]).epsilon(1e-13));
}

TEST_CASE("two-measure operators: reductions and dominance controls") {
  const auto e1 = [](double t) { return t; };
  const SampledFunction1D f = sample(e1);
  const Capacity leb = Capacity::lebesgue();
  // mu = delta = Lebesgue collapses every variant onto the Borel Durrmeyer
  for (int i = 0; i <= 10; ++i) {
    const double x = i / 10.0;
    const double classical = durrmeyer_borel(e1, 4, x, leb);
    CHECK(durrmeyer_tail_choquet(f, 4, x, leb, leb).value ==
          doctest::Approx(classical).epsilon(2e-6));
    CHECK(durrmeyer_head_choquet(f, 4, x, leb, leb).value ==
          doctest::Approx(classical).epsilon(2e-6));
    CHECK(durrmeyer_ends_choquet(f, 4, x, leb, leb).value ==
          doctest::Approx(classical).epsilon(2e-6));
  }
  // sin(m) <= m qualifies; sqrt(m) cannot be scaled below m near zero
  CHECK_NOTHROW(durrmeyer_tail_choquet(f, 3, 0.5, leb, sin_leb()));
  CHECK_THROWS_AS(durrmeyer_tail_choquet(f, 3, 0.5, leb, sqrt_leb()),
                  config_error);
  CHECK_THROWS_AS(
      durrmeyer_tail_choquet(f, 3, 0.5, leb, Capacity::scaled(sqrt_leb(), 0.1)),
      config_error);
  CHECK_THROWS_AS(durrmeyer_head_choquet(f, 3, 0.5, sin_leb(), sin_leb()),
                  config_error);  // delta must be additive
}

TEST_CASE("head variant at x = 1 exposes the top Lebesgue coefficient") {
  // (1-x)^n kills the Choquet term; remaining weight sits on k = n with
  // int t * t^2 dm / int t^2 dm = (1/4)/(1/3) = 3/4 by the quadrature oracle
  const double num = oracle::simpson([](double t) { return t * t * t; }, 0, 1);
  const double den = oracle::simpson([](double t) { return t * t; }, 0, 1);
  CHECK(num / den == doctest::Approx(0.75).epsilon(1e-9));
  const SampledFunction1D e1 = sample([](double t) { return t; });
  const OperatorOutput out =
      durrmeyer_head_choquet(e1, 2, 1.0, Capacity::lebesgue(), sin_leb());
  CHECK(out.value == doctest::Approx(0.75).epsilon(2e-6));
}

TEST_CASE("shifted operator handles lower-bounded integrands") {
  const SampledFunction1D f =
      sample([](double t) { return t - 0.5; });
  std::vector<Capacity> diracs;
  for (int k = 0; k <= 4; ++k)
    diracs.push_back(Capacity::dirac(k / 4.0));
  const CapacityFamily family = CapacityFamily::per_index(diracs);
  // Dirac coefficients make the shift transparent: the result is the
  // classical Bernstein value of the signed function
  for (int i = 0; i <= 10; ++i) {
    const double x = i / 10.0;
    CHECK(shifted_durrmeyer_choquet(f, -0.5, 4, x, family) ==
          doctest::Approx(classical_bernstein(
                              [](double t) { return t - 0.5; }, 4, x))
              .epsilon(1e-13));
  }
  const SampledFunction1D c = sample([](double) { return -0.5; });
  CHECK(shifted_durrmeyer_choquet(c, -0.5, 4, 0.3, family) ==
        doctest::Approx(-0.5).epsilon(1e-14));
  const SampledFunction1D g = sample([](double t) { return t; });
  CHECK(shifted_durrmeyer_choquet(g, 0.0, 4, 0.3,
                                  CapacityFamily::constant(sqrt_leb())) ==
        doctest::Approx(
            durrmeyer_single_capacity(g, 4, 0.3, sqrt_leb()).value)
            .epsilon(1e-13));
  CHECK_THROWS_AS(shifted_durrmeyer_choquet(f, 0.0, 4, 0.3, family),
                  std::invalid_argument);
  CHECK_THROWS_AS(durrmeyer_choquet(f, 4, 0.3, family), std::invalid_argument);
}

TEST_CASE("genuine operator: tail coefficient and identity") {
  const auto sq = [](double t) { return t * t; };
  const SampledFunction1D f = sample(sq, 1 << 16);
  const CapacityFamily family = CapacityFamily::genuine_constant_middle(
      2, Capacity::dirac(0.0), sqrt_leb(), Capacity::lebesgue());
  const CoefficientPlan1D plan = genuine_plan(f, 2, family);
  // c_n = (C)int t^4 d(sqrt m) / (C)int t^2 d(sqrt m) = (128/315)/(8/15)
  CHECK(plan.ratios()[2] == doctest::Approx(16.0 / 21.0).epsilon(2e-5));
  // endpoint interpolation through the Dirac head
  CHECK(plan.ratios()[0] == doctest::Approx(0.0));

  // U - G = x^n (c_n - f(1)) when the middle runs on Lebesgue
  const SampledFunction1D fd = sample(sq);
  const CoefficientPlan1D uplan = genuine_plan(fd, 4,
      CapacityFamily::genuine_constant_middle(
          4, Capacity::dirac(0.0), sin_leb(), Capacity::lebesgue()));
  const double cn = uplan.ratios()[4];
  for (int i = 0; i <= 20; ++i) {
    const double x = i / 20.0;
    const double u = uplan.evaluate(x);
    const double g = classical_genuine(sq, 4, x, 2048);
    CHECK(u - g == doctest::Approx(pow_int(x, 4) * (cn - 1.0)).epsilon(1e-9));
  }
  // strictly increasing f puts the tail coefficient strictly below f(1)
  CHECK(cn < 1.0);
}

TEST_CASE("denominator guard raises the strict-positivity error") {
  const SampledFunction1D f = sample([](double t) { return t; });
  // Dirac at 0 against the weight t^n: the denominator vanishes
  CHECK_THROWS_AS(
      durrmeyer_choquet(f, 3, 0.5,
                        CapacityFamily::constant(Capacity::dirac(0.0))),
      strict_positivity_error);
  CHECK_THROWS_AS(
      durrmeyer_choquet(f, 3, 0.5,
                        CapacityFamily::constant(
                            Capacity::scaled(Capacity::lebesgue(), 0.0))),
      strict_positivity_error);
  // the Dirac-tail family is well defined despite Dirac members: each atom
  // sits at the peak of its own weight
  CHECK_NOTHROW(durrmeyer_choquet(
      f, 3, 0.5, CapacityFamily::dirac_tail(3, sqrt_leb())));
}

TEST_CASE("operator properties: monotone, homogeneous, subadditive") {
  std::mt19937_64 rng(53);
  const std::vector<CapacityFamily> families = {
      CapacityFamily::possibility(5), CapacityFamily::constant(sqrt_leb()),
      CapacityFamily::dirac_tail(5, sin_leb())};
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<double> base(257), bump(257);
    for (auto& v : base) v = uniform01(rng());
    for (auto& v : bump) v = uniform01(rng());
    const SampledFunction1D f = SampledFunction1D::from_nodes(base);
    const SampledFunction1D g = SampledFunction1D::from_nodes(bump);
    const SampledFunction1D fg = SampledFunction1D::combine(
        f, g, [](double a, double b) { return a + b; });
    const double a = 2.0 * uniform01(rng());
    const SampledFunction1D af =
        f.map([a](double v) { return a * v; });
    for (const CapacityFamily& family : families) {
      const CoefficientPlan1D pf = durrmeyer_choquet_plan(f, 5, family);
      const CoefficientPlan1D pg = durrmeyer_choquet_plan(g, 5, family);
      const CoefficientPlan1D pfg = durrmeyer_choquet_plan(fg, 5, family);
      const CoefficientPlan1D paf = durrmeyer_choquet_plan(af, 5, family);
      for (int i = 0; i <= 10; ++i) {
        const double x = i / 10.0;
        // monotone: f <= f + g
        CHECK(pf.evaluate(x) <= pfg.evaluate(x) + 1e-9);
        // positively homogeneous
        CHECK(paf.evaluate(x) ==
              doctest::Approx(a * pf.evaluate(x)).epsilon(1e-9));
        // subadditive for submodular families
        CHECK(pfg.evaluate(x) <=
              pf.evaluate(x) + pg.evaluate(x) + 1e-9);
      }
    }
  }
}

TEST_CASE("simplex operator sanity") {
  const SampledFunctionSimplex f = SampledFunctionSimplex::from_function(
      [](SimplexPoint p) { return p.x1 + p.x2; }, 24);
  const CoefficientPlanSimplex plan =
      durrmeyer_choquet_plan(f, 3, CapacityFamily::constant(sqrt_leb()));
  CHECK(plan.ratios().size() == 10);
  for (const double d : plan.denominators()) CHECK(d > 0.0);
  // values stay inside the range of f
  for (const auto& x : {SimplexPoint{0.2, 0.3}, SimplexPoint{0.0, 0.0}}) {
    const double v = plan.evaluate(x);
    CHECK(v >= 0.0);
    CHECK(v <= 1.0 + 1e-12);
  }
  CHECK_THROWS_AS(
      durrmeyer_choquet(f, 3, {0.8, 0.8}, CapacityFamily::constant(sqrt_leb())),
      std::invalid_argument);
}
