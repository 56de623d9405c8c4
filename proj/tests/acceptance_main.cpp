// Acceptance suite: one test case per criterion, each printing a PASS/FAIL
// line with its wall-clock time and checking the stated runtime budget.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "bdc/bernstein.hpp"
#include "bdc/choquet.hpp"
#include "bdc/common.hpp"
#include "bdc/error_analysis.hpp"
#include "bdc/experiments.hpp"
#include "bdc/operators.hpp"
#include "bdc/random_sets.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bdc;

namespace {

template <typename... Args>
void note(Args&&... args) {
  std::ostringstream ss;
  (ss << ... << args);
  std::printf("    note: %s\n", ss.str().c_str());
  std::fflush(stdout);
}

class Criterion {
 public:
  Criterion(std::string tag, std::string what, double budget_seconds)
      : tag_(std::move(tag)),
        what_(std::move(what)),
        budget_(budget_seconds),
        start_(std::chrono::steady_clock::now()) {}

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

  void finish(bool passed) const {
    const double secs = elapsed();
    std::printf("[%s] %s (%.2fs, budget %.0fs): %s\n", tag_.c_str(),
                passed ? "PASS" : "FAIL", secs, budget_, what_.c_str());
    std::fflush(stdout);
    CHECK(passed);
    CHECK(secs < budget_);
  }

 private:
  std::string tag_, what_;
  double budget_;
  std::chrono::steady_clock::time_point start_;
};

Capacity sqrt_leb() { return Capacity::distorted_lebesgue(Distortion::sqrt()); }
Capacity sin_leb() { return Capacity::distorted_lebesgue(Distortion::sine()); }

int pow2_at_least(long long v) {
  int m = 1;
  while (m < v) m *= 2;
  return m;
}

const std::vector<std::pair<std::string, std::function<double(double)>>>&
sweep_functions() {
  static const std::vector<std::pair<std::string, std::function<double(double)>>>
      fns = {
          {"e1", [](double t) { return t; }},
          {"t^2", [](double t) { return t * t; }},
          {"exp",
           [](double t) { return (std::exp(t) - 1.0) / (std::exp(1.0) - 1.0); }},
          {"abs-shift", [](double t) { return std::abs(t - 0.5); }},
      };
  return fns;
}

}  // namespace

TEST_CASE("C1: bump-peak identity for the possibility denominators") {
  Criterion crit("C1", "(C)int t^k(1-t)^(n-k) dP = k^k n^-n (n-k)^(n-k)", 5.0);
  bool ok = true;
  for (int n = 1; n <= 12 && ok; ++n) {
    for (int k = 0; k <= n; ++k) {
      const bool boundary = (k == 0 || k == n);
      const int cells =
          boundary ? pow2_at_least(static_cast<long long>(n) * 1000000) : 16384;
      const int kk = k, nn = n;
      const SampledFunction1D w = SampledFunction1D::from_function(
          [kk, nn](double t) {
            return pow_int(t, kk) * pow_int(1.0 - t, nn - kk);
          },
          cells);
      const Capacity poss =
          Capacity::possibility(UnimodalDistribution::bernstein_bump(n, k));
      const IntegralResult r =
          choquet_beta_quadrature(w, IntervalSet::full(), poss);
      const double expect = bump_peak_value(n, k);
      const double rel = std::abs(r.value - expect) / expect;
      if (!r.converged || rel > 1e-6) {
        note("C1 cell n=", n, " k=", k, " rel=", rel);
        ok = false;
      }
    }
  }
  crit.finish(ok);
}

TEST_CASE("C2: closed-form weighted-deviation suprema match brute force") {
  Criterion crit("C2", "critical-point formula vs 1e5-point maximization",
                 5.0);
  bool ok = true;
  for (int n = 2; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (int xi = 0; xi <= 10; ++xi) {
        const double x = xi / 10.0;
        const WeightedDeviationSup s = max_weighted_deviation(n, k, x);
        if (s.discriminant < 1.0) ok = false;
        const int kk = k, nn = n;
        const double brute = oracle::brute_sup(
            [kk, nn, x](double t) {
              return std::abs(t - x) * pow_int(t, kk) *
                     pow_int(1.0 - t, nn - kk);
            },
            0.0, 1.0, 100000);
        if (std::abs(s.sup - brute) > 1e-5) {
          note("C2 cell n=", n, " k=", k, " x=", x);
          ok = false;
        }
      }
    }
  }
  crit.finish(ok);
}

TEST_CASE("C3: pointwise possibility bound over the full sweep") {
  Criterion crit("C3", "|D_n(f) - f| <= 2 w1(f; delta_n(x)) on a 101-grid",
                 60.0);
  bool ok = true;
  const int plan_cells = 4096;
  for (const auto& [name, fn] : sweep_functions()) {
    const ModulusTable1D omega(fn, 4096);
    for (const int n : {2, 4, 8, 16, 32, 64}) {
      const SampledFunction1D fs =
          SampledFunction1D::from_function(fn, plan_cells);
      const CoefficientPlan1D plan = durrmeyer_possibility_plan(fs, n);
      for (int xi = 0; xi <= 100; ++xi) {
        const double x = xi / 100.0;
        const BoundReport r = possibility_pointwise_bound_check(
            fn, name, n, x, plan_cells, &plan, &omega);
        if (!r.passed) {
          note("C3 cell f=", name, " n=", n, " x=", x, " margin=", r.margin);
          ok = false;
        }
      }
    }
  }
  crit.finish(ok);
}

TEST_CASE("C4: pointwise bound on the simplex") {
  Criterion crit("C4", "|M_n(f) - f| <= 2 w1(f; M_n(phi_x)(x)) on S^2, N=32",
                 120.0);
  bool ok = true;
  const int resolution = 32;
  const CapacityFamily family = CapacityFamily::constant(sqrt_leb());
  const std::vector<std::pair<std::string, std::function<double(SimplexPoint)>>>
      fns = {{"x1+x2", [](SimplexPoint p) { return p.x1 + p.x2; }},
             {"x1^2", [](SimplexPoint p) { return p.x1 * p.x1; }}};
  for (const auto& [name, fn] : fns) {
    const ModulusTableSimplex omega(fn, 4 * resolution);
    for (const int n : {2, 4, 8}) {
      const SampledFunctionSimplex fs =
          SampledFunctionSimplex::from_function(fn, resolution);
      const CoefficientPlanSimplex plan =
          durrmeyer_choquet_plan(fs, n, family);
      for (int i = 0; i <= resolution; ++i) {
        for (int j = 0; j + i <= resolution; ++j) {
          const SimplexPoint x{static_cast<double>(i) / resolution,
                               static_cast<double>(j) / resolution};
          const BoundReport r = pointwise_modulus_bound_check_simplex(
              fn, name, n, x, family, resolution, &omega, &plan);
          if (!r.passed) {
            note("C4 cell f=", name, " n=", n, " x=(", x.x1, ",", x.x2,
                 ") margin=", r.margin);
            ok = false;
          }
        }
      }
    }
  }
  crit.finish(ok);
}

TEST_CASE("C5: Lp bounds for the two-measure operator") {
  Criterion crit("C5", "||f - D(f)||_{Lp_mu} <= 2 Kbar, plus the sandwich",
                 60.0);
  bool ok = true;
  const Capacity delta = Capacity::lebesgue();
  const Capacity mu = sin_leb();  // sin u <= u gives mu <= delta
  // sqrt(m) admits no scaling below Lebesgue near zero: the dominance
  // probe must reject it (unbounded gamma'(0+))
  try {
    durrmeyer_tail_choquet(
        SampledFunction1D::from_function([](double t) { return t; }, 256), 4,
        0.5, delta, Capacity::scaled(sqrt_leb(), 0.25));
    ok = false;
  } catch (const config_error&) {
  }
  const std::vector<std::pair<std::string, std::function<double(double)>>> fns =
      {{"t^2", [](double t) { return t * t; }},
       {"e1", [](double t) { return t; }}};
  for (const auto& [name, fn] : fns) {
    for (const double p : {1.0, 2.0}) {
      for (const int n : {4, 8, 16}) {
        const BoundReport r = lp_bound_check(fn, name, n, delta, mu, p, 2048);
        if (!r.passed) {
          note("C5 cell f=", name, " p=", p, " n=", n, " margin=", r.margin);
          ok = false;
        }
      }
      // sandwich 2K(f;t/2)_mu <= Kbar(f;t) <= 2K(f;t)_delta per candidate
      const std::vector<LadderCandidate> ladder =
          two_measure_ladder(fn, mu, delta, p, {}, 2048);
      for (const double t : {0.01, 0.1, 0.4}) {
        for (const LadderCandidate& c : ladder) {
          const double kbar = c.dist_mu + c.dist_delta + t * c.deriv_sup;
          if (2.0 * (c.dist_mu + 0.5 * t * c.deriv_sup) > kbar + 1e-12)
            ok = false;
          if (kbar > 2.0 * (c.dist_delta + t * c.deriv_sup) + 1e-12) ok = false;
        }
      }
    }
  }
  crit.finish(ok);
}

TEST_CASE("C6: improvement over the classical operators") {
  Criterion crit("C6", "Dirac-tail and genuine variants beat B_n / G_n", 30.0);
  bool ok = true;
  const auto sq = [](double t) { return t * t; };
  for (const Capacity& mu : {sqrt_leb(), sin_leb()}) {
    for (int n = 2; n <= 32; ++n) {
      const ImprovementReport rb =
          improvement_over_bernstein_check(sq, n, mu, 2048);
      const ImprovementReport rg =
          improvement_over_genuine_check(sq, n, mu, 2048);
      if (!rb.passed || !rg.passed) {
        note("C6 cell mu=", mu.describe(), " n=", n, " detail=",
             rb.passed ? rg.detail : rb.detail);
        ok = false;
      }
    }
  }
  // frozen tail-coefficient oracle: c_2 for t^2 under sqrt(m) is
  // (128/315) / (8/15) = 16/21 (beta-quadrature oracle)
  const SampledFunction1D fine =
      SampledFunction1D::from_function(sq, 1 << 17);
  const CoefficientPlan1D plan = durrmeyer_choquet_plan(
      fine, 2, CapacityFamily::dirac_tail(2, sqrt_leb()));
  const double cn = plan.ratios()[2];
  if (std::abs(cn - 16.0 / 21.0) > 1e-6) {
    note("C6 tail coefficient ", cn, " vs 16/21");
    ok = false;
  }
  crit.finish(ok);
}

TEST_CASE("C7: Choquet integral property suite") {
  Criterion crit("C7", "homogeneity/translation/monotonicity/subadditivity "
                       "on 500 seeded functions per capacity",
                 30.0);
  bool ok = true;
  const std::vector<Capacity> caps = {
      sqrt_leb(), sin_leb(),
      Capacity::possibility(UnimodalDistribution::bernstein_bump(4, 2)),
      Capacity::lebesgue()};
  for (const Capacity& c : caps) {
    const PropertyReport r = choquet_property_suite(c, 20240817, 500);
    if (!r.all_ok) {
      note("C7 capacity ", c.describe(), ": ", r.failures.front());
      ok = false;
    }
  }
  crit.finish(ok);
}

TEST_CASE("C8: structural flags back the declared capacities") {
  Criterion crit("C8", "monotone + submodular over 1000 seeded pairs, plus "
                       "the convex negative control",
                 5.0);
  bool ok = true;
  const std::vector<Capacity> submodular = {
      sqrt_leb(),
      sin_leb(),
      Capacity::distorted_lebesgue(Distortion::power(0.5)),
      Capacity::distorted_lebesgue(Distortion::identity()),
      Capacity::possibility(UnimodalDistribution::bernstein_bump(4, 2)),
      Capacity::possibility(UnimodalDistribution::bernstein_bump(6, 0)),
      Capacity::dirac(0.3),
      Capacity::lebesgue(),
      Capacity::scaled(sqrt_leb(), 0.5),
  };
  for (const Capacity& c : submodular) {
    if (!c.flags().submodular) ok = false;
    const StructureReport r = check_structure(c, 1000, 77);
    if (!r.monotone_ok || !r.submodular_ok) {
      note("C8 capacity ", c.describe());
      ok = false;
    }
  }
  const StructureReport bad = check_structure(
      Capacity::distorted_lebesgue(Distortion::power_unchecked(2.0)), 1000, 77);
  if (bad.submodular_ok || !bad.counterexample.has_value()) ok = false;
  crit.finish(ok);
}

TEST_CASE("C9: additive families reduce to the classical operators") {
  Criterion crit("C9", "Choquet operators with additive capacities match "
                       "their classical counterparts",
                 30.0);
  bool ok = true;
  const Capacity leb = Capacity::lebesgue();
  for (const auto& [name, fn] : std::vector<
           std::pair<std::string, std::function<double(double)>>>{
           {"e0", [](double) { return 1.0; }},
           {"e1", [](double t) { return t; }},
           {"t^2", [](double t) { return t * t; }}}) {
    for (const int n : {2, 8, 32}) {
      const SampledFunction1D fs = SampledFunction1D::from_function(fn, 2048);
      std::vector<Capacity> diracs;
      for (int k = 0; k <= n; ++k)
        diracs.push_back(Capacity::dirac(static_cast<double>(k) / n));
      const CoefficientPlan1D all_dirac =
          durrmeyer_choquet_plan(fs, n, CapacityFamily::per_index(diracs));
      const CoefficientPlan1D const_leb =
          durrmeyer_choquet_plan(fs, n, CapacityFamily::constant(leb));
      const CoefficientPlan1D tail = tail_choquet_plan(fs, n, leb, leb);
      const CoefficientPlan1D head = head_choquet_plan(fs, n, leb, leb);
      const CoefficientPlan1D ends = ends_choquet_plan(fs, n, leb, leb);
      const CoefficientPlan1D gen = genuine_plan(
          fs, n,
          CapacityFamily::genuine_constant_middle(
              n, Capacity::dirac(0.0), Capacity::dirac(1.0), leb));
      for (int xi = 0; xi <= 100; ++xi) {
        const double x = xi / 100.0;
        const double bern = classical_bernstein(fn, n, x);
        const double durr = durrmeyer_borel(fn, n, x, leb, 2048);
        const double genu = classical_genuine(fn, n, x, 2048);
        if (std::abs(all_dirac.evaluate(x) - bern) > 2e-6 ||
            std::abs(const_leb.evaluate(x) - durr) > 2e-6 ||
            std::abs(tail.evaluate(x) - durr) > 2e-6 ||
            std::abs(head.evaluate(x) - durr) > 2e-6 ||
            std::abs(ends.evaluate(x) - durr) > 2e-6 ||
            std::abs(gen.evaluate(x) - genu) > 2e-6) {
          note("C9 reduction failed at f=", name, " n=", n, " x=", x);
          ok = false;
        }
      }
    }
  }
  // Dirac-tail identity: D(f) - B_n(f) = x^n (c_n - f(1))
  const auto sq = [](double t) { return t * t; };
  for (const int n : {2, 8, 32}) {
    const SampledFunction1D fs = SampledFunction1D::from_function(sq, 2048);
    const CoefficientPlan1D plan =
        durrmeyer_choquet_plan(fs, n, CapacityFamily::dirac_tail(n, sqrt_leb()));
    const double cn = plan.ratios()[n];
    for (int xi = 0; xi <= 100; ++xi) {
      const double x = xi / 100.0;
      const double identity = pow_int(x, n) * (cn - 1.0);
      if (std::abs(plan.evaluate(x) - classical_bernstein(sq, n, x) -
                   identity) > 1e-9) {
        note("C9 dirac-tail identity failed at n=", n, " x=", x);
        ok = false;
      }
    }
  }
  crit.finish(ok);
}

TEST_CASE("C10: byte-identical CLI output for identical config and seed") {
  Criterion crit("C10", "repeated runs produce identical CSV bytes", 60.0);
  bool ok = true;
#ifndef BDC_CLI_PATH
#error "BDC_CLI_PATH must point at the CLI binary"
#endif
  const std::string cli = BDC_CLI_PATH;
  const std::string dir = "acceptance_tmp";
  std::system(("mkdir -p " + dir).c_str());
  const std::string cfg_path = dir + "/determinism.cfg";
  {
    std::ofstream cfg(cfg_path);
    cfg << "kind = bound-check\ntheorem = 4.1\nf = t^2\nn = 2,4,8\n"
           "xgrid = 21\nseed = 31415\n";
  }
  const auto run = [&](const std::string& out, const std::string& extra) {
    const std::string cmd = "\"" + cli + "\" --config " + cfg_path + " --out " +
                            out + extra;
    return std::system(cmd.c_str());
  };
  const auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  if (run(dir + "/a.csv", "") != 0) ok = false;
  if (run(dir + "/b.csv", "") != 0) ok = false;
  if (run(dir + "/c.csv", " --jobs 2") != 0) ok = false;
  const std::string a = slurp(dir + "/a.csv");
  if (a.empty() || a != slurp(dir + "/b.csv") || a != slurp(dir + "/c.csv"))
    ok = false;
  // a configuration error must exit with code 2 and write nothing
  {
    std::ofstream cfg(dir + "/broken.cfg");
    cfg << "kind = integrate\nf = nope\ncapacity = lebesgue\n";
  }
  const int rc = std::system(("\"" + cli + "\" --config " + dir +
                              "/broken.cfg --out " + dir +
                              "/broken.csv 2>/dev/null")
                                 .c_str());
  if (WEXITSTATUS(rc) != 2) ok = false;
  if (std::ifstream(dir + "/broken.csv").good()) ok = false;
  crit.finish(ok);
}
