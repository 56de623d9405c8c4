#ifndef BDC_ERROR_ANALYSIS_HPP
#define BDC_ERROR_ANALYSIS_HPP

#include <functional>
#include <string>
#include <vector>

#include "bdc/capacity_family.hpp"
#include "bdc/operators.hpp"
#include "bdc/sampled_function.hpp"

namespace bdc {

/// Outcome of one inequality check: passed iff margin >= -tolerance.
struct BoundReport {
  std::string theorem;
  std::string f_name;
  std::string capacity_desc;
  int n = 0;
  std::string x_label;  // numeric x, or "uniform"
  double x = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

BoundReport make_report(std::string theorem, std::string f_name,
                        std::string capacity_desc, int n, std::string x_label,
                        double x, double lhs, double rhs, double tolerance);

// ---------------------------------------------------------------------------
// Moduli of continuity (grid moduli; they underestimate the true modulus,
// which every check compensates with a relative slack).

class ModulusTable1D {
 public:
  ModulusTable1D(const std::function<double(double)>& f, int grid_cells = 4096);
  double omega(double delta) const;

 private:
  std::vector<double> prefix_max_;  // by lag
  int cells_;
};

double modulus_of_continuity(const std::function<double(double)>& f,
                             double delta, int grid_cells = 4096);

class ModulusTableSimplex {
 public:
  ModulusTableSimplex(const std::function<double(SimplexPoint)>& f,
                      int resolution, int buckets = 2048);
  double omega(double delta) const;

 private:
  std::vector<double> prefix_max_;  // by distance bucket
  double bucket_width_;
};

double modulus_of_continuity_simplex(
    const std::function<double(SimplexPoint)>& f, double delta,
    int resolution);

// ---------------------------------------------------------------------------
// Closed-form supremum of |t-x| t^k (1-t)^(n-k) over [0,1] (critical points
// of the weighted deviation are the roots of a quadratic).

struct WeightedDeviationSup {
  double t1 = 0.0;  // maximizer on [0, x]
  double t2 = 0.0;  // maximizer on [x, 1]
  double sup = 0.0;
  double discriminant = 0.0;  // always >= 1
};

WeightedDeviationSup max_weighted_deviation(int n, int k, double x);

// ---------------------------------------------------------------------------
// K-functional upper bounds over the Bernstein smoothing ladder;
// the true infimum over all C^1 candidates is not computable, and every
// check that uses these is valid a fortiori.

struct SmoothingLadder {
  std::vector<int> orders = {4, 8, 16, 32, 64, 128, 256};
};

double kfunctional_upper(const std::function<double(double)>& f, double t,
                         const SmoothingLadder& ladder = {},
                         int grid_cells = 4096);
double kfunctional_upper_simplex(const std::function<double(SimplexPoint)>& f,
                                 double t, const SmoothingLadder& ladder = {},
                                 int resolution = 64);

/// Ladder candidate distances for the two-measure functional: both L^p
/// fidelities plus the derivative bound of the smoothed candidate.
struct LadderCandidate {
  int order = 0;
  double dist_mu = 0.0;
  double dist_delta = 0.0;
  double deriv_sup = 0.0;
};

std::vector<LadderCandidate> two_measure_ladder(
    const std::function<double(double)>& f, const Capacity& mu,
    const Capacity& delta, double p, const SmoothingLadder& ladder = {},
    int grid_cells = 2048);

double two_measure_kfunctional_upper(double t,
                                     const std::vector<LadderCandidate>& c);

// ---------------------------------------------------------------------------
// Theorem checks.  Tags: thm-3.1i, thm-3.1ii, thm-3.3, thm-3.4, thm-4.1,
// remark-4.4.

/// Pointwise bound |M(f)(x) - f(x)| <= 2 w1(f; M(phi_x)(x)).
BoundReport pointwise_modulus_bound_check(
    const std::function<double(double)>& f, const std::string& f_name, int n,
    double x, const CapacityFamily& family, int grid_cells = 2048,
    const ModulusTable1D* omega = nullptr);
BoundReport pointwise_modulus_bound_check_simplex(
    const std::function<double(SimplexPoint)>& f, const std::string& f_name,
    int n, SimplexPoint x, const CapacityFamily& family, int resolution = 32,
    const ModulusTableSimplex* omega = nullptr,
    const CoefficientPlanSimplex* plan = nullptr);

/// Aggregate first-moment bound Delta_n for an x-independent family.
double uniform_first_moment(int n, const CapacityFamily& family,
                            int grid_cells = 2048, int x_grid = 101);
double uniform_first_moment_simplex(int n, const CapacityFamily& family,
                                    int resolution = 32, int x_grid = 33);

/// Uniform bound ||M(f) - f|| <= 2 K(f; Delta_n / 2), K replaced by its
/// ladder upper bound.
BoundReport uniform_kfunctional_bound_check(
    const std::function<double(double)>& f, const std::string& f_name, int n,
    const CapacityFamily& family, int grid_cells = 2048, int x_grid = 101);
BoundReport uniform_kfunctional_bound_check_simplex(
    const std::function<double(SimplexPoint)>& f, const std::string& f_name,
    int n, const CapacityFamily& family, int resolution = 32, int x_grid = 33);

/// L^p bound for the two-measure operators (p = 1 is the base case, p > 1
/// additionally requires mu continuous by increasing set sequences).
BoundReport lp_bound_check(const std::function<double(double)>& f,
                           const std::string& f_name, int n,
                           const Capacity& delta, const Capacity& mu, double p,
                           int grid_cells = 2048);

/// Pointwise bound for the possibility-family operator with the concrete
/// modulus argument ((1+sqrt2) sqrt(x(1-x)) + sqrt2 sqrt(x)) / sqrt(n) + 1/n.
BoundReport possibility_pointwise_bound_check(
    const std::function<double(double)>& f, const std::string& f_name, int n,
    double x, int grid_cells = 4096, const CoefficientPlan1D* plan = nullptr,
    const ModulusTable1D* omega = nullptr);

// ---------------------------------------------------------------------------
// Improvement over the classical operators for strictly convex, strictly
// increasing f with a Dirac family plus a submodular tail capacity.

struct ImprovementReport {
  int n = 0;
  double tail_coefficient = 0.0;  // ratio of the top-index Choquet integrals
  bool classical_gap_positive = false;  // B_n(f) > f (or genuine) on interior
  bool tail_gap_negative = false;       // c_n < f(1)
  bool improvement_everywhere = false;
  double min_slack = 0.0;  // worst-case bound minus error over the grid
  bool passed = false;
  std::string detail;
};

ImprovementReport improvement_over_bernstein_check(
    const std::function<double(double)>& f, int n, const Capacity& mu,
    int grid_cells = 2048, int probe_cells = 1024);
ImprovementReport improvement_over_genuine_check(
    const std::function<double(double)>& f, int n, const Capacity& mu,
    int grid_cells = 2048, int probe_cells = 1024);

}  // namespace bdc

#endif
