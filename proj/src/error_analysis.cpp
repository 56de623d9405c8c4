#include "bdc/error_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bdc/bernstein.hpp"
#include "bdc/choquet.hpp"
#include "bdc/common.hpp"

namespace bdc {

BoundReport make_report(std::string theorem, std::string f_name,
                        std::string capacity_desc, int n, std::string x_label,
                        double x, double lhs, double rhs, double tolerance) {
  BoundReport r;
  r.theorem = std::move(theorem);
  r.f_name = std::move(f_name);
  r.capacity_desc = std::move(capacity_desc);
  r.n = n;
  r.x_label = std::move(x_label);
  r.x = x;
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = rhs - lhs;
  r.tolerance = tolerance;
  r.passed = r.margin >= -tolerance;
  return r;
}

// ---------------------------------------------------------------------------

ModulusTable1D::ModulusTable1D(const std::function<double(double)>& f,
                               int grid_cells)
    : cells_(grid_cells) {
  if (grid_cells < 1) throw std::invalid_argument("grid_cells must be >= 1");
  std::vector<double> vals(grid_cells + 1);
  for (int i = 0; i <= grid_cells; ++i)
    vals[i] = f(static_cast<double>(i) / grid_cells);
  prefix_max_.assign(grid_cells + 1, 0.0);
  for (int lag = 1; lag <= grid_cells; ++lag) {
    double best = 0.0;
    for (int i = 0; i + lag <= grid_cells; ++i)
      best = std::max(best, std::abs(vals[i + lag] - vals[i]));
    prefix_max_[lag] = std::max(prefix_max_[lag - 1], best);
  }
}

double ModulusTable1D::omega(double delta) const {
  if (!(delta >= 0.0)) throw std::invalid_argument("delta must be >= 0");
  const int lag = std::min(
      cells_, static_cast<int>(std::floor(delta * cells_ + 1e-9)));
  return prefix_max_[lag];
}

double modulus_of_continuity(const std::function<double(double)>& f,
                             double delta, int grid_cells) {
  return ModulusTable1D(f, grid_cells).omega(delta);
}

ModulusTableSimplex::ModulusTableSimplex(
    const std::function<double(SimplexPoint)>& f, int resolution,
    int buckets) {
  if (resolution < 1 || buckets < 1)
    throw std::invalid_argument("resolution and buckets must be >= 1");
  std::vector<SimplexPoint> pts;
  std::vector<double> vals;
  for (int i = 0; i <= resolution; ++i) {
    for (int j = 0; j + i <= resolution; ++j) {
      const SimplexPoint p{static_cast<double>(i) / resolution,
                           static_cast<double>(j) / resolution};
      pts.push_back(p);
      vals.push_back(f(p));
    }
  }
  bucket_width_ = std::sqrt(2.0) / buckets;
  std::vector<double> bucket_max(buckets + 1, 0.0);
  const std::size_t count = pts.size();
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = a + 1; b < count; ++b) {
      const double dx = pts[a].x1 - pts[b].x1;
      const double dy = pts[a].x2 - pts[b].x2;
      const double dist = std::sqrt(dx * dx + dy * dy);
      int idx = static_cast<int>(std::ceil(dist / bucket_width_));
      idx = std::min(idx, buckets);
      bucket_max[idx] =
          std::max(bucket_max[idx], std::abs(vals[a] - vals[b]));
    }
  }
  prefix_max_.assign(buckets + 1, 0.0);
  for (int i = 1; i <= buckets; ++i)
    prefix_max_[i] = std::max(prefix_max_[i - 1], bucket_max[i]);
}

double ModulusTableSimplex::omega(double delta) const {
  if (!(delta >= 0.0)) throw std::invalid_argument("delta must be >= 0");
  const int idx = std::min(
      static_cast<int>(prefix_max_.size()) - 1,
      static_cast<int>(std::floor(delta / bucket_width_ + 1e-12)));
  return prefix_max_[idx];
}

double modulus_of_continuity_simplex(
    const std::function<double(SimplexPoint)>& f, double delta,
    int resolution) {
  return ModulusTableSimplex(f, resolution).omega(delta);
}

// ---------------------------------------------------------------------------

WeightedDeviationSup max_weighted_deviation(int n, int k, double x) {
  if (n < 2) throw std::invalid_argument("max_weighted_deviation: n >= 2");
  if (k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
  if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("x outside [0,1]");
  WeightedDeviationSup out;
  out.discriminant =
      (n * x + k + 1.0) * (n * x + k + 1.0) - 4.0 * k * x * (n + 1.0);
  const double root = std::sqrt(out.discriminant);
  out.t1 = std::clamp((n * x + k + 1.0 - root) / (2.0 * (n + 1.0)), 0.0, 1.0);
  out.t2 = std::clamp((n * x + k + 1.0 + root) / (2.0 * (n + 1.0)), 0.0, 1.0);
  const auto weight = [n, k](double t) {
    return pow_int(t, k) * pow_int(1.0 - t, n - k);
  };
  out.sup = std::max((out.t2 - x) * weight(out.t2),
                     (x - out.t1) * weight(out.t1));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

/// Values of f at the Bernstein nodes k/m, reused across grid points.
std::vector<double> ladder_samples(const std::function<double(double)>& f,
                                   int m) {
  std::vector<double> vals(m + 1);
  for (int k = 0; k <= m; ++k) vals[k] = f(static_cast<double>(k) / m);
  return vals;
}

double bernstein_from_samples(const std::vector<double>& fvals, double x) {
  const int m = static_cast<int>(fvals.size()) - 1;
  const std::vector<double> row = bernstein_row(m, x);
  double sum = 0.0;
  for (int k = 0; k <= m; ++k) sum += row[k] * fvals[k];
  return sum;
}

double bernstein_derivative_from_samples(const std::vector<double>& fvals,
                                         double x) {
  const int m = static_cast<int>(fvals.size()) - 1;
  const std::vector<double> row = bernstein_row(m - 1, x);
  double sum = 0.0;
  for (int k = 0; k < m; ++k) sum += row[k] * (fvals[k + 1] - fvals[k]);
  return m * sum;
}

}  // namespace

double kfunctional_upper(const std::function<double(double)>& f, double t,
                         const SmoothingLadder& ladder, int grid_cells) {
  if (!(t >= 0.0)) throw std::invalid_argument("t must be >= 0");
  double best = std::numeric_limits<double>::infinity();
  for (int m : ladder.orders) {
    const std::vector<double> fvals = ladder_samples(f, m);
    double dist = 0.0, deriv = 0.0;
    for (int i = 0; i <= grid_cells; ++i) {
      const double x = static_cast<double>(i) / grid_cells;
      dist = std::max(dist, std::abs(f(x) - bernstein_from_samples(fvals, x)));
      deriv = std::max(deriv,
                       std::abs(bernstein_derivative_from_samples(fvals, x)));
    }
    best = std::min(best, dist + t * deriv);
  }
  return best;
}

double kfunctional_upper_simplex(const std::function<double(SimplexPoint)>& f,
                                 double t, const SmoothingLadder& ladder,
                                 int resolution) {
  if (!(t >= 0.0)) throw std::invalid_argument("t must be >= 0");
  double best = std::numeric_limits<double>::infinity();
  for (int m : ladder.orders) {
    if (m > 64) continue;  // multi-index count grows quadratically
    double dist = 0.0, deriv = 0.0;
    for (int i = 0; i <= resolution; ++i) {
      for (int j = 0; j + i <= resolution; ++j) {
        const SimplexPoint p{static_cast<double>(i) / resolution,
                             static_cast<double>(j) / resolution};
        dist = std::max(dist, std::abs(f(p) - bernstein_simplex(f, m, p)));
        deriv = std::max(deriv,
                         std::abs(bernstein_simplex_partial(f, m, p, 1)));
        deriv = std::max(deriv,
                         std::abs(bernstein_simplex_partial(f, m, p, 2)));
      }
    }
    best = std::min(best, dist + t * deriv);
  }
  return best;
}

std::vector<LadderCandidate> two_measure_ladder(
    const std::function<double(double)>& f, const Capacity& mu,
    const Capacity& delta, double p, const SmoothingLadder& ladder,
    int grid_cells) {
  std::vector<LadderCandidate> out;
  out.reserve(ladder.orders.size());
  for (int m : ladder.orders) {
    const std::vector<double> fvals = ladder_samples(f, m);
    const SampledFunction1D diff = SampledFunction1D::from_function(
        [&](double t) { return std::abs(f(t) - bernstein_from_samples(fvals, t)); },
        grid_cells);
    LadderCandidate c;
    c.order = m;
    c.dist_mu = lp_choquet_functional(diff, mu, p);
    c.dist_delta = lp_choquet_functional(diff, delta, p);
    double deriv = 0.0;
    for (int i = 0; i <= 2 * grid_cells; ++i) {
      const double x = static_cast<double>(i) / (2 * grid_cells);
      deriv = std::max(deriv,
                       std::abs(bernstein_derivative_from_samples(fvals, x)));
    }
    c.deriv_sup = deriv;
    out.push_back(c);
  }
  return out;
}

double two_measure_kfunctional_upper(double t,
                                     const std::vector<LadderCandidate>& c) {
  double best = std::numeric_limits<double>::infinity();
  for (const LadderCandidate& cand : c)
    best = std::min(best, cand.dist_mu + cand.dist_delta + t * cand.deriv_sup);
  return best;
}

// ---------------------------------------------------------------------------

BoundReport pointwise_modulus_bound_check(
    const std::function<double(double)>& f, const std::string& f_name, int n,
    double x, const CapacityFamily& family, int grid_cells,
    const ModulusTable1D* omega) {
  const SampledFunction1D fs = SampledFunction1D::from_function(f, grid_cells);
  const CoefficientPlan1D plan = durrmeyer_choquet_plan(fs, n, family);
  const double lhs = std::abs(plan.evaluate(x) - f(x));
  const SampledFunction1D phi = SampledFunction1D::from_function(
      [x](double t) { return std::abs(t - x); }, grid_cells);
  const double delta_arg =
      durrmeyer_choquet_plan(phi, n, family).evaluate(x);
  if (delta_arg <= 0.0)
    return make_report("thm-3.1i", f_name, family.describe(), n, "point", x,
                       lhs, 0.0, 1e-9);
  double rhs;
  if (omega) {
    rhs = 2.0 * omega->omega(delta_arg);
  } else {
    rhs = 2.0 * modulus_of_continuity(f, delta_arg, 4 * grid_cells > 8192
                                                        ? 8192
                                                        : 4 * grid_cells);
  }
  return make_report("thm-3.1i", f_name, family.describe(), n, "point", x, lhs,
                     rhs, 1e-6 * (1.0 + rhs));
}

BoundReport pointwise_modulus_bound_check_simplex(
    const std::function<double(SimplexPoint)>& f, const std::string& f_name,
    int n, SimplexPoint x, const CapacityFamily& family, int resolution,
    const ModulusTableSimplex* omega, const CoefficientPlanSimplex* plan) {
  const SampledFunctionSimplex fs =
      SampledFunctionSimplex::from_function(f, resolution);
  CoefficientPlanSimplex local_plan =
      plan ? CoefficientPlanSimplex(*plan)
           : durrmeyer_choquet_plan(fs, n, family);
  const double lhs = std::abs(local_plan.evaluate(x) - f(x));
  const SampledFunctionSimplex phi = SampledFunctionSimplex::from_function(
      [x](SimplexPoint p) {
        const double dx = p.x1 - x.x1, dy = p.x2 - x.x2;
        return std::sqrt(dx * dx + dy * dy);
      },
      resolution);
  const double delta_arg =
      durrmeyer_choquet_plan(phi, n, family).evaluate(x);
  if (delta_arg <= 0.0)
    return make_report("thm-3.1i", f_name, family.describe(), n, "point",
                       x.x1, lhs, 0.0, 1e-9);
  double rhs;
  if (omega) {
    rhs = 2.0 * omega->omega(delta_arg);
  } else {
    rhs = 2.0 * modulus_of_continuity_simplex(f, delta_arg, 4 * resolution);
  }
  return make_report("thm-3.1i", f_name, family.describe(), n, "point", x.x1,
                     lhs, rhs, 1e-6 * (1.0 + rhs));
}

double uniform_first_moment(int n, const CapacityFamily& family,
                            int grid_cells, int x_grid) {
  double sup = 0.0;
  for (int i = 0; i < x_grid; ++i) {
    const double x = static_cast<double>(i) / (x_grid - 1);
    const SampledFunction1D phi = SampledFunction1D::from_function(
        [x](double t) { return std::abs(t - x); }, grid_cells);
    sup = std::max(sup, durrmeyer_choquet_plan(phi, n, family).evaluate(x));
  }
  return sup;
}

double uniform_first_moment_simplex(int n, const CapacityFamily& family,
                                    int resolution, int x_grid) {
  double sup1 = 0.0, sup2 = 0.0;
  for (int i = 0; i < x_grid; ++i) {
    for (int j = 0; j + i < x_grid; ++j) {
      const SimplexPoint x{static_cast<double>(i) / (x_grid - 1),
                           static_cast<double>(j) / (x_grid - 1)};
      if (x.x1 + x.x2 > 1.0 + 1e-12) continue;
      const SampledFunctionSimplex phi1 = SampledFunctionSimplex::from_function(
          [x](SimplexPoint p) { return std::abs(p.x1 - x.x1); }, resolution);
      const SampledFunctionSimplex phi2 = SampledFunctionSimplex::from_function(
          [x](SimplexPoint p) { return std::abs(p.x2 - x.x2); }, resolution);
      sup1 = std::max(sup1,
                      durrmeyer_choquet_plan(phi1, n, family).evaluate(x));
      sup2 = std::max(sup2,
                      durrmeyer_choquet_plan(phi2, n, family).evaluate(x));
    }
  }
  return sup1 + sup2;
}

BoundReport uniform_kfunctional_bound_check(
    const std::function<double(double)>& f, const std::string& f_name, int n,
    const CapacityFamily& family, int grid_cells, int x_grid) {
  const SampledFunction1D fs = SampledFunction1D::from_function(f, grid_cells);
  const CoefficientPlan1D plan = durrmeyer_choquet_plan(fs, n, family);
  double lhs = 0.0;
  for (int i = 0; i < x_grid; ++i) {
    const double x = static_cast<double>(i) / (x_grid - 1);
    lhs = std::max(lhs, std::abs(plan.evaluate(x) - f(x)));
  }
  const double delta_n = uniform_first_moment(n, family, grid_cells, x_grid);
  const double rhs = 2.0 * kfunctional_upper(f, delta_n / 2.0);
  return make_report("thm-3.1ii", f_name, family.describe(), n, "uniform", 0.0,
                     lhs, rhs, 1e-8 * (1.0 + rhs));
}

BoundReport uniform_kfunctional_bound_check_simplex(
    const std::function<double(SimplexPoint)>& f, const std::string& f_name,
    int n, const CapacityFamily& family, int resolution, int x_grid) {
  const SampledFunctionSimplex fs =
      SampledFunctionSimplex::from_function(f, resolution);
  const CoefficientPlanSimplex plan = durrmeyer_choquet_plan(fs, n, family);
  double lhs = 0.0;
  for (int i = 0; i < x_grid; ++i) {
    for (int j = 0; j + i < x_grid; ++j) {
      const SimplexPoint x{static_cast<double>(i) / (x_grid - 1),
                           static_cast<double>(j) / (x_grid - 1)};
      if (x.x1 + x.x2 > 1.0 + 1e-12) continue;
      lhs = std::max(lhs, std::abs(plan.evaluate(x) - f(x)));
    }
  }
  const double delta_n =
      uniform_first_moment_simplex(n, family, resolution, x_grid);
  const double rhs = 2.0 * kfunctional_upper_simplex(f, delta_n / 2.0);
  return make_report("thm-3.1ii", f_name, family.describe(), n, "uniform",
                     0.0, lhs, rhs, 1e-8 * (1.0 + rhs));
}

BoundReport lp_bound_check(const std::function<double(double)>& f,
                           const std::string& f_name, int n,
                           const Capacity& delta, const Capacity& mu, double p,
                           int grid_cells) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp bound check requires p >= 1");
  if (p > 1.0 && !mu.flags().continuous_from_below)
    throw config_error(
        "p > 1 requires mu continuous by increasing sequences of sets");
  const std::string tag = p == 1.0 ? "thm-3.3" : "thm-3.4";
  const SampledFunction1D fs = SampledFunction1D::from_function(f, grid_cells);
  const CoefficientPlan1D plan = tail_choquet_plan(fs, n, delta, mu);

  const SampledFunction1D op = SampledFunction1D::from_function(
      [&plan](double t) { return plan.evaluate(t); }, grid_cells);
  const SampledFunction1D diff = SampledFunction1D::combine(
      fs, op, [](double a, double b) { return std::abs(a - b); });
  const double lhs = lp_choquet_functional(diff, mu, p);

  // h(x) = D(phi_x)(x) sampled at the cell midpoints
  std::vector<double> h_cells(grid_cells);
  for (int i = 0; i < grid_cells; ++i) {
    const double x = (i + 0.5) / grid_cells;
    const SampledFunction1D phi = SampledFunction1D::from_function(
        [x](double t) { return std::abs(t - x); }, grid_cells);
    h_cells[i] = tail_choquet_plan_unchecked(phi, n, delta, mu).evaluate(x);
  }
  const SampledFunction1D h =
      SampledFunction1D::from_cell_values(std::move(h_cells));
  const double t_arg = lp_choquet_functional(h, mu, p) / 2.0;

  const std::vector<LadderCandidate> ladder =
      two_measure_ladder(f, mu, delta, p, {}, grid_cells);
  const double rhs = 2.0 * two_measure_kfunctional_upper(t_arg, ladder);
  return make_report(tag, f_name,
                     "delta=" + delta.describe() + ";mu=" + mu.describe(), n,
                     "lp", p, lhs, rhs, 1e-8 * (1.0 + rhs));
}

BoundReport possibility_pointwise_bound_check(
    const std::function<double(double)>& f, const std::string& f_name, int n,
    double x, int grid_cells, const CoefficientPlan1D* plan,
    const ModulusTable1D* omega) {
  if (n < 2) throw std::invalid_argument("bound requires n >= 2");
  double value;
  if (plan) {
    value = plan->evaluate(x);
  } else {
    const SampledFunction1D fs =
        SampledFunction1D::from_function(f, grid_cells);
    value = durrmeyer_possibility_plan(fs, n).evaluate(x);
  }
  const double lhs = std::abs(value - f(x));
  const double delta_arg =
      ((1.0 + std::sqrt(2.0)) * std::sqrt(x * (1.0 - x)) +
       std::sqrt(2.0) * std::sqrt(x)) /
          std::sqrt(static_cast<double>(n)) +
      1.0 / n;
  const double rhs = omega ? 2.0 * omega->omega(delta_arg)
                           : 2.0 * modulus_of_continuity(f, delta_arg);
  return make_report("thm-4.1", f_name, "possibility-family", n, "point", x,
                     lhs, rhs, 1e-6 * (1.0 + rhs));
}

// ---------------------------------------------------------------------------

namespace {

void probe_convex_increasing(const std::function<double(double)>& f,
                             int probe_cells) {
  constexpr double kThreshold = 1e-10;
  const double h = 1.0 / probe_cells;
  std::vector<double> v(probe_cells + 1);
  for (int i = 0; i <= probe_cells; ++i) v[i] = f(i * h);
  for (int i = 0; i < probe_cells; ++i)
    if (v[i + 1] - v[i] < kThreshold)
      throw std::invalid_argument(
          "probe failed: f is not strictly increasing near x=" +
          std::to_string(i * h));
  for (int i = 1; i < probe_cells; ++i)
    if (v[i + 1] - 2.0 * v[i] + v[i - 1] < kThreshold)
      throw std::invalid_argument(
          "probe failed: f is not strictly convex near x=" +
          std::to_string(i * h));
}

ImprovementReport improvement_core(
    const std::function<double(double)>& f, int n, const Capacity& mu,
    int grid_cells, int probe_cells, bool genuine) {
  if (n < 2) throw std::invalid_argument("improvement check requires n >= 2");
  probe_convex_increasing(f, probe_cells);
  const SampledFunction1D fs = SampledFunction1D::from_function(f, grid_cells);
  ImprovementReport rep;
  rep.n = n;

  CoefficientPlan1D plan =
      genuine ? genuine_plan(fs, n,
                             CapacityFamily::genuine_constant_middle(
                                 n, Capacity::dirac(0.0), mu,
                                 Capacity::lebesgue()))
              : durrmeyer_choquet_plan(fs, n,
                                       CapacityFamily::dirac_tail(n, mu));
  rep.tail_coefficient = plan.ratios()[n];
  const double tail_gap = rep.tail_coefficient - f(1.0);
  rep.tail_gap_negative = tail_gap < 0.0;

  rep.classical_gap_positive = true;
  rep.improvement_everywhere = true;
  rep.min_slack = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= 99; ++i) {
    const double x = i / 100.0;
    const double classical = genuine ? classical_genuine(f, n, x, grid_cells)
                                     : classical_bernstein(f, n, x);
    const double gap = classical - f(x);
    if (gap <= 0.0) {
      rep.classical_gap_positive = false;
      if (rep.detail.empty())
        rep.detail = "classical gap not positive at x=" + std::to_string(x);
    }
    const double lhs = std::abs(plan.evaluate(x) - f(x));
    const double rhs = std::max(std::abs(gap), pow_int(x, n) * std::abs(tail_gap));
    rep.min_slack = std::min(rep.min_slack, rhs - lhs);
    if (!(lhs < rhs)) {
      rep.improvement_everywhere = false;
      if (rep.detail.empty())
        rep.detail = "no strict improvement at x=" + std::to_string(x);
    }
  }
  if (!rep.tail_gap_negative && rep.detail.empty())
    rep.detail = "tail coefficient does not sit below f(1)";
  rep.passed = rep.classical_gap_positive && rep.tail_gap_negative &&
               rep.improvement_everywhere;
  return rep;
}

}  // namespace

ImprovementReport improvement_over_bernstein_check(
    const std::function<double(double)>& f, int n, const Capacity& mu,
    int grid_cells, int probe_cells) {
  return improvement_core(f, n, mu, grid_cells, probe_cells, false);
}

ImprovementReport improvement_over_genuine_check(
    const std::function<double(double)>& f, int n, const Capacity& mu,
    int grid_cells, int probe_cells) {
  return improvement_core(f, n, mu, grid_cells, probe_cells, true);
}

}  // namespace bdc
