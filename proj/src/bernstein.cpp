#include "bdc/bernstein.hpp"

#include <cmath>
#include <stdexcept>

#include "bdc/common.hpp"
#include "bdc/choquet.hpp"
#include "bdc/sampled_function.hpp"

namespace bdc {

std::vector<std::vector<int>> enumerate_multi_indices(int n, int d) {
  if (n < 1) throw std::invalid_argument("multi-index degree must be >= 1");
  if (d != 1 && d != 2)
    throw std::invalid_argument("only d = 1 and d = 2 are supported");
  std::vector<std::vector<int>> out;
  if (d == 1) {
    for (int a0 = 0; a0 <= n; ++a0) out.push_back({a0, n - a0});
  } else {
    for (int a0 = 0; a0 <= n; ++a0)
      for (int a1 = 0; a1 <= n - a0; ++a1) out.push_back({a0, a1, n - a0 - a1});
  }
  return out;
}

namespace {

double log_factorial(int n) { return std::lgamma(n + 1.0); }

double binomial_exact(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

double bernstein_basis_1d(int n, int k, double x) {
  if (n < 0 || k < 0 || k > n)
    throw std::invalid_argument("bernstein basis requires 0 <= k <= n");
  if (x == 0.0) return k == 0 ? 1.0 : 0.0;
  if (x == 1.0) return k == n ? 1.0 : 0.0;
  if (n <= 50)
    return binomial_exact(n, k) * pow_int(x, k) * pow_int(1.0 - x, n - k);
  const double lg = log_factorial(n) - log_factorial(k) - log_factorial(n - k) +
                    k * std::log(x) + (n - k) * std::log1p(-x);
  return std::exp(lg);
}

std::vector<double> bernstein_row(int n, double x) {
  std::vector<double> row(n + 1, 0.0);
  if (x == 0.0) {
    row[0] = 1.0;
    return row;
  }
  if (x == 1.0) {
    row[n] = 1.0;
    return row;
  }
  // ratio recurrence from the larger of the two ends to stay in range
  if (n <= 50) {
    double p = pow_int(1.0 - x, n);
    for (int k = 0; k <= n; ++k) {
      row[k] = p;
      if (k < n) p *= (static_cast<double>(n - k) / (k + 1)) * (x / (1.0 - x));
    }
  } else {
    for (int k = 0; k <= n; ++k) row[k] = bernstein_basis_1d(n, k, x);
  }
  return row;
}

SimplexBasisValue simplex_basis(const std::vector<int>& alpha, SimplexPoint x) {
  if (alpha.size() != 3)
    throw std::invalid_argument("simplex basis expects alpha of length 3");
  for (int a : alpha)
    if (a < 0) throw std::invalid_argument("multi-index entries must be >= 0");
  const int n = alpha[0] + alpha[1] + alpha[2];
  const double x0 = 1.0 - x.x1 - x.x2;
  SimplexBasisValue v;
  v.plain = pow_int(x0, alpha[0]) * pow_int(x.x1, alpha[1]) *
            pow_int(x.x2, alpha[2]);
  if (n <= 50) {
    double multinomial = 1.0;
    int used = 0;
    for (int j = 1; j < 3; ++j)
      for (int i = 1; i <= alpha[j]; ++i) multinomial *= double(++used + alpha[0]) / i;
    v.weighted = multinomial * v.plain;
  } else {
    const double lg = log_factorial(n) - log_factorial(alpha[0]) -
                      log_factorial(alpha[1]) - log_factorial(alpha[2]);
    v.weighted = std::exp(lg) * v.plain;
  }
  return v;
}

double classical_bernstein(const std::function<double(double)>& f, int n,
                           double x) {
  const std::vector<double> row = bernstein_row(n, x);
  double sum = 0.0;
  for (int k = 0; k <= n; ++k)
    sum += row[k] * f(static_cast<double>(k) / n);
  return sum;
}

double bernstein_derivative(const std::function<double(double)>& f, int m,
                            double x) {
  if (m < 1) throw std::invalid_argument("derivative needs order >= 1");
  const std::vector<double> row = bernstein_row(m - 1, x);
  double sum = 0.0;
  for (int k = 0; k < m; ++k)
    sum += row[k] * (f(static_cast<double>(k + 1) / m) -
                     f(static_cast<double>(k) / m));
  return m * sum;
}

double classical_genuine(const std::function<double(double)>& f, int n,
                         double x, int grid_cells) {
  if (n < 2) throw std::invalid_argument("genuine operator needs n >= 2");
  const std::vector<double> row = bernstein_row(n, x);
  double sum = row[0] * f(0.0) + row[n] * f(1.0);
  const Capacity leb = Capacity::lebesgue();
  const SampledFunction1D fs = SampledFunction1D::from_function(f, grid_cells);
  for (int k = 1; k <= n - 1; ++k) {
    const int a = k - 1, b = n - 1 - k;
    const SampledFunction1D w = SampledFunction1D::from_function(
        [a, b](double t) { return pow_int(t, a) * pow_int(1.0 - t, b); },
        grid_cells);
    const SampledFunction1D fw = SampledFunction1D::combine(
        fs, w, [](double u, double v) { return u * v; });
    const double den = ordinary_integral(w, IntervalSet::full(), leb);
    const double num = ordinary_integral(fw, IntervalSet::full(), leb);
    sum += row[k] * (num / den);
  }
  return sum;
}

double durrmeyer_borel(const std::function<double(double)>& f, int n, double x,
                       const Capacity& delta, int grid_cells) {
  if (!delta.flags().additive)
    throw std::invalid_argument("durrmeyer_borel requires an additive measure");
  const std::vector<double> row = bernstein_row(n, x);
  const SampledFunction1D fs = SampledFunction1D::from_function(f, grid_cells);
  double sum = 0.0;
  for (int k = 0; k <= n; ++k) {
    const int a = k, b = n - k;
    const auto weight = [a, b](double t) {
      return pow_int(t, a) * pow_int(1.0 - t, b);
    };
    double num, den, scale;
    if (delta.kind() == CapacityKind::Dirac) {
      // integrals against an atom are point evaluations
      const double t0 = delta.dirac_point();
      den = weight(t0);
      num = f(t0) * den;
      scale = bump_peak_value(n, k);
    } else {
      const SampledFunction1D w =
          SampledFunction1D::from_function(weight, grid_cells);
      const SampledFunction1D fw = SampledFunction1D::combine(
          fs, w, [](double u, double v) { return u * v; });
      den = ordinary_integral(w, IntervalSet::full(), delta);
      num = ordinary_integral(fw, IntervalSet::full(), delta);
      scale = w.max_cell();
    }
    if (den <= 1e-14 * scale)
      throw strict_positivity_error(
          "durrmeyer_borel: vanishing denominator at k=" + std::to_string(k) +
          " for " + delta.describe());
    sum += row[k] * (num / den);
  }
  return sum;
}

double bernstein_simplex(const std::function<double(SimplexPoint)>& f, int m,
                         SimplexPoint x) {
  double sum = 0.0;
  for (const auto& alpha : enumerate_multi_indices(m, 2)) {
    const SimplexBasisValue b = simplex_basis(alpha, x);
    sum += b.weighted * f({static_cast<double>(alpha[1]) / m,
                           static_cast<double>(alpha[2]) / m});
  }
  return sum;
}

double bernstein_simplex_partial(const std::function<double(SimplexPoint)>& f,
                                 int m, SimplexPoint x, int coordinate) {
  if (coordinate != 1 && coordinate != 2)
    throw std::invalid_argument("coordinate must be 1 or 2");
  if (m < 1) throw std::invalid_argument("derivative needs order >= 1");
  double sum = 0.0;
  for (const auto& beta : enumerate_multi_indices(m - 1, 2)) {
    const SimplexBasisValue b = simplex_basis(beta, x);
    const double b1 = beta[1], b2 = beta[2];
    const SimplexPoint shifted{coordinate == 1 ? (b1 + 1.0) / m : b1 / m,
                               coordinate == 2 ? (b2 + 1.0) / m : b2 / m};
    const SimplexPoint base{b1 / m, b2 / m};
    sum += b.weighted * (f(shifted) - f(base));
  }
  return m * sum;
}

}  // namespace bdc
