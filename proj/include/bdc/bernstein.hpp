#ifndef BDC_BERNSTEIN_HPP
#define BDC_BERNSTEIN_HPP

#include <functional>
#include <vector>

#include "bdc/capacity.hpp"
#include "bdc/simplex_grid.hpp"

namespace bdc {

/// All multi-indices alpha = (a0, ..., ad) with |alpha| = n, lexicographic.
/// Supported dimensions: d = 1 (interval) and d = 2 (simplex).
std::vector<std::vector<int>> enumerate_multi_indices(int n, int d);

/// p_{n,k}(x) = C(n,k) x^k (1-x)^(n-k), 0^0 = 1; log-space above n = 50.
double bernstein_basis_1d(int n, int k, double x);

/// All of p_{n,0..n}(x) via the stable ratio recurrence, O(n).
std::vector<double> bernstein_row(int n, double x);

struct SimplexBasisValue {
  double weighted = 0.0;  // B_alpha = multinomial * P_alpha
  double plain = 0.0;     // P_alpha
};
SimplexBasisValue simplex_basis(const std::vector<int>& alpha, SimplexPoint x);

/// Classical Bernstein polynomial  sum p_{n,k}(x) f(k/n).
double classical_bernstein(const std::function<double(double)>& f, int n,
                           double x);
/// Derivative of the Bernstein polynomial of order m (exact formula).
double bernstein_derivative(const std::function<double(double)>& f, int m,
                            double x);

/// Classical genuine Bernstein-Durrmeyer operator: interpolates f at the
/// endpoints, Durrmeyer-type middle coefficients against Lebesgue measure
/// (composite midpoint quadrature on the given grid).
double classical_genuine(const std::function<double(double)>& f, int n,
                         double x, int grid_cells = 2048);

/// Bernstein-Durrmeyer operator with ratio-of-integrals coefficients against
/// an additive, strictly positive Borel measure.
double durrmeyer_borel(const std::function<double(double)>& f, int n, double x,
                       const Capacity& delta, int grid_cells = 2048);

/// Bernstein polynomial on the 2-simplex and its partial derivatives,
/// used for the K-functional smoothing ladder.
double bernstein_simplex(const std::function<double(SimplexPoint)>& f, int m,
                         SimplexPoint x);
double bernstein_simplex_partial(const std::function<double(SimplexPoint)>& f,
                                 int m, SimplexPoint x, int coordinate);

}  // namespace bdc

#endif
