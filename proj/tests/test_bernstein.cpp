#include <cmath>

#include "bdc/bernstein.hpp"
#include "bdc/common.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bdc;

TEST_CASE("multi-index enumeration") {
  const auto d1 = enumerate_multi_indices(1, 1);
  REQUIRE(d1.size() == 2);
  CHECK(d1[0] == std::vector<int>{0, 1});
  CHECK(d1[1] == std::vector<int>{1, 0});
  CHECK(enumerate_multi_indices(5, 1).size() == 6);
  CHECK(enumerate_multi_indices(2, 2).size() == 6);  // C(4,2)
  CHECK(enumerate_multi_indices(8, 2).size() == 45);
  for (const auto& alpha : enumerate_multi_indices(4, 2))
    CHECK(alpha[0] + alpha[1] + alpha[2] == 4);
  CHECK_THROWS_AS(enumerate_multi_indices(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_multi_indices(0, 1), std::invalid_argument);
}

TEST_CASE("1d basis values and partition of unity") {
  CHECK(bernstein_basis_1d(2, 1, 0.5) == doctest::Approx(0.5));
  CHECK(bernstein_basis_1d(3, 0, 0.0) == 1.0);
  CHECK(bernstein_basis_1d(3, 3, 1.0) == 1.0);
  CHECK(bernstein_basis_1d(3, 1, 0.0) == 0.0);
  CHECK_THROWS_AS(bernstein_basis_1d(3, 4, 0.5), std::invalid_argument);

  for (const int n : {10, 64, 256}) {
    for (int i = 0; i <= 100; ++i) {
      const double x = i / 100.0;
      const std::vector<double> row = bernstein_row(n, x);
      double sum = 0.0;
      for (const double v : row) {
        CHECK(v >= 0.0);
        sum += v;
      }
      CHECK(std::abs(sum - 1.0) < 1e-12);
    }
  }
  // the recurrence row matches the direct form, including above n = 50
  for (const int n : {12, 80}) {
    const std::vector<double> row = bernstein_row(n, 0.3);
    for (int k = 0; k <= n; ++k)
      CHECK(row[k] == doctest::Approx(bernstein_basis_1d(n, k, 0.3))
                          .epsilon(1e-11));
  }
}

TEST_CASE("simplex basis") {
  // alpha = (1,1,0), x = (0.2, 0.3): 2 * 0.5 * 0.2
  const SimplexBasisValue v = simplex_basis({1, 1, 0}, {0.2, 0.3});
  CHECK(v.weighted == doctest::Approx(0.2));
  CHECK(v.plain == doctest::Approx(0.1));

  for (const int n : {2, 4, 8}) {
    for (const auto& x :
         {SimplexPoint{0.1, 0.2}, SimplexPoint{0.5, 0.5}, SimplexPoint{0, 0}}) {
      double sum = 0.0;
      for (const auto& alpha : enumerate_multi_indices(n, 2)) {
        const SimplexBasisValue b = simplex_basis(alpha, x);
        CHECK(b.weighted >= 0.0);
        sum += b.weighted;
      }
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("classical Bernstein operator") {
  const auto e1 = [](double t) { return t; };
  const auto sq = [](double t) { return t * t; };
  CHECK(classical_bernstein(e1, 5, 0.3) == doctest::Approx(0.3).epsilon(1e-14));
  // B_n(t^2) = x^2 + x(1-x)/n
  CHECK(classical_bernstein(sq, 2, 0.5) == doctest::Approx(0.375));
  for (const int n : {3, 9})
    for (int i = 0; i <= 10; ++i) {
      const double x = i / 10.0;
      CHECK(classical_bernstein(sq, n, x) ==
            doctest::Approx(x * x + x * (1 - x) / n).epsilon(1e-12));
    }
  CHECK(classical_bernstein([](double) { return 3.25; }, 7, 0.42) ==
        doctest::Approx(3.25).epsilon(1e-14));

  // convex functions lie below their Bernstein polynomial on (0,1)
  const auto convex = [](double t) { return std::exp(2.0 * t); };
  for (int i = 1; i < 20; ++i) {
    const double x = i / 20.0;
    CHECK(classical_bernstein(convex, 6, x) >= convex(x) - 1e-12);
  }
}

TEST_CASE("Bernstein derivative formula") {
  const auto sq = [](double t) { return t * t; };
  for (const int m : {4, 16}) {
    for (int i = 0; i <= 8; ++i) {
      const double x = i / 8.0;
      // d/dx [x^2 + x(1-x)/m] = 2x + (1-2x)/m
      CHECK(bernstein_derivative(sq, m, x) ==
            doctest::Approx(2 * x + (1 - 2 * x) / m).epsilon(1e-10));
    }
  }
}

TEST_CASE("classical genuine operator") {
  const auto e1 = [](double t) { return t; };
  CHECK(classical_genuine([](double) { return 1.0; }, 4, 0.3) ==
        doctest::Approx(1.0).epsilon(1e-14));
  // reproduces linear functions (up to the quadrature grid)
  CHECK(classical_genuine(e1, 4, 0.25) == doctest::Approx(0.25).epsilon(1e-6));
  for (int i = 0; i <= 10; ++i)
    CHECK(classical_genuine(e1, 6, i / 10.0) ==
          doctest::Approx(i / 10.0).epsilon(1e-6));
  // interpolates the endpoints exactly
  const auto sq = [](double t) { return t * t; };
  CHECK(classical_genuine(sq, 5, 0.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(classical_genuine(sq, 5, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(classical_genuine(e1, 1, 0.5), std::invalid_argument);
}

TEST_CASE("Borel-measure Durrmeyer operator") {
  const auto one = [](double) { return 1.0; };
  const auto e1 = [](double t) { return t; };
  CHECK(durrmeyer_borel(one, 4, 0.3, Capacity::lebesgue()) ==
        doctest::Approx(1.0).epsilon(1e-14));
  // classical first-moment identity: M_n(e1)(x) = (n x + 1)/(n + 2); the
  // coefficient oracle is the beta-ratio (k+1)/(n+2)
  for (const int n : {2, 8}) {
    for (int i = 0; i <= 10; ++i) {
      const double x = i / 10.0;
      CHECK(durrmeyer_borel(e1, n, x, Capacity::lebesgue()) ==
            doctest::Approx((n * x + 1.0) / (n + 2.0)).epsilon(1e-6));
    }
  }
  // scaling the measure cancels in the ratios
  CHECK(durrmeyer_borel(e1, 4, 0.3,
                        Capacity::scaled(Capacity::lebesgue(), 0.25)) ==
        doctest::Approx(durrmeyer_borel(e1, 4, 0.3, Capacity::lebesgue()))
            .epsilon(1e-13));
  // a Dirac mass is additive but not strictly positive: the k = n weight
  // vanishes at the atom
  CHECK_THROWS_AS(durrmeyer_borel(e1, 3, 0.5, Capacity::dirac(0.0)),
                  strict_positivity_error);
  CHECK_THROWS_AS(
      durrmeyer_borel(e1, 3, 0.5,
                      Capacity::distorted_lebesgue(Distortion::sqrt())),
      std::invalid_argument);
}

TEST_CASE("simplex Bernstein smoothing") {
  const auto linear = [](SimplexPoint p) { return 1.0 + p.x1 + 2.0 * p.x2; };
  for (const auto& x : {SimplexPoint{0.2, 0.3}, SimplexPoint{0.0, 0.9}}) {
    CHECK(bernstein_simplex(linear, 6, x) ==
          doctest::Approx(linear(x)).epsilon(1e-12));
    CHECK(bernstein_simplex_partial(linear, 6, x, 1) ==
          doctest::Approx(1.0).epsilon(1e-10));
    CHECK(bernstein_simplex_partial(linear, 6, x, 2) ==
          doctest::Approx(2.0).epsilon(1e-10));
  }
  CHECK_THROWS_AS(bernstein_simplex_partial(linear, 6, {0.2, 0.2}, 3),
                  std::invalid_argument);
}
