#include <random>

#include "bdc/interval_set.hpp"
#include "bdc/random_sets.hpp"
#include "bdc/simplex_grid.hpp"
#include "doctest.h"

using namespace bdc;

TEST_CASE("canonicalize merges overlaps and adjacency") {
  const IntervalSet a = IntervalSet::canonicalize({{0.3, 0.7}, {0.1, 0.4}});
  REQUIRE(a.size() == 1);
  CHECK(a.intervals()[0].lo == doctest::Approx(0.1));
  CHECK(a.intervals()[0].hi == doctest::Approx(0.7));

  const IntervalSet u = set_union(IntervalSet::canonicalize({{0.0, 0.5}}),
                                  IntervalSet::canonicalize({{0.5, 1.0}}));
  REQUIRE(u.size() == 1);
  CHECK(u.intervals()[0].lo == 0.0);
  CHECK(u.intervals()[0].hi == 1.0);
}

TEST_CASE("intersection of disjoint intervals is empty") {
  const IntervalSet a = IntervalSet::canonicalize({{0.0, 0.5}});
  const IntervalSet b = IntervalSet::canonicalize({{0.6, 1.0}});
  CHECK(set_intersection(a, b).is_empty());
  // touching closed intervals intersect in a single point
  const IntervalSet c = IntervalSet::canonicalize({{0.5, 1.0}});
  const IntervalSet pt = set_intersection(a, c);
  REQUIRE(pt.size() == 1);
  CHECK(pt.intervals()[0].lo == 0.5);
  CHECK(pt.intervals()[0].hi == 0.5);
  CHECK(pt.total_length() == 0.0);
}

TEST_CASE("canonicalize rejects invalid intervals") {
  CHECK_THROWS_AS(IntervalSet::canonicalize({{0.7, 0.3}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(IntervalSet::canonicalize({{-0.1, 0.3}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(IntervalSet::canonicalize({{0.5, 1.2}}),
                  std::invalid_argument);
}

TEST_CASE("contains and total_length") {
  const IntervalSet a = IntervalSet::canonicalize({{0.1, 0.2}, {0.5, 0.9}});
  CHECK(a.contains(0.1));
  CHECK(a.contains(0.15));
  CHECK(a.contains(0.9));
  CHECK_FALSE(a.contains(0.3));
  CHECK_FALSE(a.contains(0.95));
  CHECK(a.total_length() == doctest::Approx(0.5));
}

TEST_CASE("canonicalize is idempotent and set ops stay canonical") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const IntervalSet a = random_interval_set(rng, 4);
    const IntervalSet b = random_interval_set(rng, 4);
    const IntervalSet again = IntervalSet::canonicalize(
        std::vector<Interval>(a.intervals().begin(), a.intervals().end()));
    CHECK(again == a);
    for (const IntervalSet& s : {set_union(a, b), set_intersection(a, b)}) {
      for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        CHECK(s.intervals()[i].hi < s.intervals()[i + 1].lo);
        CHECK(s.intervals()[i].lo <= s.intervals()[i].hi);
      }
    }
    // union length >= both, intersection <= both
    CHECK(set_union(a, b).total_length() >= a.total_length() - 1e-15);
    CHECK(set_intersection(a, b).total_length() <= a.total_length() + 1e-15);
  }
}

TEST_CASE("simplex grid geometry") {
  const SimplexGrid grid(4);
  CHECK(grid.cell_count() == 16);  // N^2 triangles inside the simplex
  CHECK(grid.cell_area() == doctest::Approx(1.0 / 32.0));
  double area = 0.0;
  for (int id : grid.valid_ids()) {
    (void)id;
    area += grid.cell_area();
  }
  CHECK(area == doctest::Approx(0.5));  // area of the standard 2-simplex

  for (int id : grid.valid_ids()) {
    const SimplexPoint c = grid.centroid(id);
    CHECK(grid.cell_contains(id, c));
    CHECK(c.x1 + c.x2 <= 1.0 + 1e-12);
    for (const SimplexPoint& v : grid.vertices(id)) {
      CHECK(v.x1 + v.x2 <= 1.0 + 1e-12);
      CHECK(grid.cell_contains(id, v));
    }
  }
}

TEST_CASE("simplex cell sets: canonical form and set operations") {
  const SimplexCellSet a = SimplexCellSet::canonicalize(4, {6, 0, 2, 2});
  CHECK(a.ids() == std::vector<int>{0, 2, 6});
  CHECK(a.area() == doctest::Approx(3.0 / 32.0));
  CHECK_THROWS_AS(SimplexCellSet::canonicalize(2, {7}), std::invalid_argument);

  const SimplexCellSet b = SimplexCellSet::canonicalize(4, {2, 8});
  CHECK(set_union(a, b).ids() == std::vector<int>{0, 2, 6, 8});
  CHECK(set_intersection(a, b).ids() == std::vector<int>{2});
  CHECK_THROWS_AS(set_union(a, SimplexCellSet::full(8)),
                  std::invalid_argument);

  CHECK(SimplexCellSet::full(8).area() == doctest::Approx(0.5));
  CHECK(SimplexCellSet::empty(8).area() == 0.0);
}
