#ifndef BDC_SIMPLEX_GRID_HPP
#define BDC_SIMPLEX_GRID_HPP

#include <array>
#include <vector>

namespace bdc {

/// Point of the standard 2-simplex {x1, x2 >= 0, x1 + x2 <= 1}.
struct SimplexPoint {
  double x1 = 0.0;
  double x2 = 0.0;
};

/// Uniform triangulation of the standard 2-simplex with N subdivisions per
/// edge.  Each grid square (i,j), i,j in [0,N), splits into an "up" triangle
/// (id 2*(j*N+i)) and a "down" triangle (id 2*(j*N+i)+1); ids are valid only
/// where the triangle lies inside the simplex, which leaves N^2 cells of
/// area 1/(2 N^2) each.
class SimplexGrid {
 public:
  explicit SimplexGrid(int resolution);

  int resolution() const { return n_; }
  int cell_count() const { return static_cast<int>(valid_ids_.size()); }
  const std::vector<int>& valid_ids() const { return valid_ids_; }
  double cell_area() const { return 1.0 / (2.0 * n_ * n_); }

  bool is_valid_id(int id) const;
  SimplexPoint centroid(int id) const;
  std::array<SimplexPoint, 3> vertices(int id) const;
  /// Closed-cell membership (points on shared edges belong to both cells).
  bool cell_contains(int id, const SimplexPoint& p) const;

 private:
  int n_;
  std::vector<int> valid_ids_;
};

/// Canonical set of triangle cells: sorted unique valid ids at a fixed
/// resolution.
class SimplexCellSet {
 public:
  SimplexCellSet() = default;

  static SimplexCellSet canonicalize(int resolution, std::vector<int> ids);
  static SimplexCellSet full(int resolution);
  static SimplexCellSet empty(int resolution);

  int resolution() const { return resolution_; }
  const std::vector<int>& ids() const { return ids_; }
  bool is_empty() const { return ids_.empty(); }
  double area() const;
  bool contains_id(int id) const;

  bool operator==(const SimplexCellSet& other) const = default;

 private:
  int resolution_ = 0;
  std::vector<int> ids_;
};

SimplexCellSet set_union(const SimplexCellSet& a, const SimplexCellSet& b);
SimplexCellSet set_intersection(const SimplexCellSet& a,
                                const SimplexCellSet& b);

}  // namespace bdc

#endif
