#include "bdc/simplex_grid.hpp"

#include <algorithm>
#include <stdexcept>

namespace bdc {

SimplexGrid::SimplexGrid(int resolution) : n_(resolution) {
  if (resolution < 1) throw std::invalid_argument("resolution must be >= 1");
  for (int j = 0; j < n_; ++j) {
    for (int i = 0; i < n_; ++i) {
      if (i + j <= n_ - 1) valid_ids_.push_back(2 * (j * n_ + i));
      if (i + j <= n_ - 2) valid_ids_.push_back(2 * (j * n_ + i) + 1);
    }
  }
  std::sort(valid_ids_.begin(), valid_ids_.end());
}

bool SimplexGrid::is_valid_id(int id) const {
  if (id < 0 || id >= 2 * n_ * n_) return false;
  const int sq = id / 2;
  const int i = sq % n_;
  const int j = sq / n_;
  return (id % 2 == 0) ? (i + j <= n_ - 1) : (i + j <= n_ - 2);
}

SimplexPoint SimplexGrid::centroid(int id) const {
  const int sq = id / 2;
  const int i = sq % n_;
  const int j = sq / n_;
  const double d = 3.0 * n_;
  if (id % 2 == 0) return {(3.0 * i + 1.0) / d, (3.0 * j + 1.0) / d};
  return {(3.0 * i + 2.0) / d, (3.0 * j + 2.0) / d};
}

std::array<SimplexPoint, 3> SimplexGrid::vertices(int id) const {
  const int sq = id / 2;
  const int i = sq % n_;
  const int j = sq / n_;
  const double h = 1.0 / n_;
  if (id % 2 == 0)
    return {SimplexPoint{i * h, j * h}, SimplexPoint{(i + 1) * h, j * h},
            SimplexPoint{i * h, (j + 1) * h}};
  return {SimplexPoint{(i + 1) * h, j * h}, SimplexPoint{i * h, (j + 1) * h},
          SimplexPoint{(i + 1) * h, (j + 1) * h}};
}

bool SimplexGrid::cell_contains(int id, const SimplexPoint& p) const {
  const int sq = id / 2;
  const int i = sq % n_;
  const int j = sq / n_;
  const double h = 1.0 / n_;
  if (id % 2 == 0)
    return p.x1 >= i * h && p.x2 >= j * h && p.x1 + p.x2 <= (i + j + 1) * h;
  return p.x1 <= (i + 1) * h && p.x2 <= (j + 1) * h &&
         p.x1 + p.x2 >= (i + j + 1) * h;
}

SimplexCellSet SimplexCellSet::canonicalize(int resolution,
                                            std::vector<int> ids) {
  SimplexGrid grid(resolution);
  for (int id : ids)
    if (!grid.is_valid_id(id))
      throw std::invalid_argument("cell id out of range for resolution");
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  SimplexCellSet s;
  s.resolution_ = resolution;
  s.ids_ = std::move(ids);
  return s;
}

SimplexCellSet SimplexCellSet::full(int resolution) {
  SimplexGrid grid(resolution);
  SimplexCellSet s;
  s.resolution_ = resolution;
  s.ids_ = grid.valid_ids();
  return s;
}

SimplexCellSet SimplexCellSet::empty(int resolution) {
  SimplexCellSet s;
  s.resolution_ = resolution;
  return s;
}

double SimplexCellSet::area() const {
  if (resolution_ == 0) return 0.0;
  return static_cast<double>(ids_.size()) / (2.0 * resolution_ * resolution_);
}

bool SimplexCellSet::contains_id(int id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

namespace {
void require_same_resolution(const SimplexCellSet& a, const SimplexCellSet& b) {
  if (a.resolution() != b.resolution())
    throw std::invalid_argument("cell sets have different resolutions");
}
}  // namespace

SimplexCellSet set_union(const SimplexCellSet& a, const SimplexCellSet& b) {
  require_same_resolution(a, b);
  std::vector<int> out;
  std::set_union(a.ids().begin(), a.ids().end(), b.ids().begin(),
                 b.ids().end(), std::back_inserter(out));
  return SimplexCellSet::canonicalize(a.resolution(), std::move(out));
}

SimplexCellSet set_intersection(const SimplexCellSet& a,
                                const SimplexCellSet& b) {
  require_same_resolution(a, b);
  std::vector<int> out;
  std::set_intersection(a.ids().begin(), a.ids().end(), b.ids().begin(),
                        b.ids().end(), std::back_inserter(out));
  return SimplexCellSet::canonicalize(a.resolution(), std::move(out));
}

}  // namespace bdc
