#include "bdc/sampled_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bdc {

namespace {
void require_finite(const std::vector<double>& v) {
  for (double x : v)
    if (!std::isfinite(x))
      throw std::invalid_argument("sampled function values must be finite");
}
}  // namespace

SampledFunction1D SampledFunction1D::from_function(
    std::function<double(double)> f, int cells, CellMode mode) {
  if (cells < 1) throw std::invalid_argument("need at least one cell");
  SampledFunction1D s;
  s.mode_ = mode;
  const double h = 1.0 / cells;
  s.node_values_.resize(cells + 1);
  for (int i = 0; i <= cells; ++i) s.node_values_[i] = f(std::min(i * h, 1.0));
  s.cell_values_.resize(cells);
  for (int i = 0; i < cells; ++i)
    s.cell_values_[i] = mode == CellMode::Midpoint
                            ? f((i + 0.5) * h)
                            : 0.5 * (s.node_values_[i] + s.node_values_[i + 1]);
  require_finite(s.node_values_);
  require_finite(s.cell_values_);
  s.evaluator_ = std::move(f);
  return s;
}

SampledFunction1D SampledFunction1D::from_nodes(
    std::vector<double> node_values, CellMode mode) {
  if (node_values.size() < 2)
    throw std::invalid_argument("need at least two nodes");
  require_finite(node_values);
  SampledFunction1D s;
  s.mode_ = mode;
  s.node_values_ = std::move(node_values);
  const int cells = static_cast<int>(s.node_values_.size()) - 1;
  s.cell_values_.resize(cells);
  // without a callable both declared modes reduce to the node average
  for (int i = 0; i < cells; ++i)
    s.cell_values_[i] = 0.5 * (s.node_values_[i] + s.node_values_[i + 1]);
  return s;
}

SampledFunction1D SampledFunction1D::from_cell_values(
    std::vector<double> cell_values) {
  if (cell_values.empty()) throw std::invalid_argument("need at least one cell");
  require_finite(cell_values);
  SampledFunction1D s;
  s.mode_ = CellMode::Midpoint;
  s.cell_values_ = std::move(cell_values);
  const int cells = static_cast<int>(s.cell_values_.size());
  s.node_values_.resize(cells + 1);
  s.node_values_[0] = s.cell_values_.front();
  s.node_values_[cells] = s.cell_values_.back();
  for (int i = 1; i < cells; ++i)
    s.node_values_[i] = 0.5 * (s.cell_values_[i - 1] + s.cell_values_[i]);
  return s;
}

double SampledFunction1D::min_cell() const {
  return *std::min_element(cell_values_.begin(), cell_values_.end());
}

double SampledFunction1D::max_cell() const {
  return *std::max_element(cell_values_.begin(), cell_values_.end());
}

double SampledFunction1D::point_value(double t) const {
  if (evaluator_) return evaluator_(t);
  const int m = cells();
  const double u = t * m;
  int i = std::clamp(static_cast<int>(u), 0, m - 1);
  double v = cell_values_[i];
  // closed cells: boundary points see both neighbours
  if (u == std::floor(u)) {
    if (i > 0 && u == i) v = std::max(v, cell_values_[i - 1]);
  }
  return v;
}

SampledFunction1D SampledFunction1D::map(
    std::function<double(double)> op) const {
  SampledFunction1D s;
  s.mode_ = mode_;
  s.node_values_.reserve(node_values_.size());
  for (double v : node_values_) s.node_values_.push_back(op(v));
  s.cell_values_.reserve(cell_values_.size());
  for (double v : cell_values_) s.cell_values_.push_back(op(v));
  require_finite(s.node_values_);
  require_finite(s.cell_values_);
  if (evaluator_) {
    auto ev = evaluator_;
    s.evaluator_ = [ev, op](double t) { return op(ev(t)); };
  }
  return s;
}

SampledFunction1D SampledFunction1D::combine(
    const SampledFunction1D& a, const SampledFunction1D& b,
    std::function<double(double, double)> op) {
  if (a.cells() != b.cells())
    throw std::invalid_argument("grid mismatch in combine");
  SampledFunction1D s;
  s.mode_ = a.mode_;
  s.node_values_.resize(a.node_values_.size());
  for (std::size_t i = 0; i < s.node_values_.size(); ++i)
    s.node_values_[i] = op(a.node_values_[i], b.node_values_[i]);
  s.cell_values_.resize(a.cell_values_.size());
  for (std::size_t i = 0; i < s.cell_values_.size(); ++i)
    s.cell_values_[i] = op(a.cell_values_[i], b.cell_values_[i]);
  require_finite(s.node_values_);
  require_finite(s.cell_values_);
  if (a.evaluator_ && b.evaluator_) {
    auto ea = a.evaluator_, eb = b.evaluator_;
    s.evaluator_ = [ea, eb, op](double t) { return op(ea(t), eb(t)); };
  }
  return s;
}

SampledFunctionSimplex SampledFunctionSimplex::from_function(
    std::function<double(SimplexPoint)> f, int resolution) {
  SimplexGrid grid(resolution);
  SampledFunctionSimplex s;
  s.resolution_ = resolution;
  s.cell_values_.reserve(grid.cell_count());
  for (int id : grid.valid_ids()) s.cell_values_.push_back(f(grid.centroid(id)));
  require_finite(s.cell_values_);
  s.evaluator_ = std::move(f);
  return s;
}

SampledFunctionSimplex SampledFunctionSimplex::from_values(
    int resolution, std::vector<double> values) {
  SimplexGrid grid(resolution);
  if (static_cast<int>(values.size()) != grid.cell_count())
    throw std::invalid_argument("one value per valid cell required");
  require_finite(values);
  SampledFunctionSimplex s;
  s.resolution_ = resolution;
  s.cell_values_ = std::move(values);
  return s;
}

double SampledFunctionSimplex::min_cell() const {
  return *std::min_element(cell_values_.begin(), cell_values_.end());
}

double SampledFunctionSimplex::max_cell() const {
  return *std::max_element(cell_values_.begin(), cell_values_.end());
}

double SampledFunctionSimplex::point_value(const SimplexPoint& p) const {
  if (evaluator_) return evaluator_(p);
  SimplexGrid grid(resolution_);
  double best = 0.0;
  bool found = false;
  const auto& ids = grid.valid_ids();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (grid.cell_contains(ids[i], p)) {
      best = found ? std::max(best, cell_values_[i]) : cell_values_[i];
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("point outside the simplex");
  return best;
}

SampledFunctionSimplex SampledFunctionSimplex::map(
    std::function<double(double)> op) const {
  SampledFunctionSimplex s;
  s.resolution_ = resolution_;
  s.cell_values_.reserve(cell_values_.size());
  for (double v : cell_values_) s.cell_values_.push_back(op(v));
  require_finite(s.cell_values_);
  if (evaluator_) {
    auto ev = evaluator_;
    s.evaluator_ = [ev, op](SimplexPoint p) { return op(ev(p)); };
  }
  return s;
}

SampledFunctionSimplex SampledFunctionSimplex::combine(
    const SampledFunctionSimplex& a, const SampledFunctionSimplex& b,
    std::function<double(double, double)> op) {
  if (a.resolution_ != b.resolution_)
    throw std::invalid_argument("resolution mismatch in combine");
  SampledFunctionSimplex s;
  s.resolution_ = a.resolution_;
  s.cell_values_.resize(a.cell_values_.size());
  for (std::size_t i = 0; i < s.cell_values_.size(); ++i)
    s.cell_values_[i] = op(a.cell_values_[i], b.cell_values_[i]);
  require_finite(s.cell_values_);
  if (a.evaluator_ && b.evaluator_) {
    auto ea = a.evaluator_, eb = b.evaluator_;
    s.evaluator_ = [ea, eb, op](SimplexPoint p) { return op(ea(p), eb(p)); };
  }
  return s;
}

}  // namespace bdc
