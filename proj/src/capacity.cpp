#include "bdc/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bdc/common.hpp"

namespace bdc {

Distortion Distortion::power(double p) {
  if (!(p > 0.0 && p <= 1.0))
    throw std::invalid_argument("power distortion requires 0 < p <= 1");
  return Distortion(Kind::Power, p);
}

double Distortion::apply(double u) const {
  switch (kind_) {
    case Kind::Sqrt:
      return std::sqrt(u);
    case Kind::Sin:
      return std::sin(u);
    case Kind::Power:
      return std::pow(u, p_);
    case Kind::Identity:
      return u;
  }
  return u;
}

bool Distortion::preserves_one() const { return kind_ != Kind::Sin; }

std::string Distortion::describe() const {
  switch (kind_) {
    case Kind::Sqrt:
      return "sqrt";
    case Kind::Sin:
      return "sin";
    case Kind::Power:
      return "power(" + std::to_string(p_) + ")";
    case Kind::Identity:
      return "identity";
  }
  return "?";
}

double bump_peak_value(int n, int k) {
  if (n < 1 || k < 0 || k > n)
    throw std::invalid_argument("bump_peak_value: need 0 <= k <= n, n >= 1");
  if (k == 0 || k == n) return 1.0;
  return std::exp(k * std::log(static_cast<double>(k) / n) +
                  (n - k) * std::log(static_cast<double>(n - k) / n));
}

UnimodalDistribution UnimodalDistribution::bernstein_bump(int n, int k) {
  UnimodalDistribution d;
  d.n_ = n;
  d.k_ = k;
  d.peak_ = bump_peak_value(n, k);
  return d;
}

UnimodalDistribution UnimodalDistribution::tabulated(
    std::vector<double> node_values) {
  if (node_values.size() < 2)
    throw std::invalid_argument("tabulated distribution needs >= 2 nodes");
  double mx = 0.0;
  for (double v : node_values) {
    if (!(v >= 0.0 && v <= 1.0))
      throw std::invalid_argument("tabulated values must lie in [0,1]");
    mx = std::max(mx, v);
  }
  if (std::abs(mx - 1.0) > 1e-12)
    throw std::invalid_argument("tabulated distribution must have sup 1");
  UnimodalDistribution d;
  d.tabulated_ = std::move(node_values);
  return d;
}

double UnimodalDistribution::value(double t) const {
  if (is_bump()) {
    // 0^0 = 1 convention: endpoints of the index range drop their factor
    double v = 1.0;
    if (k_ > 0) v *= pow_int(t, k_);
    if (n_ - k_ > 0) v *= pow_int(1.0 - t, n_ - k_);
    return v / peak_;
  }
  const std::size_t cells = tabulated_.size() - 1;
  double u = std::clamp(t, 0.0, 1.0) * static_cast<double>(cells);
  std::size_t i = std::min(static_cast<std::size_t>(u), cells - 1);
  const double frac = u - static_cast<double>(i);
  return tabulated_[i] + frac * (tabulated_[i + 1] - tabulated_[i]);
}

double UnimodalDistribution::mode() const {
  if (is_bump()) return static_cast<double>(k_) / n_;
  std::size_t best = 0;
  for (std::size_t i = 1; i < tabulated_.size(); ++i)
    if (tabulated_[i] > tabulated_[best]) best = i;
  return static_cast<double>(best) / static_cast<double>(tabulated_.size() - 1);
}

double UnimodalDistribution::sup_on(double lo, double hi) const {
  if (is_bump()) return value(std::clamp(mode(), lo, hi));
  // piecewise linear: max over the clamped endpoints and interior nodes
  double best = std::max(value(lo), value(hi));
  const std::size_t cells = tabulated_.size() - 1;
  const auto first =
      static_cast<std::size_t>(std::ceil(lo * static_cast<double>(cells)));
  for (std::size_t i = first; i < tabulated_.size(); ++i) {
    const double node = static_cast<double>(i) / static_cast<double>(cells);
    if (node > hi) break;
    best = std::max(best, tabulated_[i]);
  }
  return best;
}

bool UnimodalDistribution::strictly_positive_interior() const {
  if (is_bump()) return true;  // bump is positive on (0,1)
  for (std::size_t i = 1; i + 1 < tabulated_.size(); ++i)
    if (tabulated_[i] <= 0.0) return false;
  return true;
}

std::string UnimodalDistribution::describe() const {
  if (is_bump())
    return "bump(" + std::to_string(n_) + "," + std::to_string(k_) + ")";
  return "tabulated(" + std::to_string(tabulated_.size()) + ")";
}

Capacity Capacity::distorted_lebesgue(Distortion gamma) {
  Capacity c;
  c.kind_ = CapacityKind::DistortedLebesgue;
  c.gamma_ = std::make_shared<Distortion>(gamma);
  c.flags_.monotone = true;
  c.flags_.submodular = gamma.is_concave();
  c.flags_.additive = gamma.kind() == Distortion::Kind::Identity;
  c.flags_.normalized = gamma.preserves_one();
  c.flags_.strictly_positive = true;
  c.flags_.continuous_from_below = true;
  return c;
}

Capacity Capacity::possibility(UnimodalDistribution lambda) {
  Capacity c;
  c.kind_ = CapacityKind::Possibility;
  const bool sp = lambda.strictly_positive_interior();
  c.lambda_ = std::make_shared<UnimodalDistribution>(std::move(lambda));
  c.flags_.monotone = true;
  c.flags_.submodular = true;
  c.flags_.additive = false;
  c.flags_.normalized = true;
  c.flags_.strictly_positive = sp;
  c.flags_.continuous_from_below = true;
  return c;
}

Capacity Capacity::possibility_simplex(int resolution,
                                       std::vector<double> cell_sups) {
  SimplexGrid grid(resolution);
  if (static_cast<int>(cell_sups.size()) != grid.cell_count())
    throw std::invalid_argument("one supremum per valid cell required");
  double mx = 0.0;
  bool sp = true;
  for (double v : cell_sups) {
    if (!(v >= 0.0 && v <= 1.0))
      throw std::invalid_argument("cell suprema must lie in [0,1]");
    mx = std::max(mx, v);
    sp = sp && v > 0.0;
  }
  if (std::abs(mx - 1.0) > 1e-12)
    throw std::invalid_argument("possibility distribution must have sup 1");
  Capacity c;
  c.kind_ = CapacityKind::Possibility;
  c.possibility_resolution_ = resolution;
  c.cell_sups_ =
      std::make_shared<const std::vector<double>>(std::move(cell_sups));
  std::vector<int> id_to_index(2 * resolution * resolution, -1);
  const auto& ids = grid.valid_ids();
  for (std::size_t i = 0; i < ids.size(); ++i)
    id_to_index[ids[i]] = static_cast<int>(i);
  c.id_to_index_ =
      std::make_shared<const std::vector<int>>(std::move(id_to_index));
  c.flags_.monotone = true;
  c.flags_.submodular = true;
  c.flags_.normalized = true;
  c.flags_.strictly_positive = sp;
  return c;
}

Capacity Capacity::dirac(double point) {
  if (!(point >= 0.0 && point <= 1.0))
    throw std::invalid_argument("dirac point must lie in [0,1]");
  Capacity c;
  c.kind_ = CapacityKind::Dirac;
  c.point_ = point;
  c.flags_.monotone = true;
  c.flags_.submodular = true;
  c.flags_.additive = true;
  c.flags_.normalized = true;
  c.flags_.strictly_positive = false;
  return c;
}

Capacity Capacity::dirac_simplex(SimplexPoint point) {
  if (!(point.x1 >= 0.0 && point.x2 >= 0.0 && point.x1 + point.x2 <= 1.0))
    throw std::invalid_argument("dirac point must lie in the simplex");
  Capacity c;
  c.kind_ = CapacityKind::Dirac;
  c.simplex_point_ = point;
  c.dirac_on_simplex_ = true;
  c.flags_.monotone = true;
  c.flags_.submodular = true;
  c.flags_.additive = true;
  c.flags_.normalized = true;
  c.flags_.strictly_positive = false;
  return c;
}

Capacity Capacity::lebesgue() {
  Capacity c;
  c.kind_ = CapacityKind::LebesgueBorel;
  c.flags_.monotone = true;
  c.flags_.submodular = true;
  c.flags_.additive = true;
  c.flags_.normalized = true;
  c.flags_.strictly_positive = true;
  return c;
}

Capacity Capacity::scaled(Capacity base, double factor) {
  if (!(factor >= 0.0))
    throw std::invalid_argument("scale factor must be >= 0");
  Capacity c;
  c.kind_ = CapacityKind::Scaled;
  c.factor_ = factor;
  c.flags_ = base.flags_;
  c.flags_.normalized = base.flags_.normalized && factor == 1.0;
  c.flags_.strictly_positive = base.flags_.strictly_positive && factor > 0.0;
  c.base_ = std::make_shared<const Capacity>(std::move(base));
  return c;
}

const Distortion& Capacity::distortion() const {
  if (!gamma_) throw std::logic_error("capacity has no distortion");
  return *gamma_;
}

const UnimodalDistribution& Capacity::distribution() const {
  if (!lambda_) throw std::logic_error("capacity has no distribution");
  return *lambda_;
}

const std::vector<double>& Capacity::simplex_possibility_table() const {
  if (!cell_sups_)
    throw std::logic_error("capacity has no simplex possibility table");
  return *cell_sups_;
}

bool Capacity::is_simplex_only() const {
  if (kind_ == CapacityKind::Possibility) return lambda_ == nullptr;
  if (kind_ == CapacityKind::Dirac) return dirac_on_simplex_;
  if (kind_ == CapacityKind::Scaled) return base_->is_simplex_only();
  return false;
}

double Capacity::measure(const IntervalSet& a) const {
  switch (kind_) {
    case CapacityKind::DistortedLebesgue:
      return gamma_->apply(a.total_length());
    case CapacityKind::Possibility: {
      if (!lambda_)
        throw std::invalid_argument(
            "simplex possibility measure applied to an interval set");
      double best = 0.0;
      for (const Interval& iv : a.intervals())
        best = std::max(best, lambda_->sup_on(iv.lo, iv.hi));
      return best;
    }
    case CapacityKind::Dirac:
      if (dirac_on_simplex_)
        throw std::invalid_argument(
            "simplex dirac measure applied to an interval set");
      return a.contains(point_) ? 1.0 : 0.0;
    case CapacityKind::LebesgueBorel:
      return a.total_length();
    case CapacityKind::Scaled:
      return factor_ * base_->measure(a);
  }
  return 0.0;
}

double Capacity::measure(const SimplexCellSet& a) const {
  switch (kind_) {
    case CapacityKind::DistortedLebesgue:
      return gamma_->apply(a.area());
    case CapacityKind::Possibility: {
      if (lambda_)
        throw std::invalid_argument(
            "interval possibility measure applied to a cell set");
      if (a.resolution() != possibility_resolution_ && !a.is_empty())
        throw std::invalid_argument("cell set resolution mismatch");
      double best = 0.0;
      for (int id : a.ids()) best = std::max(best, (*cell_sups_)[(*id_to_index_)[id]]);
      return best;
    }
    case CapacityKind::Dirac: {
      if (!dirac_on_simplex_)
        throw std::invalid_argument(
            "interval dirac measure applied to a cell set");
      if (a.is_empty()) return 0.0;
      SimplexGrid grid(a.resolution());
      for (int id : a.ids())
        if (grid.cell_contains(id, simplex_point_)) return 1.0;
      return 0.0;
    }
    case CapacityKind::LebesgueBorel:
      return a.area();
    case CapacityKind::Scaled:
      return factor_ * base_->measure(a);
  }
  return 0.0;
}

std::string Capacity::describe() const {
  switch (kind_) {
    case CapacityKind::DistortedLebesgue:
      return gamma_->describe() + "-lebesgue";
    case CapacityKind::Possibility:
      return lambda_ ? "possibility-" + lambda_->describe()
                     : "possibility-simplex";
    case CapacityKind::Dirac:
      if (dirac_on_simplex_)
        return "dirac(" + std::to_string(simplex_point_.x1) + "," +
               std::to_string(simplex_point_.x2) + ")";
      return "dirac(" + std::to_string(point_) + ")";
    case CapacityKind::LebesgueBorel:
      return "lebesgue";
    case CapacityKind::Scaled:
      return "scaled(" + std::to_string(factor_) + "," + base_->describe() +
             ")";
  }
  return "?";
}

}  // namespace bdc
