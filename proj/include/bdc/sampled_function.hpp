#ifndef BDC_SAMPLED_FUNCTION_HPP
#define BDC_SAMPLED_FUNCTION_HPP

#include <functional>
#include <vector>

#include "bdc/interval_set.hpp"
#include "bdc/simplex_grid.hpp"

namespace bdc {

/// How node samples turn into the per-cell constants used by integration.
enum class CellMode { Midpoint, NodeAverage };

/// Nonnegative-or-signed grid function on [0,1]: M+1 node values on the
/// uniform grid plus the piecewise-constant cell interpretation.  Functions
/// built from a callable keep it, so point evaluations (Dirac coefficients,
/// endpoint interpolation) stay exact; integrals always use the cell values.
class SampledFunction1D {
 public:
  static SampledFunction1D from_function(std::function<double(double)> f,
                                         int cells,
                                         CellMode mode = CellMode::Midpoint);
  static SampledFunction1D from_nodes(std::vector<double> node_values,
                                      CellMode mode = CellMode::NodeAverage);
  /// Cell-first construction (node values interpolated); used when the
  /// function is only known through per-cell evaluations.
  static SampledFunction1D from_cell_values(std::vector<double> cell_values);

  int cells() const { return static_cast<int>(cell_values_.size()); }
  double step() const { return 1.0 / cells(); }
  const std::vector<double>& cell_values() const { return cell_values_; }
  const std::vector<double>& node_values() const { return node_values_; }
  double cell_value(int i) const { return cell_values_[i]; }
  Interval cell_interval(int i) const {
    const double h = step();
    return {i * h, (i + 1) * h};
  }
  CellMode mode() const { return mode_; }

  double min_cell() const;
  double max_cell() const;
  bool nonneg() const { return min_cell() >= 0.0; }

  bool has_evaluator() const { return static_cast<bool>(evaluator_); }
  /// Exact value when an evaluator is attached; otherwise the cell constant
  /// (maximum of the adjacent cells at a shared boundary, cells are closed).
  double point_value(double t) const;

  /// Pointwise transform; composes the evaluator when present.
  SampledFunction1D map(std::function<double(double)> op) const;
  /// Pointwise combination of two functions on the same grid.
  static SampledFunction1D combine(const SampledFunction1D& a,
                                   const SampledFunction1D& b,
                                   std::function<double(double, double)> op);

 private:
  std::vector<double> node_values_;
  std::vector<double> cell_values_;
  CellMode mode_ = CellMode::Midpoint;
  std::function<double(double)> evaluator_;
};

/// Grid function on the triangulated 2-simplex: one value per cell, indexed
/// in SimplexGrid::valid_ids() order.
class SampledFunctionSimplex {
 public:
  static SampledFunctionSimplex from_function(
      std::function<double(SimplexPoint)> f, int resolution);
  static SampledFunctionSimplex from_values(int resolution,
                                            std::vector<double> values);

  int resolution() const { return resolution_; }
  int cell_count() const { return static_cast<int>(cell_values_.size()); }
  const std::vector<double>& cell_values() const { return cell_values_; }
  double min_cell() const;
  double max_cell() const;
  bool nonneg() const { return min_cell() >= 0.0; }

  bool has_evaluator() const { return static_cast<bool>(evaluator_); }
  double point_value(const SimplexPoint& p) const;

  SampledFunctionSimplex map(std::function<double(double)> op) const;
  static SampledFunctionSimplex combine(
      const SampledFunctionSimplex& a, const SampledFunctionSimplex& b,
      std::function<double(double, double)> op);

 private:
  int resolution_ = 0;
  std::vector<double> cell_values_;
  std::function<double(SimplexPoint)> evaluator_;
};

}  // namespace bdc

#endif
