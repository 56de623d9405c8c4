#ifndef BDC_CAPACITY_HPP
#define BDC_CAPACITY_HPP

#include <memory>
#include <string>
#include <vector>

#include "bdc/interval_set.hpp"
#include "bdc/simplex_grid.hpp"

namespace bdc {

/// Increasing distortion gamma on [0,1] with gamma(0) = 0, applied to the
/// Lebesgue measure of a set.  The stock variants are concave; power
/// exponents outside (0,1] are only constructible through the unchecked
/// factory (negative-control testing).
class Distortion {
 public:
  enum class Kind { Sqrt, Sin, Power, Identity };

  static Distortion sqrt() { return Distortion(Kind::Sqrt, 0.5); }
  static Distortion sine() { return Distortion(Kind::Sin, 0.0); }
  static Distortion identity() { return Distortion(Kind::Identity, 1.0); }
  static Distortion power(double p);
  /// Skips the exponent range check; a convex gamma (p > 1) produces a
  /// non-submodular capacity.
  static Distortion power_unchecked(double p) {
    return Distortion(Kind::Power, p);
  }

  double apply(double u) const;
  Kind kind() const { return kind_; }
  double exponent() const { return p_; }
  bool is_concave() const { return kind_ != Kind::Power || p_ <= 1.0; }
  bool preserves_one() const;  // gamma(1) == 1
  std::string describe() const;

 private:
  Distortion(Kind k, double p) : kind_(k), p_(p) {}
  Kind kind_;
  double p_;
};

/// Possibility distribution on [0,1] with sup = 1.  Either the normalized
/// bump t^k (1-t)^(n-k) / peak (mode k/n, convention 0^0 = 1) or a tabulated
/// piecewise-linear distribution on a uniform node grid.
class UnimodalDistribution {
 public:
  static UnimodalDistribution bernstein_bump(int n, int k);
  static UnimodalDistribution tabulated(std::vector<double> node_values);

  double value(double t) const;
  /// Exact supremum over a closed interval.
  double sup_on(double lo, double hi) const;
  double mode() const;
  bool is_bump() const { return tabulated_.empty(); }
  int bump_n() const { return n_; }
  int bump_k() const { return k_; }
  bool strictly_positive_interior() const;
  std::string describe() const;

 private:
  UnimodalDistribution() = default;
  int n_ = 0, k_ = 0;
  double peak_ = 1.0;               // unnormalized max of the bump
  std::vector<double> tabulated_;   // empty for bumps
};

/// Max of t^k (1-t)^(n-k) over [0,1], attained at k/n (0^0 = 1).
double bump_peak_value(int n, int k);

struct CapacityFlags {
  bool monotone = true;
  bool submodular = false;
  bool additive = false;
  bool normalized = false;
  bool strictly_positive = false;
  bool continuous_from_below = true;
};

enum class CapacityKind {
  DistortedLebesgue,
  Possibility,
  Dirac,
  LebesgueBorel,
  Scaled,
};

/// Monotone set function evaluated on canonical interval unions (d = 1) or
/// triangle-cell unions (d = 2).  Structural flags are declared per variant,
/// not inferred; check_structure() provides randomized evidence only.
/// Immutable and freely shareable across threads.
class Capacity {
 public:
  static Capacity distorted_lebesgue(Distortion gamma);
  static Capacity possibility(UnimodalDistribution lambda);
  /// Possibility measure on a triangulated simplex; values[i] is the
  /// supremum of the distribution over the cell with the i-th valid id.
  static Capacity possibility_simplex(int resolution,
                                      std::vector<double> cell_sups);
  static Capacity dirac(double point);
  static Capacity dirac_simplex(SimplexPoint point);
  static Capacity lebesgue();
  static Capacity scaled(Capacity base, double factor);

  double measure(const IntervalSet& a) const;
  double measure(const SimplexCellSet& a) const;

  CapacityKind kind() const { return kind_; }
  const CapacityFlags& flags() const { return flags_; }
  const Distortion& distortion() const;
  const UnimodalDistribution& distribution() const;
  double dirac_point() const { return point_; }
  const SimplexPoint& dirac_simplex_point() const { return simplex_point_; }
  bool dirac_on_simplex() const { return dirac_on_simplex_; }
  double scale_factor() const { return factor_; }
  const Capacity& base() const { return *base_; }
  bool is_simplex_only() const;
  /// Per-cell suprema of a simplex possibility capacity, in valid-id order.
  bool has_simplex_possibility_table() const { return cell_sups_ != nullptr; }
  const std::vector<double>& simplex_possibility_table() const;
  int simplex_possibility_resolution() const { return possibility_resolution_; }

  std::string describe() const;

 private:
  Capacity() = default;
  CapacityKind kind_ = CapacityKind::LebesgueBorel;
  CapacityFlags flags_;
  std::shared_ptr<const Distortion> gamma_;
  std::shared_ptr<const UnimodalDistribution> lambda_;
  double point_ = 0.0;
  SimplexPoint simplex_point_;
  bool dirac_on_simplex_ = false;
  double factor_ = 1.0;
  std::shared_ptr<const Capacity> base_;
  // simplex possibility table
  int possibility_resolution_ = 0;
  std::shared_ptr<const std::vector<double>> cell_sups_;
  std::shared_ptr<const std::vector<int>> id_to_index_;
};

}  // namespace bdc

#endif
