#ifndef BDC_CAPACITY_FAMILY_HPP
#define BDC_CAPACITY_FAMILY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bdc/capacity.hpp"

namespace bdc {

/// Family of capacities indexed by the basis terms of a degree-n operator:
/// one member per k = 0..n in one dimension, one per multi-index (in
/// lexicographic order) on the simplex.  Families are plain data; an
/// x-dependent family is expressed by passing a different family per
/// evaluation point.
class CapacityFamily {
 public:
  enum class Kind {
    Constant,
    PerIndex,
    Possibility,
    DiracTail,
    TwoMeasure,
    Genuine,
  };

  /// Same capacity for every index (any degree, any dimension).
  static CapacityFamily constant(Capacity mu);
  /// Explicit member list, one per basis index.
  static CapacityFamily per_index(std::vector<Capacity> members);
  /// Possibility measures induced by the normalized bumps of degree n.
  static CapacityFamily possibility(int n);
  /// Dirac measures at k/n for k < n, mu for the k = n term.
  static CapacityFamily dirac_tail(int n, Capacity mu);
  /// Borel measure delta for k < n, submodular mu for k = n; verifies the
  /// declared dominance mu <= delta on a deterministic set probe.
  static CapacityFamily two_measure(int n, Capacity delta, Capacity mu);
  /// Endpoint capacities nu0 (k = 0), nun (k = n) and middle members
  /// (k = 1..n-1) for the genuine operator.
  static CapacityFamily genuine(Capacity nu0, Capacity nun,
                                std::vector<Capacity> middle);
  static CapacityFamily genuine_constant_middle(int n, Capacity nu0,
                                                Capacity nun, Capacity middle);

  Kind kind() const { return kind_; }
  /// Number of explicit members; 0 means "constant, any index".
  int member_count() const { return static_cast<int>(members_.size()); }
  const Capacity& at(int index) const;
  std::string describe() const;

 private:
  CapacityFamily() = default;
  Kind kind_ = Kind::Constant;
  std::vector<Capacity> members_;  // single entry for Constant
};

}  // namespace bdc

#endif
