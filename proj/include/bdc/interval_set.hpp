#ifndef BDC_INTERVAL_SET_HPP
#define BDC_INTERVAL_SET_HPP

#include <vector>

namespace bdc {

/// Closed interval [lo, hi] inside [0,1].  lo == hi is a valid single point.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool operator==(const Interval&) const = default;
};

/// Canonical finite union of closed intervals in [0,1]: sorted by left
/// endpoint, pairwise disjoint, touching intervals merged.  Immutable after
/// construction; the empty set has no intervals.
class IntervalSet {
 public:
  IntervalSet() = default;

  /// Builds the canonical form from arbitrary intervals.  Rejects reversed
  /// intervals and endpoints outside [0,1].
  static IntervalSet canonicalize(std::vector<Interval> raw);

  /// Full domain [0,1].
  static IntervalSet full();

  static IntervalSet empty() { return IntervalSet(); }

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool is_empty() const { return intervals_.empty(); }
  std::size_t size() const { return intervals_.size(); }

  double total_length() const;
  bool contains(double x) const;

  bool operator==(const IntervalSet& other) const = default;

 private:
  std::vector<Interval> intervals_;
};

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_intersection(const IntervalSet& a, const IntervalSet& b);

}  // namespace bdc

#endif
