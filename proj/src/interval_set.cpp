#include "bdc/interval_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace bdc {

IntervalSet IntervalSet::canonicalize(std::vector<Interval> raw) {
  for (const Interval& iv : raw) {
    if (!(iv.lo <= iv.hi))
      throw std::invalid_argument("interval with lo > hi");
    if (iv.lo < 0.0 || iv.hi > 1.0)
      throw std::invalid_argument("interval outside [0,1]");
  }
  std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });
  IntervalSet out;
  for (const Interval& iv : raw) {
    if (!out.intervals_.empty() && iv.lo <= out.intervals_.back().hi) {
      // closed intervals: touching endpoints merge
      out.intervals_.back().hi = std::max(out.intervals_.back().hi, iv.hi);
    } else {
      out.intervals_.push_back(iv);
    }
  }
  return out;
}

IntervalSet IntervalSet::full() {
  IntervalSet s;
  s.intervals_.push_back({0.0, 1.0});
  return s;
}

double IntervalSet::total_length() const {
  double len = 0.0;
  for (const Interval& iv : intervals_) len += iv.hi - iv.lo;
  return len;
}

bool IntervalSet::contains(double x) const {
  auto it = std::upper_bound(
      intervals_.begin(), intervals_.end(), x,
      [](double v, const Interval& iv) { return v < iv.lo; });
  if (it == intervals_.begin()) return false;
  --it;
  return x >= it->lo && x <= it->hi;
}

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> all = a.intervals();
  all.insert(all.end(), b.intervals().begin(), b.intervals().end());
  return IntervalSet::canonicalize(std::move(all));
}

IntervalSet set_intersection(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> out;
  std::size_t i = 0, j = 0;
  const auto& av = a.intervals();
  const auto& bv = b.intervals();
  while (i < av.size() && j < bv.size()) {
    const double lo = std::max(av[i].lo, bv[j].lo);
    const double hi = std::min(av[i].hi, bv[j].hi);
    if (lo <= hi) out.push_back({lo, hi});
    if (av[i].hi < bv[j].hi)
      ++i;
    else
      ++j;
  }
  return IntervalSet::canonicalize(std::move(out));
}

}  // namespace bdc
