#include "bdc/capacity_family.hpp"

#include <stdexcept>

#include "bdc/common.hpp"
#include "bdc/random_sets.hpp"

namespace bdc {

CapacityFamily CapacityFamily::constant(Capacity mu) {
  CapacityFamily f;
  f.kind_ = Kind::Constant;
  f.members_.push_back(std::move(mu));
  return f;
}

CapacityFamily CapacityFamily::per_index(std::vector<Capacity> members) {
  if (members.empty())
    throw std::invalid_argument("per-index family needs at least one member");
  CapacityFamily f;
  f.kind_ = Kind::PerIndex;
  f.members_ = std::move(members);
  return f;
}

CapacityFamily CapacityFamily::possibility(int n) {
  if (n < 1) throw std::invalid_argument("possibility family needs n >= 1");
  CapacityFamily f;
  f.kind_ = Kind::Possibility;
  f.members_.reserve(n + 1);
  for (int k = 0; k <= n; ++k)
    f.members_.push_back(
        Capacity::possibility(UnimodalDistribution::bernstein_bump(n, k)));
  return f;
}

CapacityFamily CapacityFamily::dirac_tail(int n, Capacity mu) {
  if (n < 1) throw std::invalid_argument("dirac tail family needs n >= 1");
  CapacityFamily f;
  f.kind_ = Kind::DiracTail;
  f.members_.reserve(n + 1);
  for (int k = 0; k < n; ++k)
    f.members_.push_back(Capacity::dirac(static_cast<double>(k) / n));
  f.members_.push_back(std::move(mu));
  return f;
}

CapacityFamily CapacityFamily::two_measure(int n, Capacity delta,
                                           Capacity mu) {
  if (n < 1) throw std::invalid_argument("two-measure family needs n >= 1");
  if (!delta.flags().additive)
    throw config_error("two-measure family: delta must be an additive measure");
  if (auto violation = dominance_violation(mu, delta))
    throw config_error("two-measure family: dominance mu <= delta fails: " +
                       *violation);
  CapacityFamily f;
  f.kind_ = Kind::TwoMeasure;
  f.members_.assign(n, delta);
  f.members_.push_back(std::move(mu));
  return f;
}

CapacityFamily CapacityFamily::genuine(Capacity nu0, Capacity nun,
                                       std::vector<Capacity> middle) {
  CapacityFamily f;
  f.kind_ = Kind::Genuine;
  f.members_.push_back(std::move(nu0));
  f.members_.insert(f.members_.end(), middle.begin(), middle.end());
  f.members_.push_back(std::move(nun));
  return f;
}

CapacityFamily CapacityFamily::genuine_constant_middle(int n, Capacity nu0,
                                                       Capacity nun,
                                                       Capacity middle) {
  if (n < 2) throw std::invalid_argument("genuine family needs n >= 2");
  std::vector<Capacity> mids(n - 1, middle);
  return genuine(std::move(nu0), std::move(nun), std::move(mids));
}

const Capacity& CapacityFamily::at(int index) const {
  if (kind_ == Kind::Constant) return members_.front();
  if (index < 0 || index >= member_count())
    throw std::invalid_argument("capacity family index out of range");
  return members_[index];
}

std::string CapacityFamily::describe() const {
  switch (kind_) {
    case Kind::Constant:
      return "constant(" + members_.front().describe() + ")";
    case Kind::PerIndex:
      return "per-index[" + std::to_string(members_.size()) + "]";
    case Kind::Possibility:
      return "possibility-family(n=" +
             std::to_string(members_.size() - 1) + ")";
    case Kind::DiracTail:
      return "dirac-tail(" + members_.back().describe() + ")";
    case Kind::TwoMeasure:
      return "two-measure(" + members_.front().describe() + "," +
             members_.back().describe() + ")";
    case Kind::Genuine:
      return "genuine(" + members_.front().describe() + "," +
             members_.back().describe() + ")";
  }
  return "?";
}

}  // namespace bdc
