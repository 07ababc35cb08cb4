#ifndef ITERID_FINITE_GROUP_HPP
#define ITERID_FINITE_GROUP_HPP

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "iterid/element.hpp"
#include "iterid/group.hpp"

namespace iterid {

/// Indexed view of a finite group. Element i is enumerate()[i]; index 0 is
/// always the identity. Products are tabulated when the order is at most
/// kMaxCayleyTable, otherwise computed on demand.
class FiniteGroup {
 public:
  static constexpr std::uint64_t kMaxCayleyTable = 1024;
  /// Larger groups are rejected rather than enumerated.
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 22;

  /// Throws std::domain_error for infinite or oversized groups.
  explicit FiniteGroup(GroupPtr group);

  const Group& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const Element& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
  const std::vector<Element>& elements() const { return elements_; }
  /// Throws std::out_of_range if g is not in the group.
  int index_of(const Element& g) const;

  int identity() const { return 0; }
  int op(int a, int b) const;
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int commutator(int a, int b) const;
  int element_order(int a) const;

 private:
  GroupPtr group_;
  std::vector<Element> elements_;
  std::unordered_map<Element, int, ElementHash> index_;
  std::vector<int> table_;
  std::vector<int> inverse_;
};

using ElementSet = std::vector<int>;

/// Subgroup generated by gens as sorted element indices; {identity} when
/// gens is empty.
ElementSet generated_subgroup(const FiniteGroup& g, const ElementSet& gens);

/// G = G0 >= G1 >= ... until two consecutive terms agree. The last term is
/// the trivial subgroup iff G is solvable.
std::vector<ElementSet> derived_series(const FiniteGroup& g);
/// G = g1 >= g2 = [G,G] >= g3 = [g2,G] ... until stable.
std::vector<ElementSet> lower_central_series(const FiniteGroup& g);

bool is_solvable(const FiniteGroup& g);
bool is_nilpotent(const FiniteGroup& g);
/// Number of strict steps down to {e}; -1 when not solvable.
int derived_length(const FiniteGroup& g);

}  // namespace iterid

#endif  // ITERID_FINITE_GROUP_HPP
