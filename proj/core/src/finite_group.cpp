#include "iterid/finite_group.hpp"

#include <stdexcept>
#include <string>

namespace iterid {

FiniteGroup::FiniteGroup(GroupPtr group) : group_(std::move(group)) {
  if (!group_->is_finite()) throw std::domain_error(group_->name() + " is infinite");
  if (group_->order() > kMaxOrder) {
    throw std::domain_error(group_->name() + " has order " + std::to_string(group_->order()) +
                            ", above the enumeration limit");
  }
  elements_ = group_->enumerate();
  if (elements_.size() != group_->order() || !group_->is_identity(elements_.front())) {
    throw std::logic_error("enumeration of " + group_->name() + " is inconsistent");
  }
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], static_cast<int>(i));
  const std::size_t n = elements_.size();
  if (n <= kMaxCayleyTable) {
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) table_[a * n + b] = index_of(group_->op(elements_[a], elements_[b]));
    }
  }
  inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) inverse_[a] = index_of(group_->inv(elements_[a]));
}

int FiniteGroup::index_of(const Element& g) const {
  const auto it = index_.find(g);
  if (it == index_.end()) throw std::out_of_range("element not in " + group_->name());
  return it->second;
}

int FiniteGroup::op(int a, int b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * elements_.size() + static_cast<std::size_t>(b)];
  return index_of(group_->op(element(a), element(b)));
}

int FiniteGroup::commutator(int a, int b) const { return op(op(inv(a), inv(b)), op(a, b)); }

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != 0; x = op(x, a)) ++k;
  return k;
}

}  // namespace iterid
