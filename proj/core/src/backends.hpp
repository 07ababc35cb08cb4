#ifndef ITERID_SRC_BACKENDS_HPP
#define ITERID_SRC_BACKENDS_HPP

#include "iterid/group.hpp"

namespace iterid::detail {

GroupPtr make_cyclic_group(const GroupDescriptor& desc);
GroupPtr make_free_abelian_group(const GroupDescriptor& desc);
GroupPtr make_permutation_group(const GroupDescriptor& desc);
GroupPtr make_unitriangular_group(const GroupDescriptor& desc);
GroupPtr make_product_group(const GroupDescriptor& desc);
GroupPtr make_wreath_group(const GroupDescriptor& desc);
GroupPtr make_inf_unitri_group(const GroupDescriptor& desc);
GroupPtr make_grigorchuk_group(const GroupDescriptor& desc);

/// Odometer over per-coordinate element lists, first coordinate most
/// significant.
template <typename F>
void for_each_tuple(const std::vector<std::size_t>& sizes, F&& visit) {
  std::vector<std::size_t> idx(sizes.size(), 0);
  for (auto s : sizes) {
    if (s == 0) return;
  }
  while (true) {
    visit(idx);
    std::size_t k = idx.size();
    while (true) {
      if (k == 0) return;
      --k;
      if (++idx[k] < sizes[k]) break;
      idx[k] = 0;
    }
  }
}

}  // namespace iterid::detail

#endif  // ITERID_SRC_BACKENDS_HPP
