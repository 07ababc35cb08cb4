#include "iterid/group.hpp"

#include <stdexcept>

#include "backends.hpp"

namespace iterid {

std::vector<Element> Group::enumerate() const {
  throw std::domain_error("cannot enumerate infinite group " + name());
}

Element Group::pow(const Element& g, std::int64_t k) const {
  Element base = k >= 0 ? g : inv(g);
  std::uint64_t n = k >= 0 ? static_cast<std::uint64_t>(k) : 0 - static_cast<std::uint64_t>(k);
  Element result = identity();
  while (n > 0) {
    if (n & 1U) result = op(result, base);
    n >>= 1U;
    if (n > 0) base = op(base, base);
  }
  return result;
}

Element Group::conj(const Element& g, const Element& y) const { return op(op(inv(y), g), y); }

Element Group::commutator(const Element& g, const Element& h) const {
  return op(op(inv(g), inv(h)), op(g, h));
}

GroupPtr make_group(const GroupDescriptor& desc) {
  desc.validate();
  switch (desc.kind) {
    case GroupKind::kCyclic:
      return detail::make_cyclic_group(desc);
    case GroupKind::kFreeAbelian:
      return detail::make_free_abelian_group(desc);
    case GroupKind::kSymmetric:
    case GroupKind::kAlternating:
      return detail::make_permutation_group(desc);
    case GroupKind::kUnitriangular:
      return detail::make_unitriangular_group(desc);
    case GroupKind::kWreath:
      return detail::make_wreath_group(desc);
    case GroupKind::kInfUnitriShift:
      return detail::make_inf_unitri_group(desc);
    case GroupKind::kGrigorchuk:
      return detail::make_grigorchuk_group(desc);
    case GroupKind::kProduct:
      return detail::make_product_group(desc);
  }
  throw std::invalid_argument("unknown group kind");
}

GroupPtr make_group(std::string_view descriptor_text) { return make_group(parse_group(descriptor_text)); }

}  // namespace iterid
