#ifndef ITERID_PROJECTIONS_HPP
#define ITERID_PROJECTIONS_HPP

#include <cstdint>

#include "iterid/element.hpp"
#include "iterid/group_descriptor.hpp"

namespace iterid {

/// wreath(L, B) -> wreath(cyclic(m), B) reducing every lamp mod m. L must be
/// int or cyclic(M) with m dividing M.
GroupDescriptor lamp_projection_target(const GroupDescriptor& source, std::int64_t m);
Element lamp_projection(const GroupDescriptor& source, const Element& g, std::int64_t m);

/// Quotient by the lamp subgroup (wreath) or by the matrix part (infunitri).
/// The target is the wreath base (int or cyclic(k)); infunitri maps to int.
GroupDescriptor base_projection_target(const GroupDescriptor& source);
Element base_projection(const GroupDescriptor& source, const Element& g);

}  // namespace iterid

#endif  // ITERID_PROJECTIONS_HPP
