#include "iterid/projections.hpp"

#include <stdexcept>

#include "checked.hpp"

namespace iterid {

namespace {

void require_wreath(const GroupDescriptor& d) {
  if (d.kind != GroupKind::kWreath) throw std::invalid_argument(format_group(d) + " is not a wreath product");
}

}  // namespace

GroupDescriptor lamp_projection_target(const GroupDescriptor& source, std::int64_t m) {
  require_wreath(source);
  const GroupDescriptor& lamp = source.lamp();
  const bool integer_lamps = lamp.kind == GroupKind::kFreeAbelian && lamp.size == 1;
  const bool cyclic_lamps = lamp.kind == GroupKind::kCyclic && m >= 1 && lamp.size % m == 0;
  if (m < 1 || !(integer_lamps || cyclic_lamps)) {
    throw std::invalid_argument("cannot reduce lamps of " + format_group(source) + " modulo " + std::to_string(m));
  }
  return GroupDescriptor::wreath(GroupDescriptor::cyclic(m), source.base);
}

Element lamp_projection(const GroupDescriptor& source, const Element& g, std::int64_t m) {
  (void)lamp_projection_target(source, m);
  if (!g.holds<WreathElement>()) throw std::invalid_argument("expected a wreath element");
  const auto& w = g.as<WreathElement>();
  const bool integer_lamps = source.lamp().kind == GroupKind::kFreeAbelian;
  WreathElement out;
  out.base = w.base;
  for (std::size_t i = 0; i < w.positions.size(); ++i) {
    const std::int64_t v = integer_lamps ? w.lamps[i].as<IntVector>().v.at(0) : w.lamps[i].as<Residue>().value;
    const std::int64_t r = detail::mod(v, m);
    if (r == 0) continue;
    out.positions.push_back(w.positions[i]);
    out.lamps.emplace_back(Residue{r});
  }
  return out;
}

GroupDescriptor base_projection_target(const GroupDescriptor& source) {
  if (source.kind == GroupKind::kInfUnitriShift) return GroupDescriptor::integers();
  require_wreath(source);
  return source.base == 0 ? GroupDescriptor::integers() : GroupDescriptor::cyclic(source.base);
}

Element base_projection(const GroupDescriptor& source, const Element& g) {
  if (source.kind == GroupKind::kInfUnitriShift) {
    if (!g.holds<ShiftMatrix>()) throw std::invalid_argument("expected an infunitri element");
    return IntVector{{g.as<ShiftMatrix>().shift}};
  }
  require_wreath(source);
  if (!g.holds<WreathElement>()) throw std::invalid_argument("expected a wreath element");
  const std::int64_t t = g.as<WreathElement>().base;
  if (source.base == 0) return IntVector{{t}};
  return Residue{t};
}

}  // namespace iterid
