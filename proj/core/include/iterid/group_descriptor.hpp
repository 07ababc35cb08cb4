#ifndef ITERID_GROUP_DESCRIPTOR_HPP
#define ITERID_GROUP_DESCRIPTOR_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace iterid {

enum class GroupKind {
  kCyclic,
  kFreeAbelian,
  kSymmetric,
  kAlternating,
  kUnitriangular,
  kWreath,
  kInfUnitriShift,
  kGrigorchuk,
  kProduct,
};

/// Selects a concrete group backend.
///
///   cyclic(m)          size = m
///   zd(d), "int"=zd(1) size = d
///   sym(n), alt(n)     size = n
///   unitri(n[,m])      size = n, modulus = m (0 means integer entries)
///   wreath(L,B)        children = {L}, base = k for cyclic(k), 0 for int
///   infunitri, grigorchuk
///   product(G1,...)    children = factors
struct GroupDescriptor {
  GroupKind kind = GroupKind::kCyclic;
  std::int64_t size = 1;
  std::int64_t modulus = 0;
  std::int64_t base = 0;
  std::vector<GroupDescriptor> children;

  static GroupDescriptor cyclic(std::int64_t m);
  static GroupDescriptor free_abelian(std::int64_t d);
  static GroupDescriptor integers() { return free_abelian(1); }
  static GroupDescriptor symmetric(std::int64_t n);
  static GroupDescriptor alternating(std::int64_t n);
  static GroupDescriptor unitriangular(std::int64_t n, std::int64_t modulus = 0);
  /// base_cyclic = 0 selects the integers as base group.
  static GroupDescriptor wreath(GroupDescriptor lamp, std::int64_t base_cyclic);
  static GroupDescriptor inf_unitri_shift();
  static GroupDescriptor grigorchuk();
  static GroupDescriptor product(std::vector<GroupDescriptor> factors);

  const GroupDescriptor& lamp() const { return children.at(0); }

  bool is_finite() const;
  /// Throws std::domain_error for infinite groups and std::overflow_error when
  /// the order does not fit in 64 bits.
  std::uint64_t order() const;

  /// Throws std::invalid_argument if a parameter is out of range.
  void validate() const;

  bool operator==(const GroupDescriptor&) const = default;
};

/// Parses the descriptor mini-language, e.g. "wreath(cyclic(4),int)".
/// Throws ParseError on syntax errors and std::invalid_argument on bad
/// parameters.
GroupDescriptor parse_group(std::string_view text);
std::string format_group(const GroupDescriptor& desc);

}  // namespace iterid

#endif  // ITERID_GROUP_DESCRIPTOR_HPP
