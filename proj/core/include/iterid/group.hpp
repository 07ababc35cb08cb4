#ifndef ITERID_GROUP_HPP
#define ITERID_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "iterid/element.hpp"
#include "iterid/group_descriptor.hpp"
#include "iterid/rng.hpp"

namespace iterid {

/// An element was handed to a group it does not belong to.
class BackendMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Group operations for one backend. Implementations are stateless after
/// construction (internal caches are thread-safe), so a handle can be shared
/// by concurrent workers.
class Group {
 public:
  explicit Group(GroupDescriptor desc) : desc_(std::move(desc)) {}
  virtual ~Group() = default;
  Group(const Group&) = delete;
  Group& operator=(const Group&) = delete;

  const GroupDescriptor& descriptor() const { return desc_; }
  std::string name() const { return format_group(desc_); }
  bool is_finite() const { return desc_.is_finite(); }
  std::uint64_t order() const { return desc_.order(); }

  virtual Element identity() const = 0;
  /// Product g*h. Permutations compose left to right: i^(gh) = (i^g)^h.
  virtual Element op(const Element& g, const Element& h) const = 0;
  virtual Element inv(const Element& g) const = 0;
  virtual bool equal(const Element& g, const Element& h) const { return g == h; }
  /// Consistent with equal().
  virtual std::size_t hash(const Element& g) const { return hash_value(g); }
  bool is_identity(const Element& g) const { return equal(g, identity()); }

  /// All elements, once each, in the backend's canonical order. Throws
  /// std::domain_error on infinite groups.
  virtual std::vector<Element> enumerate() const;
  /// Deterministic for a fixed generator state. size_bound limits entries,
  /// supports and word lengths on infinite backends.
  virtual Element random_element(Rng& rng, std::int64_t size_bound) const = 0;
  virtual std::vector<Element> generators() const = 0;

  /// Element literal grammar of this backend; "e" is the identity everywhere.
  virtual Element parse_element(std::string_view text) const = 0;
  /// Canonical text; parse_element(format(g)) == g.
  virtual std::string format(const Element& g) const = 0;

  /// Throws BackendMismatch unless g is a well-formed element of this group.
  virtual void check(const Element& g) const = 0;

  Element pow(const Element& g, std::int64_t k) const;
  /// g^y = y^-1 g y.
  Element conj(const Element& g, const Element& y) const;
  /// [g,h] = g^-1 h^-1 g h.
  Element commutator(const Element& g, const Element& h) const;

 private:
  GroupDescriptor desc_;
};

using GroupPtr = std::shared_ptr<const Group>;

/// Throws std::invalid_argument on invalid parameters.
GroupPtr make_group(const GroupDescriptor& desc);
GroupPtr make_group(std::string_view descriptor_text);

}  // namespace iterid

#endif  // ITERID_GROUP_HPP
