#ifndef ITERID_ELEMENT_HPP
#define ITERID_ELEMENT_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace iterid {

class Element;

/// cyclic(m): residue in 0..m-1.
struct Residue {
  std::int64_t value = 0;
  bool operator==(const Residue&) const = default;
  auto operator<=>(const Residue&) const = default;
};

/// zd(d): integer vector.
struct IntVector {
  std::vector<std::int64_t> v;
  bool operator==(const IntVector&) const = default;
  auto operator<=>(const IntVector&) const = default;
};

/// sym(n) / alt(n): image[i] is the image of point i (0-based).
struct Permutation {
  std::vector<std::uint8_t> image;
  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;
};

/// unitri(n, m): strictly upper entries, row-major (1,2),(1,3),...,(n-1,n).
struct UnitriMatrix {
  int n = 1;
  std::vector<std::int64_t> entries;
  bool operator==(const UnitriMatrix&) const = default;
  auto operator<=>(const UnitriMatrix&) const = default;
};

/// wreath(L, B): base translation plus finitely supported lamps. positions
/// is strictly increasing and no stored lamp is the identity.
struct WreathElement {
  std::int64_t base = 0;
  std::vector<std::int64_t> positions;
  std::vector<Element> lamps;
};

/// infunitri: shift plus a finitely supported strictly upper matrix over Z,
/// entries sorted by (i, j) and nonzero.
struct ShiftMatrix {
  struct Entry {
    std::int64_t i = 0;
    std::int64_t j = 0;
    std::int64_t v = 0;
    bool operator==(const Entry&) const = default;
    auto operator<=>(const Entry&) const = default;
  };
  std::int64_t shift = 0;
  std::vector<Entry> entries;
  bool operator==(const ShiftMatrix&) const = default;
  auto operator<=>(const ShiftMatrix&) const = default;
};

/// grigorchuk: reduced word over a, b, c, d.
struct GrigorchukWord {
  std::string letters;
  bool operator==(const GrigorchukWord&) const = default;
  auto operator<=>(const GrigorchukWord&) const = default;
};

struct ProductElement {
  std::vector<Element> parts;
};

/// A backend-tagged group element. Structural equality coincides with group
/// equality for every backend except grigorchuk, whose words are only
/// reduced locally; use Group::equal there.
class Element {
 public:
  using Payload = std::variant<Residue, IntVector, Permutation, UnitriMatrix, WreathElement,
                               ShiftMatrix, GrigorchukWord, ProductElement>;

  Element() = default;
  template <typename T>
  Element(T payload) : payload_(std::move(payload)) {}  // NOLINT(google-explicit-constructor)

  const Payload& payload() const { return payload_; }
  template <typename T>
  const T& as() const { return std::get<T>(payload_); }
  template <typename T>
  bool holds() const { return std::holds_alternative<T>(payload_); }

  friend bool operator==(const Element& a, const Element& b);
  friend bool operator<(const Element& a, const Element& b);

 private:
  Payload payload_;
};

bool operator==(const WreathElement& a, const WreathElement& b);
bool operator<(const WreathElement& a, const WreathElement& b);
bool operator==(const ProductElement& a, const ProductElement& b);
bool operator<(const ProductElement& a, const ProductElement& b);

/// Structural hash, consistent with operator==.
std::size_t hash_value(const Element& e);

struct ElementHash {
  std::size_t operator()(const Element& e) const { return hash_value(e); }
};

}  // namespace iterid

#endif  // ITERID_ELEMENT_HPP
